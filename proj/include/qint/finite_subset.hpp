#pragma once

/// Subsets of a finite sample space {0, ..., space_size-1}.

#include <cstdint>
#include <vector>

namespace qint {

class FiniteSubset {
 public:
  FiniteSubset() = default;

  /// Empty subset of a space with `space_size` outcomes.
  explicit FiniteSubset(std::uint32_t space_size);

  /// Subset with the given member indices (deduplicated, each < space_size).
  FiniteSubset(std::uint32_t space_size, std::vector<std::uint32_t> members);

  static FiniteSubset full(std::uint32_t space_size);

  std::uint32_t space_size() const { return space_size_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t cardinality() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::uint32_t idx) const;

  FiniteSubset unite(const FiniteSubset& other) const;
  FiniteSubset intersect(const FiniteSubset& other) const;
  FiniteSubset complement() const;
  bool disjoint_from(const FiniteSubset& other) const;

  friend bool operator==(const FiniteSubset&, const FiniteSubset&) = default;

 private:
  void check_same_space(const FiniteSubset& other) const;

  std::uint32_t space_size_ = 0;
  std::vector<std::uint32_t> members_;  // sorted, unique
};

}  // namespace qint

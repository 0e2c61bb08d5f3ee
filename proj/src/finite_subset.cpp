#include "qint/finite_subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace qint {

FiniteSubset::FiniteSubset(std::uint32_t space_size) : space_size_(space_size) {
  if (space_size == 0) throw std::invalid_argument("FiniteSubset: space_size must be positive");
}

FiniteSubset::FiniteSubset(std::uint32_t space_size, std::vector<std::uint32_t> members)
    : FiniteSubset(space_size) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= space_size) {
    throw std::invalid_argument("FiniteSubset: member index out of range");
  }
  members_ = std::move(members);
}

FiniteSubset FiniteSubset::full(std::uint32_t space_size) {
  std::vector<std::uint32_t> all(space_size);
  for (std::uint32_t i = 0; i < space_size; ++i) all[i] = i;
  return FiniteSubset(space_size, std::move(all));
}

bool FiniteSubset::contains(std::uint32_t idx) const {
  return std::binary_search(members_.begin(), members_.end(), idx);
}

void FiniteSubset::check_same_space(const FiniteSubset& other) const {
  if (space_size_ != other.space_size_) {
    throw std::invalid_argument("FiniteSubset: operands live in different spaces");
  }
}

FiniteSubset FiniteSubset::unite(const FiniteSubset& other) const {
  check_same_space(other);
  std::vector<std::uint32_t> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  return FiniteSubset(space_size_, std::move(out));
}

FiniteSubset FiniteSubset::intersect(const FiniteSubset& other) const {
  check_same_space(other);
  std::vector<std::uint32_t> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return FiniteSubset(space_size_, std::move(out));
}

FiniteSubset FiniteSubset::complement() const {
  std::vector<std::uint32_t> out;
  out.reserve(space_size_ - members_.size());
  auto it = members_.begin();
  for (std::uint32_t i = 0; i < space_size_; ++i) {
    if (it != members_.end() && *it == i) {
      ++it;
    } else {
      out.push_back(i);
    }
  }
  return FiniteSubset(space_size_, std::move(out));
}

bool FiniteSubset::disjoint_from(const FiniteSubset& other) const {
  return intersect(other).empty();
}

}  // namespace qint

#pragma once

/// Finite disjoint unions of half-open subintervals of [0,1].
///
/// IntervalSet is the measurable-set currency for every continuum
/// q-measure in this library.  Sets are normalized on construction:
/// parts are sorted, overlapping or touching parts are merged, and
/// slivers shorter than kNormEps are dropped.  All operations return
/// new normalized sets; instances are immutable after construction.

#include <cstddef>
#include <utility>
#include <vector>

namespace qint {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class IntervalSet {
 public:
  /// Slivers (intervals or gaps) shorter than this are normalized away.
  static constexpr double kNormEps = 1e-15;

  IntervalSet() = default;

  /// Single interval [lo, hi).  Requires 0 <= lo <= hi <= 1.
  IntervalSet(double lo, double hi);

  /// Arbitrary parts, normalized.  Each pair must satisfy
  /// 0 <= lo <= hi <= 1; empty pairs (lo == hi) are allowed and dropped.
  explicit IntervalSet(std::vector<std::pair<double, double>> parts);

  static IntervalSet empty_set() { return IntervalSet(); }
  static IntervalSet unit() { return IntervalSet(0.0, 1.0); }

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  double total_length() const;
  bool contains(double x) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;

  /// Complement relative to [0,1).
  IntervalSet complement() const;

  /// Shifts every part by `shift` and clips to [0,1].  |shift| <= 1.
  IntervalSet translate(double shift) const;

  /// True when the intersection with `other` is empty after normalization.
  bool disjoint_from(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  // Skips validation; input must already be clipped to [0,1].
  static IntervalSet normalized(std::vector<Interval> raw);

  std::vector<Interval> parts_;
};

// Free-function spellings used throughout the library.
IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_complement(const IntervalSet& a);
IntervalSet interval_translate(const IntervalSet& a, double shift);

}  // namespace qint

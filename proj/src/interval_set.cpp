#include "qint/interval_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qint {

namespace {

void check_endpoints(double lo, double hi) {
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo <= hi)) {
    throw std::invalid_argument("IntervalSet: endpoints must satisfy 0 <= lo <= hi <= 1, got [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
}

}  // namespace

IntervalSet::IntervalSet(double lo, double hi) {
  check_endpoints(lo, hi);
  if (hi - lo >= kNormEps) parts_.push_back({lo, hi});
}

IntervalSet::IntervalSet(std::vector<std::pair<double, double>> parts) {
  std::vector<Interval> raw;
  raw.reserve(parts.size());
  for (const auto& [lo, hi] : parts) {
    check_endpoints(lo, hi);
    raw.push_back({lo, hi});
  }
  *this = normalized(std::move(raw));
}

IntervalSet IntervalSet::normalized(std::vector<Interval> raw) {
  std::erase_if(raw, [](const Interval& iv) { return iv.hi - iv.lo < kNormEps; });
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet out;
  for (const Interval& iv : raw) {
    if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi + kNormEps) {
      out.parts_.back().hi = std::max(out.parts_.back().hi, iv.hi);
    } else {
      out.parts_.push_back(iv);
    }
  }
  return out;
}

double IntervalSet::total_length() const {
  double sum = 0.0;
  for (const Interval& iv : parts_) sum += iv.length();
  return sum;
}

bool IntervalSet::contains(double x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return x >= it->lo && x < it->hi;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> raw = parts_;
  raw.insert(raw.end(), other.parts_.begin(), other.parts_.end());
  return normalized(std::move(raw));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> raw;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    double lo = std::max(a.lo, b.lo);
    double hi = std::min(a.hi, b.hi);
    if (hi - lo >= kNormEps) raw.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return normalized(std::move(raw));
}

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> raw;
  double cursor = 0.0;
  for (const Interval& iv : parts_) {
    if (iv.lo - cursor >= kNormEps) raw.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (1.0 - cursor >= kNormEps) raw.push_back({cursor, 1.0});
  return normalized(std::move(raw));
}

IntervalSet IntervalSet::translate(double shift) const {
  if (!(shift >= -1.0 && shift <= 1.0)) {
    throw std::invalid_argument("IntervalSet::translate: |shift| must be <= 1");
  }
  std::vector<Interval> raw;
  for (const Interval& iv : parts_) {
    double lo = std::clamp(iv.lo + shift, 0.0, 1.0);
    double hi = std::clamp(iv.hi + shift, 0.0, 1.0);
    if (hi - lo >= kNormEps) raw.push_back({lo, hi});
  }
  return normalized(std::move(raw));
}

bool IntervalSet::disjoint_from(const IntervalSet& other) const {
  return intersect(other).empty();
}

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) { return a.unite(b); }
IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b) {
  return a.intersect(b);
}
IntervalSet interval_complement(const IntervalSet& a) { return a.complement(); }
IntervalSet interval_translate(const IntervalSet& a, double shift) { return a.translate(shift); }

}  // namespace qint

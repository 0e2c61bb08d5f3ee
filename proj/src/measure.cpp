#include "qint/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qint {

QMeasure QMeasure::lebesgue_squared() {
  QMeasure m;
  m.kind_ = MeasureKind::kLebesgueSquared;
  return m;
}

QMeasure QMeasure::destructive_pairs(double offset) {
  if (!(offset >= 0.5 && offset <= 1.0)) {
    throw std::invalid_argument(
        "QMeasure::destructive_pairs: offset must lie in [1/2, 1]; smaller offsets can "
        "produce negative values");
  }
  QMeasure m;
  m.kind_ = MeasureKind::kDestructivePairs;
  m.offset_ = offset;
  return m;
}

QMeasure QMeasure::plain_lebesgue() {
  QMeasure m;
  m.kind_ = MeasureKind::kPlainLebesgue;
  return m;
}

QMeasure QMeasure::squared_counting(std::uint32_t n) {
  if (n == 0 || n > 25) {
    throw std::invalid_argument("QMeasure::squared_counting: flips must lie in [1, 25]");
  }
  QMeasure m;
  m.kind_ = MeasureKind::kSquaredCounting;
  m.flips_ = n;
  m.domain_ = {true, static_cast<std::uint32_t>(1u << n)};
  return m;
}

QMeasure QMeasure::squared_weights(std::vector<double> weights) {
  if (weights.empty()) throw std::invalid_argument("QMeasure::squared_weights: empty weights");
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("QMeasure::squared_weights: weights must be nonnegative");
    }
  }
  QMeasure m;
  m.kind_ = MeasureKind::kSquaredWeights;
  m.domain_ = {true, static_cast<std::uint32_t>(weights.size())};
  m.weights_ = std::move(weights);
  return m;
}

double QMeasure::operator()(const IntervalSet& a) const {
  switch (kind_) {
    case MeasureKind::kLebesgueSquared: {
      double len = a.total_length();
      return len * len;
    }
    case MeasureKind::kPlainLebesgue:
      return a.total_length();
    case MeasureKind::kDestructivePairs: {
      // Pairs (x, x+d) with both points in A annihilate.
      IntervalSet annihilated = a.intersect(a.translate(-offset_));
      return a.total_length() - 2.0 * annihilated.total_length();
    }
    default:
      throw std::invalid_argument("QMeasure: interval set passed to a finite-space measure");
  }
}

double QMeasure::operator()(const FiniteSubset& a) const {
  if (!domain_.finite) {
    throw std::invalid_argument("QMeasure: finite subset passed to a continuum measure");
  }
  if (a.space_size() != domain_.space_size) {
    throw std::invalid_argument("QMeasure: subset space size " + std::to_string(a.space_size()) +
                                " does not match measure space size " +
                                std::to_string(domain_.space_size));
  }
  switch (kind_) {
    case MeasureKind::kSquaredCounting: {
      double frac = std::ldexp(static_cast<double>(a.cardinality()), -static_cast<int>(flips_));
      return frac * frac;
    }
    case MeasureKind::kSquaredWeights: {
      double sum = 0.0;
      for (std::uint32_t idx : a.members()) sum += weights_[idx];
      return sum * sum;
    }
    default:
      throw std::invalid_argument("QMeasure: unexpected finite-space kind");
  }
}

double QMeasure::operator()(const MeasurableSet& a) const {
  return std::visit([this](const auto& s) { return (*this)(s); }, a);
}

double QMeasure::total() const {
  if (domain_.finite) return (*this)(FiniteSubset::full(domain_.space_size));
  return (*this)(IntervalSet::unit());
}

double measure(const QMeasure& mu, const MeasurableSet& a) { return mu(a); }

namespace {

template <typename Set>
double residual_impl(const QMeasure& mu, const Set& a, const Set& b, const Set& c) {
  if (!a.disjoint_from(b) || !a.disjoint_from(c) || !b.disjoint_from(c)) {
    throw std::invalid_argument("grade2_residual: sets must be pairwise disjoint");
  }
  Set ab = a.unite(b);
  Set ac = a.unite(c);
  Set bc = b.unite(c);
  Set abc = ab.unite(c);
  return mu(abc) + mu(a) + mu(b) + mu(c) - mu(ab) - mu(ac) - mu(bc);
}

}  // namespace

double grade2_residual(const QMeasure& mu, const MeasurableSet& a, const MeasurableSet& b,
                       const MeasurableSet& c) {
  if (std::holds_alternative<IntervalSet>(a) && std::holds_alternative<IntervalSet>(b) &&
      std::holds_alternative<IntervalSet>(c)) {
    return residual_impl(mu, std::get<IntervalSet>(a), std::get<IntervalSet>(b),
                         std::get<IntervalSet>(c));
  }
  if (std::holds_alternative<FiniteSubset>(a) && std::holds_alternative<FiniteSubset>(b) &&
      std::holds_alternative<FiniteSubset>(c)) {
    return residual_impl(mu, std::get<FiniteSubset>(a), std::get<FiniteSubset>(b),
                         std::get<FiniteSubset>(c));
  }
  throw std::invalid_argument("grade2_residual: mixed set domains");
}

}  // namespace qint

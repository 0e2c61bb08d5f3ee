#pragma once

/// Q-measures: grade-2 additive set functions into the nonnegative reals.
///
/// A q-measure mu satisfies, for pairwise disjoint A, B, C,
///
///   mu(A+B+C) = mu(A+B) + mu(A+C) + mu(B+C) - mu(A) - mu(B) - mu(C)
///
/// but is generally not additive.  Five kinds are provided:
///
///   LebesgueSquared    mu(A) = len(A)^2                     on [0,1]
///   DestructivePairs   mu(A) = len(A) - 2 len({x in A : x+d in A}),
///                      offset d in [1/2, 1]                 on [0,1]
///   PlainLebesgue      mu(A) = len(A)   (the additive control case)
///   SquaredCounting    mu(A) = |A|^2 / 2^(2n)   on a 2^n-outcome space
///   SquaredWeights     mu(A) = (sum of weights over A)^2    on a finite space
///
/// DestructivePairs offsets below 1/2 are rejected at construction: the
/// annihilated pair set and its translate can then overlap, which makes
/// negative values possible.

#include <cstdint>
#include <variant>
#include <vector>

#include "qint/finite_subset.hpp"
#include "qint/interval_set.hpp"

namespace qint {

/// A measurable set in either supported domain.
using MeasurableSet = std::variant<IntervalSet, FiniteSubset>;

enum class MeasureKind {
  kLebesgueSquared,
  kDestructivePairs,
  kPlainLebesgue,
  kSquaredCounting,
  kSquaredWeights,
};

struct Domain {
  bool finite = false;
  std::uint32_t space_size = 0;  // meaningful when finite

  friend bool operator==(const Domain&, const Domain&) = default;
};

class QMeasure {
 public:
  static QMeasure lebesgue_squared();
  static QMeasure destructive_pairs(double offset);
  static QMeasure plain_lebesgue();
  /// n = number of coin flips; the space has 2^n outcomes.
  static QMeasure squared_counting(std::uint32_t n);
  static QMeasure squared_weights(std::vector<double> weights);

  MeasureKind kind() const { return kind_; }
  const Domain& domain() const { return domain_; }
  double offset() const { return offset_; }
  std::uint32_t flips() const { return flips_; }
  const std::vector<double>& weights() const { return weights_; }

  double operator()(const IntervalSet& a) const;
  double operator()(const FiniteSubset& a) const;
  double operator()(const MeasurableSet& a) const;

  /// mu of the whole space.
  double total() const;

 private:
  QMeasure() = default;

  MeasureKind kind_ = MeasureKind::kLebesgueSquared;
  Domain domain_;
  double offset_ = 0.0;          // DestructivePairs
  std::uint32_t flips_ = 0;      // SquaredCounting
  std::vector<double> weights_;  // SquaredWeights
};

double measure(const QMeasure& mu, const MeasurableSet& a);

/// mu(A+B+C) + mu(A) + mu(B) + mu(C) - mu(A+B) - mu(A+C) - mu(B+C)
/// for pairwise disjoint A, B, C; throws on non-disjoint inputs.
/// Zero (to rounding) for every QMeasure kind.
double grade2_residual(const QMeasure& mu, const MeasurableSet& a, const MeasurableSet& b,
                       const MeasurableSet& c);

}  // namespace qint

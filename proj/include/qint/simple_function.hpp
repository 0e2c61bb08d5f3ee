#pragma once

/// Simple functions f = sum_i alpha_i chi_{A_i} over a disjoint partition of
/// the space, and their exact a-centered quantum integral.
///
/// With the values sorted (ties merged by uniting supports) the two layer
/// integrals collapse to finite sums over the value plateaus:
///
///   I_a(f) = sum over plateaus above a of width * mu(upper tail union)
///          - sum over plateaus below a of width * mu(lower head union)
///
/// which is exact up to floating-point rounding -- no quadrature involved.

#include <utility>
#include <vector>

#include "qint/measure.hpp"

namespace qint {

class SimpleFunction {
 public:
  using Piece = std::pair<double, MeasurableSet>;

  /// Pieces must have pairwise disjoint supports whose union is the whole
  /// space; a partition that does not cover the space is rejected, never
  /// silently completed with a zero piece.
  explicit SimpleFunction(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool finite_domain() const { return finite_; }

  /// Pieces with equal values merged and sorted by ascending value.
  std::vector<Piece> sorted_merged() const;

 private:
  std::vector<Piece> pieces_;
  bool finite_ = false;
};

/// Exact a-centered quantum integral of a simple function.
double integrate_simple(const SimpleFunction& f, const QMeasure& mu, double center = 0.0);

}  // namespace qint

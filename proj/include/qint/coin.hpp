#pragma once

/// Quantum-coin expectations, computed exactly.
///
/// For n flips the sample space has 2^n outcomes weighted by the squared
/// counting q-measure mu_n(A) = |A|^2 / 2^(2n), and f_n counts heads.  The
/// quantum expectation a_n = I(f_n) collapses to the exact sum
///
///   a_n = ( sum_{k=0}^{n-1} (C(n,0) + ... + C(n,k))^2 ) / 2^(2n),
///
/// with the closed form a_n = (n/2) (1 - C(2n,n) / 2^(2n)).  Everything here
/// is integer arithmetic; decimals appear only at the formatting boundary
/// with explicit round-half-even digit counts.

#include <cstdint>
#include <string>
#include <vector>

#include "qint/rational.hpp"
#include "qint/simple_function.hpp"

namespace qint {

/// a_n from the squared prefix sums of Pascal row n.
BigRational expectation_exact(int n);

/// a_n from the closed form; equals expectation_exact(n) for every n.
BigRational expectation_closed(int n);

/// 2 a_n / n, the ratio that climbs to 1.
BigRational expectation_ratio(int n);

struct RatioRow {
  int n = 0;
  BigRational a_n;
  std::string ratio;  // 2 a_n / n as a decimal string
};

/// Rows for n = 1..n_max, computed in one pass over Pascal's triangle.
std::vector<RatioRow> ratio_table(int n_max, int digits = 10);

/// a_n <= n/2, checked in exact arithmetic.
bool bound_check(int n);

/// The a-centered quantum expectation for two flips, in closed piecewise-
/// linear form (slopes -1, -5/8, -5/8, -1 on the four pieces).
double centered_two_flip(double a);

/// The head-count random variable on the explicit 2^n-outcome space, as a
/// simple function suitable for integrate_simple under squared_counting(n).
SimpleFunction coin_head_count(int n);

}  // namespace qint

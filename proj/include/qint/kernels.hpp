#pragma once

/// Batched kernels for the dense lambda-grid sweeps.
///
/// The Riemann-sum oracle evaluates the layer-cake integrand at millions of
/// uniformly spaced levels.  For a polynomial monotone segment the level
/// crossing solves p(x) = lambda by bisection, which is branch-free and
/// data-parallel across levels, and the per-level set measure for a
/// single-interval level set is plain clip arithmetic.  These hot loops are
/// provided as scalar reference kernels plus an AVX2 variant compiled in a
/// separate translation unit and selected at runtime.
///
/// Both variants perform the identical floating-point operations in the
/// identical order (four-lane striped accumulators, no FMA contraction), so
/// their results are bit-exact equals; the equivalence tests assert that.

#include <cstddef>

namespace qint::kernels {

/// Measure applied to the length of a single-interval level set.
enum class LevelMeasure {
  kPlainLength,    // len
  kSquaredLength,  // len^2
  kDestructive,    // len - 2 * max(0, len - offset)
};

struct Ops {
  const char* name;

  /// y[i] = sum_j coeffs[j] * x[i]^j (Horner), j = 0..degree.
  void (*poly_eval)(const double* coeffs, int degree, const double* x, double* y, std::size_t n);

  /// For a polynomial monotone on [lo, hi]: writes the crossing point
  /// x[i] in [lo, hi] with p(x[i]) = lam[i], clamped to the segment ends
  /// when lam[i] falls outside the segment's value range.  Runs a fixed
  /// number of bisection steps so every lane does identical work.
  void (*poly_crossing)(const double* coeffs, int degree, double lo, double hi, bool increasing,
                        const double* lam, double* x, std::size_t n, int steps);

  /// Given per-level crossing points x[i], forms the single-interval level
  /// set  [max(win_lo, x[i]), win_hi)  when anchor_right, else
  /// [win_lo, min(win_hi, x[i])),  applies the level measure to its length,
  /// and returns the sum over i.
  double (*level_measure_sum)(const double* x, std::size_t n, double win_lo, double win_hi,
                              bool anchor_right, LevelMeasure measure, double offset);
};

const Ops& scalar_ops();

/// AVX2 variant; equals scalar_ops() when not compiled in.
const Ops& avx2_ops();
bool avx2_compiled();
bool avx2_supported();

/// Best available implementation.  Honors QINT_KERNEL={scalar,avx2} from the
/// environment (checked once); invalid or unsupported requests fall back to
/// the default choice.
const Ops& ops();

/// Number of bisection steps that pins the crossing below any sensible
/// root tolerance on a unit-length segment (2^-60 < 1e-18).
inline constexpr int kCrossingSteps = 60;

}  // namespace qint::kernels

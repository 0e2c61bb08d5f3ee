// AVX2 variants of the grid-sweep kernels.  Compiled with -mavx2 and
// -ffp-contract=off in a dedicated translation unit; dispatch.cpp only routes
// here after a runtime CPU check.  Operation order matches the scalar
// reference exactly (same Horner sequence, same four-lane accumulation), so
// results are bit-identical to scalar_ops().

#include "qint/kernels.hpp"

#ifdef __AVX2__

#include <immintrin.h>

namespace qint::kernels {
namespace detail {

namespace {

inline __m256d horner4(const double* coeffs, int degree, __m256d x) {
  __m256d acc = _mm256_set1_pd(coeffs[degree]);
  for (int j = degree - 1; j >= 0; --j) {
    acc = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(coeffs[j]));
  }
  return acc;
}

void poly_eval_avx2(const double* coeffs, int degree, const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, horner4(coeffs, degree, _mm256_loadu_pd(x + i)));
  }
  if (i < n) scalar_ops().poly_eval(coeffs, degree, x + i, y + i, n - i);
}

void poly_crossing_avx2(const double* coeffs, int degree, double lo, double hi, bool increasing,
                        const double* lam, double* x, std::size_t n, int steps) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_set1_pd(lo);
    __m256d b = _mm256_set1_pd(hi);
    __m256d target = _mm256_loadu_pd(lam + i);
    for (int s = 0; s < steps; ++s) {
      __m256d mid = _mm256_mul_pd(_mm256_add_pd(a, b), half);
      __m256d v = horner4(coeffs, degree, mid);
      __m256d go_right = increasing ? _mm256_cmp_pd(v, target, _CMP_LT_OQ)
                                    : _mm256_cmp_pd(v, target, _CMP_GT_OQ);
      a = _mm256_blendv_pd(a, mid, go_right);
      b = _mm256_blendv_pd(mid, b, go_right);
    }
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_add_pd(a, b), half));
  }
  if (i < n) {
    scalar_ops().poly_crossing(coeffs, degree, lo, hi, increasing, lam + i, x + i, n - i, steps);
  }
}

template <LevelMeasure kMeasure>
double level_measure_sum_impl(const double* x, std::size_t n, double win_lo, double win_hi,
                              bool anchor_right, double offset) {
  const __m256d vlo = _mm256_set1_pd(win_lo);
  const __m256d vhi = _mm256_set1_pd(win_hi);
  const __m256d voff = _mm256_set1_pd(offset);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d two = _mm256_set1_pd(2.0);

  __m256d acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xi = _mm256_loadu_pd(x + i);
    __m256d lo = anchor_right ? _mm256_max_pd(xi, vlo) : vlo;
    __m256d hi = anchor_right ? vhi : _mm256_min_pd(xi, vhi);
    __m256d len = _mm256_max_pd(_mm256_sub_pd(hi, lo), zero);
    __m256d v;
    if constexpr (kMeasure == LevelMeasure::kPlainLength) {
      v = len;
    } else if constexpr (kMeasure == LevelMeasure::kSquaredLength) {
      v = _mm256_mul_pd(len, len);
    } else {
      __m256d overlap = _mm256_max_pd(_mm256_sub_pd(len, voff), zero);
      v = _mm256_sub_pd(len, _mm256_mul_pd(two, overlap));
    }
    acc = _mm256_add_pd(acc, v);
  }

  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (; i < n; ++i) {
    double xi = x[i];
    double lo = anchor_right ? (xi > win_lo ? xi : win_lo) : win_lo;
    double hi = anchor_right ? win_hi : (xi < win_hi ? xi : win_hi);
    double len = hi - lo;
    len = len > 0.0 ? len : 0.0;
    double v;
    if constexpr (kMeasure == LevelMeasure::kPlainLength) {
      v = len;
    } else if constexpr (kMeasure == LevelMeasure::kSquaredLength) {
      v = len * len;
    } else {
      double overlap = len - offset;
      overlap = overlap > 0.0 ? overlap : 0.0;
      v = len - 2.0 * overlap;
    }
    lanes[i % 4] += v;
  }
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double level_measure_sum_avx2(const double* x, std::size_t n, double win_lo, double win_hi,
                              bool anchor_right, LevelMeasure measure, double offset) {
  switch (measure) {
    case LevelMeasure::kPlainLength:
      return level_measure_sum_impl<LevelMeasure::kPlainLength>(x, n, win_lo, win_hi,
                                                                anchor_right, offset);
    case LevelMeasure::kSquaredLength:
      return level_measure_sum_impl<LevelMeasure::kSquaredLength>(x, n, win_lo, win_hi,
                                                                  anchor_right, offset);
    case LevelMeasure::kDestructive:
      return level_measure_sum_impl<LevelMeasure::kDestructive>(x, n, win_lo, win_hi,
                                                                anchor_right, offset);
  }
  return 0.0;
}

}  // namespace

const Ops& avx2_ops_impl() {
  static const Ops ops{"avx2", poly_eval_avx2, poly_crossing_avx2, level_measure_sum_avx2};
  return ops;
}

}  // namespace detail
}  // namespace qint::kernels

#else
#error "kernels_avx2.cpp must be compiled with -mavx2"
#endif

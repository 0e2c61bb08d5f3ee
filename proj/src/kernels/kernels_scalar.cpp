#include "qint/kernels.hpp"

namespace qint::kernels {

namespace {

inline double horner(const double* coeffs, int degree, double x) {
  double acc = coeffs[degree];
  for (int j = degree - 1; j >= 0; --j) acc = acc * x + coeffs[j];
  return acc;
}

void poly_eval_scalar(const double* coeffs, int degree, const double* x, double* y,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = horner(coeffs, degree, x[i]);
}

void poly_crossing_scalar(const double* coeffs, int degree, double lo, double hi, bool increasing,
                          const double* lam, double* x, std::size_t n, int steps) {
  for (std::size_t i = 0; i < n; ++i) {
    double a = lo, b = hi;
    const double target = lam[i];
    for (int s = 0; s < steps; ++s) {
      double mid = 0.5 * (a + b);
      double v = horner(coeffs, degree, mid);
      bool go_right = increasing ? (v < target) : (v > target);
      a = go_right ? mid : a;
      b = go_right ? b : mid;
    }
    x[i] = 0.5 * (a + b);
  }
}

inline double clipped_value(double xi, double win_lo, double win_hi, bool anchor_right,
                            LevelMeasure measure, double offset) {
  double lo = anchor_right ? (xi > win_lo ? xi : win_lo) : win_lo;
  double hi = anchor_right ? win_hi : (xi < win_hi ? xi : win_hi);
  double len = hi - lo;
  len = len > 0.0 ? len : 0.0;
  switch (measure) {
    case LevelMeasure::kPlainLength:
      return len;
    case LevelMeasure::kSquaredLength:
      return len * len;
    case LevelMeasure::kDestructive: {
      double overlap = len - offset;
      overlap = overlap > 0.0 ? overlap : 0.0;
      return len - 2.0 * overlap;
    }
  }
  return 0.0;
}

// Four striped partial sums, combined pairwise; the AVX2 variant reproduces
// this exact summation pattern so the two are bit-identical.
double level_measure_sum_scalar(const double* x, std::size_t n, double win_lo, double win_hi,
                                bool anchor_right, LevelMeasure measure, double offset) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int lane = 0; lane < 4; ++lane) {
      acc[lane] += clipped_value(x[i + lane], win_lo, win_hi, anchor_right, measure, offset);
    }
  }
  for (; i < n; ++i) {
    acc[i % 4] += clipped_value(x[i], win_lo, win_hi, anchor_right, measure, offset);
  }
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", poly_eval_scalar, poly_crossing_scalar,
                       level_measure_sum_scalar};
  return ops;
}

}  // namespace qint::kernels

#pragma once

/// Piecewise-monotone functions on [0,1].
///
/// A PiecewiseMonotoneFn is a breakpoint grid 0 = x0 < ... < xk = 1 with a
/// monotone evaluator per segment.  This is the integrand type understood by
/// the layer-cake engine: monotonicity per segment is exactly what makes the
/// super-/sub-level sets computable by one bisection per segment.
///
/// Functions are normally built from a FunctionSpec descriptor, which is the
/// JSON-facing description used by the CLI:
///
///   {"kind":"monomial","n":2}     x^n
///   {"kind":"poly","coeffs":[c0,c1,...]}
///   {"kind":"exp"}                e^x
///   {"kind":"tent"}               2x on [0,1/2], 2-2x on [1/2,1]
///   {"kind":"cos"} {"kind":"sin"} {"kind":"cosh_sqrt2"}   cosh(sqrt(2) x)
///
/// Polynomials are cut into monotone segments at the sign changes of their
/// derivative, found numerically.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qint {

enum class Monotonicity { kIncreasing, kDecreasing, kConstant };

struct Segment {
  double lo = 0.0;
  double hi = 1.0;
  Monotonicity tag = Monotonicity::kIncreasing;
  std::function<double(double)> eval;
  /// Dense polynomial coefficients (c[0] + c[1] x + ...) when the segment is
  /// polynomial; enables the batched kernels.
  std::optional<std::vector<double>> poly;
};

struct FunctionSpec {
  std::string kind;             // monomial | poly | exp | tent | cos | sin | cosh_sqrt2
  int n = 1;                    // monomial degree
  std::vector<double> coeffs;   // poly coefficients, constant term first

  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

class PiecewiseMonotoneFn {
 public:
  /// Validates that segments tile [0,1] in order and spot-checks each
  /// segment's monotonicity tag by sampling.
  explicit PiecewiseMonotoneFn(std::vector<Segment> segments,
                               std::optional<FunctionSpec> spec = std::nullopt);

  double operator()(double x) const;

  const std::vector<Segment>& segments() const { return segments_; }
  double fmin() const { return fmin_; }
  double fmax() const { return fmax_; }
  const std::optional<FunctionSpec>& spec() const { return spec_; }

  /// Values of f at all segment endpoints, sorted and deduplicated.  The
  /// layer-cake integrand has kinks exactly at these levels, so quadrature
  /// panels are split there.
  std::vector<double> breakpoint_values() const;

 private:
  std::vector<Segment> segments_;
  double fmin_ = 0.0;
  double fmax_ = 0.0;
  std::optional<FunctionSpec> spec_;
};

// Builders for the supported descriptor kinds.
PiecewiseMonotoneFn monomial_fn(int n);
PiecewiseMonotoneFn poly_fn(std::vector<double> coeffs);
PiecewiseMonotoneFn exp_fn();
PiecewiseMonotoneFn tent_fn();
PiecewiseMonotoneFn cos_fn();
PiecewiseMonotoneFn sin_fn();
PiecewiseMonotoneFn cosh_sqrt2_fn();

PiecewiseMonotoneFn make_function(const FunctionSpec& spec);

/// alpha * f.  Flips monotonicity tags when alpha < 0.
PiecewiseMonotoneFn scale_fn(const PiecewiseMonotoneFn& f, double alpha);

/// f + g for two functions; each summand must be monotone in the same
/// direction on every merged segment (checked by sampling).
PiecewiseMonotoneFn sum_fn(const PiecewiseMonotoneFn& f, const PiecewiseMonotoneFn& g);

/// g composed with f for strictly increasing g (tags preserved).
PiecewiseMonotoneFn compose_increasing(const std::function<double(double)>& g,
                                       const PiecewiseMonotoneFn& f);

/// f^n for f >= 0 (tags preserved).
PiecewiseMonotoneFn pow_fn(const PiecewiseMonotoneFn& f, int n);

double eval_poly(const std::vector<double>& coeffs, double x);

}  // namespace qint

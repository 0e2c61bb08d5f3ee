#pragma once

/// The quantum-integral engine.
///
/// For a q-measure mu and bounded measurable f the a-centered quantum
/// integral is
///
///   I_a(f) = int_a^inf mu({f > lambda}) dlambda
///          - int_{-inf}^a mu({f < lambda}) dlambda
///
/// and I_0 is the plain quantum integral.  When mu is additive this is the
/// Lebesgue integral; in general it is nonlinear and nonmonotone, and the
/// value genuinely depends on the split point a.
///
/// f is bounded, so both lambda-integrals are evaluated over the range of f
/// with a one-unit guard band (the integrand vanishes identically outside).
/// The integrand kinks where a level crosses a segment-endpoint value of f
/// or a boundary of a restriction set; those levels seed the quadrature
/// panel splits so each panel is smooth.

#include <functional>
#include <optional>
#include <string>

#include "qint/function.hpp"
#include "qint/interval_set.hpp"
#include "qint/measure.hpp"
#include "qint/quadrature.hpp"

namespace qint {

/// {x : f(x) > lambda}, resolved per segment by bisection to root_tol.
/// Strict inequality; segment boundaries carry measure zero under every
/// continuum measure, so the bisection side is immaterial.
IntervalSet super_level_set(const PiecewiseMonotoneFn& f, double lambda,
                            double root_tol = QuadratureConfig{}.root_tol);

/// {x : f(x) < lambda}.
IntervalSet sub_level_set(const PiecewiseMonotoneFn& f, double lambda,
                          double root_tol = QuadratureConfig{}.root_tol);

/// a-centered quantum integral of f over the whole space.
double integrate(const PiecewiseMonotoneFn& f, const QMeasure& mu, double center = 0.0,
                 const QuadratureConfig& cfg = {});

/// Quantum integral of f restricted to `window`, i.e. of f * chi_window.
/// Every level set is intersected with the window.  For center 0 the result
/// is cross-checked against the subspace route that integrates f against
/// B -> mu(window n B); the two routes coincide only at center 0, where the
/// zero plateau of f * chi_window contributes nothing.
double integrate_restricted(const PiecewiseMonotoneFn& f, const IntervalSet& window,
                            const QMeasure& mu, double center = 0.0,
                            const QuadratureConfig& cfg = {});

/// int f^n dmu = int_0^inf mu({f > t}) n t^(n-1) dt for f >= 0.
double integrate_power(const PiecewiseMonotoneFn& f, int n, const QMeasure& mu,
                       const QuadratureConfig& cfg = {},
                       const std::optional<IntervalSet>& window = std::nullopt);

/// Strictly increasing differentiable change of variable.  `inverse` is only
/// invoked for arguments strictly inside g([fmin, fmax]).
struct IncreasingChange {
  std::function<double(double)> g;
  std::function<double(double)> g_prime;
  std::function<double(double)> inverse;
  std::string name;
};

/// int (g o f) dmu_a through the change-of-variable form
///   int_{g^-1(a)}^{g^-1(inf)} mu({f > t}) g'(t) dt
///   - int_{g^-1(-inf)}^{g^-1(a)} mu({f < t}) g'(t) dt,
/// truncated to [fmin, fmax] with the constant head/tail stretches summed in
/// closed form.  A window routes through the subspace measure
/// B -> mu(window n B), matching integrate_restricted at center 0.
double integrate_via_g(const PiecewiseMonotoneFn& f, const IncreasingChange& change,
                       const QMeasure& mu, double center = 0.0, const QuadratureConfig& cfg = {},
                       const std::optional<IntervalSet>& window = std::nullopt);

}  // namespace qint

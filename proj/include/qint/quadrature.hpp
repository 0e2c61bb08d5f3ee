#pragma once

/// Globally adaptive Gauss-Kronrod 15(7) quadrature.
///
/// The layer-cake integrands this library produces are smooth between known
/// kink levels, so callers pass those levels as initial panel splits; the
/// adaptive loop then refines whichever panel carries the largest error
/// estimate until the total drops below the requested tolerance.

#include <functional>
#include <stdexcept>
#include <vector>

namespace qint {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_subdivisions = 60;  // maximal bisection depth per panel
  double root_tol = 1e-13;    // bisection tolerance for level-set boundaries
};

/// Thrown when the adaptive loop cannot reach abs_tol; carries the best
/// estimate and the error bound that was achieved.
class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(std::string what, double best, double achieved)
      : std::runtime_error(std::move(what)), best_estimate(best), achieved_error(achieved) {}

  double best_estimate;
  double achieved_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Integrates fn over [lo, hi].  `splits` lists interior points where the
/// integrand is allowed to kink; out-of-range entries are ignored.
QuadratureResult adaptive_integrate(const std::function<double(double)>& fn, double lo, double hi,
                                    const std::vector<double>& splits, double abs_tol,
                                    int max_depth);

inline QuadratureResult adaptive_integrate(const std::function<double(double)>& fn, double lo,
                                           double hi, const QuadratureConfig& cfg,
                                           const std::vector<double>& splits = {}) {
  return adaptive_integrate(fn, lo, hi, splits, cfg.abs_tol, cfg.max_subdivisions);
}

}  // namespace qint

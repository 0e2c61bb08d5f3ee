#include "qint/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qint {

namespace {

using MeasureFn = std::function<double(const IntervalSet&)>;

double segment_crossing(const Segment& s, std::size_t index, double lambda, double root_tol) {
  double vlo = s.eval(s.lo);
  double vhi = s.eval(s.hi);
  bool increasing = s.tag == Monotonicity::kIncreasing;
  double lo_val = increasing ? vlo : vhi;
  double hi_val = increasing ? vhi : vlo;
  if (lo_val > hi_val + 1e-12) {
    throw std::runtime_error("level set: segment " + std::to_string(index) +
                             " is not monotone as tagged (bad bracket)");
  }
  double lo = s.lo, hi = s.hi;
  while (hi - lo > root_tol) {
    double mid = 0.5 * (lo + hi);
    double v = s.eval(mid);
    bool go_right = increasing ? (v < lambda) : (v > lambda);
    if (go_right) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

IntervalSet level_set(const PiecewiseMonotoneFn& f, double lambda, double root_tol, bool super) {
  std::vector<std::pair<double, double>> parts;
  const auto& segments = f.segments();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    double vlo = s.eval(s.lo);
    double vhi = s.eval(s.hi);
    double top = std::max(vlo, vhi);
    double bottom = std::min(vlo, vhi);

    if (super) {
      if (lambda >= top) continue;
      if (lambda < bottom) {
        parts.emplace_back(s.lo, s.hi);
        continue;
      }
      double r = segment_crossing(s, i, lambda, root_tol);
      if (s.tag == Monotonicity::kIncreasing) {
        parts.emplace_back(r, s.hi);
      } else {
        parts.emplace_back(s.lo, r);
      }
    } else {
      if (lambda <= bottom) continue;
      if (lambda > top) {
        parts.emplace_back(s.lo, s.hi);
        continue;
      }
      double r = segment_crossing(s, i, lambda, root_tol);
      if (s.tag == Monotonicity::kIncreasing) {
        parts.emplace_back(s.lo, r);
      } else {
        parts.emplace_back(r, s.hi);
      }
    }
  }
  return IntervalSet(std::move(parts));
}

/// Level sets of the effective integrand (f itself, or f * chi_window),
/// plus the kink levels and effective range the quadrature needs.
struct LevelProvider {
  std::function<IntervalSet(double)> super;
  std::function<IntervalSet(double)> sub;
  std::vector<double> kinks;
  double fmin = 0.0;
  double fmax = 0.0;
};

std::vector<double> kink_levels(const PiecewiseMonotoneFn& f, const IntervalSet* window) {
  std::vector<double> kinks = f.breakpoint_values();
  if (window != nullptr) {
    for (const Interval& iv : window->parts()) {
      kinks.push_back(f(iv.lo));
      kinks.push_back(f(iv.hi));
    }
    kinks.push_back(0.0);
  }
  return kinks;
}

LevelProvider plain_provider(const PiecewiseMonotoneFn& f, double root_tol) {
  LevelProvider p;
  p.super = [&f, root_tol](double lam) { return level_set(f, lam, root_tol, true); };
  p.sub = [&f, root_tol](double lam) { return level_set(f, lam, root_tol, false); };
  p.kinks = kink_levels(f, nullptr);
  p.fmin = f.fmin();
  p.fmax = f.fmax();
  return p;
}

LevelProvider windowed_provider(const PiecewiseMonotoneFn& f, const IntervalSet& window,
                                double root_tol) {
  LevelProvider p;
  IntervalSet outside = window.complement();
  p.super = [&f, window, outside, root_tol](double lam) {
    IntervalSet set = level_set(f, lam, root_tol, true).intersect(window);
    if (lam < 0.0) set = set.unite(outside);  // the zero plateau outside the window
    return set;
  };
  p.sub = [&f, window, outside, root_tol](double lam) {
    IntervalSet set = level_set(f, lam, root_tol, false).intersect(window);
    if (lam > 0.0) set = set.unite(outside);
    return set;
  };
  p.kinks = kink_levels(f, &window);
  bool proper = !outside.empty();
  p.fmin = proper ? std::min(f.fmin(), 0.0) : f.fmin();
  p.fmax = proper ? std::max(f.fmax(), 0.0) : f.fmax();
  return p;
}

double layer_cake(const LevelProvider& p, const MeasureFn& m, double center,
                  const QuadratureConfig& cfg) {
  // One-unit guard bands; the integrands vanish identically on them.
  double upper = std::max(center, p.fmax) + 1.0;
  double lower = std::min(center, p.fmin) - 1.0;

  auto above = adaptive_integrate([&](double lam) { return m(p.super(lam)); }, center, upper,
                                  p.kinks, 0.5 * cfg.abs_tol, cfg.max_subdivisions);
  auto below = adaptive_integrate([&](double lam) { return m(p.sub(lam)); }, lower, center,
                                  p.kinks, 0.5 * cfg.abs_tol, cfg.max_subdivisions);
  return above.value - below.value;
}

MeasureFn wrap(const QMeasure& mu) {
  return [&mu](const IntervalSet& s) { return mu(s); };
}

MeasureFn wrap_subspace(const QMeasure& mu, const IntervalSet& window) {
  return [&mu, window](const IntervalSet& s) { return mu(s.intersect(window)); };
}

}  // namespace

IntervalSet super_level_set(const PiecewiseMonotoneFn& f, double lambda, double root_tol) {
  return level_set(f, lambda, root_tol, true);
}

IntervalSet sub_level_set(const PiecewiseMonotoneFn& f, double lambda, double root_tol) {
  return level_set(f, lambda, root_tol, false);
}

double integrate(const PiecewiseMonotoneFn& f, const QMeasure& mu, double center,
                 const QuadratureConfig& cfg) {
  return layer_cake(plain_provider(f, cfg.root_tol), wrap(mu), center, cfg);
}

double integrate_restricted(const PiecewiseMonotoneFn& f, const IntervalSet& window,
                            const QMeasure& mu, double center, const QuadratureConfig& cfg) {
  double value = layer_cake(windowed_provider(f, window, cfg.root_tol), wrap(mu), center, cfg);

  if (center == 0.0) {
    // Subspace route: integrate f against B -> mu(window n B).  At center 0
    // this must reproduce the chi_window route.
    LevelProvider p = plain_provider(f, cfg.root_tol);
    p.kinks = kink_levels(f, &window);
    double subspace = layer_cake(p, wrap_subspace(mu, window), 0.0, cfg);
    if (std::abs(value - subspace) > 2.0 * cfg.abs_tol) {
      throw std::runtime_error(
          "integrate_restricted: chi-window and subspace-measure routes disagree: " +
          std::to_string(value) + " vs " + std::to_string(subspace));
    }
  }
  return value;
}

double integrate_power(const PiecewiseMonotoneFn& f, int n, const QMeasure& mu,
                       const QuadratureConfig& cfg, const std::optional<IntervalSet>& window) {
  if (n < 1) throw std::invalid_argument("integrate_power: exponent must be positive");
  if (f.fmin() < -1e-12) {
    throw std::invalid_argument("integrate_power: integrand must be nonnegative");
  }
  LevelProvider p = window ? windowed_provider(f, *window, cfg.root_tol)
                           : plain_provider(f, cfg.root_tol);
  MeasureFn m = wrap(mu);
  auto weighted = [&](double t) {
    return m(p.super(t)) * static_cast<double>(n) * std::pow(t, n - 1);
  };
  auto res = adaptive_integrate(weighted, 0.0, p.fmax + 1.0, p.kinks, cfg.abs_tol,
                                cfg.max_subdivisions);
  return res.value;
}

double integrate_via_g(const PiecewiseMonotoneFn& f, const IncreasingChange& change,
                       const QMeasure& mu, double center, const QuadratureConfig& cfg,
                       const std::optional<IntervalSet>& window) {
  double fmin = f.fmin();
  double fmax = f.fmax();

  // Validate the change of variable by sampling.
  constexpr int kSamples = 64;
  double prev = change.g(fmin);
  for (int k = 1; k <= kSamples; ++k) {
    double t = fmin + (fmax - fmin) * static_cast<double>(k) / kSamples;
    double v = change.g(t);
    if (v <= prev - 1e-12) {
      throw std::invalid_argument("integrate_via_g: change \"" + change.name +
                                  "\" is not increasing on the range of f");
    }
    prev = v;
  }

  MeasureFn m = window ? wrap_subspace(mu, *window) : wrap(mu);
  double m_total = m(IntervalSet::unit());
  double g_min = change.g(fmin);
  double g_max = change.g(fmax);
  std::vector<double> kinks = kink_levels(f, window ? &*window : nullptr);

  double above = 0.0;
  if (center < g_max) {
    // Constant stretch below fmin, where {f > t} is the whole space.
    double head = center < g_min ? m_total * (g_min - center) : 0.0;
    double t_start = center <= g_min ? fmin : change.inverse(center);
    auto integrand = [&](double t) {
      return m(level_set(f, t, cfg.root_tol, true)) * change.g_prime(t);
    };
    above = head + adaptive_integrate(integrand, t_start, fmax, kinks, 0.5 * cfg.abs_tol,
                                      cfg.max_subdivisions)
                       .value;
  }

  double below = 0.0;
  if (center > g_min) {
    // Constant stretch above fmax, where {f < t} is the whole space.
    double tail = center > g_max ? m_total * (center - g_max) : 0.0;
    double t_end = center >= g_max ? fmax : change.inverse(center);
    auto integrand = [&](double t) {
      return m(level_set(f, t, cfg.root_tol, false)) * change.g_prime(t);
    };
    below = adaptive_integrate(integrand, fmin, t_end, kinks, 0.5 * cfg.abs_tol,
                               cfg.max_subdivisions)
                .value +
            tail;
  }
  return above - below;
}

}  // namespace qint

#include "qint/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qint/kernels.hpp"

namespace qint {

namespace {

constexpr int kMaxParts = 24;

struct FlatSet {
  std::array<Interval, kMaxParts> parts;
  int count = 0;

  void push(double lo, double hi) {
    if (hi - lo <= 0.0) return;
    if (count == kMaxParts) throw std::runtime_error("riemann_sum_oracle: level set too fragmented");
    parts[count++] = {lo, hi};
  }

  double length() const {
    double sum = 0.0;
    for (int i = 0; i < count; ++i) sum += parts[i].length();
    return sum;
  }
};

// Fixed-step bisection for the boundary of {f > lam} within one segment.
double oracle_crossing(const Segment& s, double lam) {
  double lo = s.lo, hi = s.hi;
  bool increasing = s.tag == Monotonicity::kIncreasing;
  for (int k = 0; k < kernels::kCrossingSteps; ++k) {
    double mid = 0.5 * (lo + hi);
    double v = s.eval(mid);
    bool go_right = increasing ? (v < lam) : (v > lam);
    lo = go_right ? mid : lo;
    hi = go_right ? hi : mid;
  }
  return 0.5 * (lo + hi);
}

// Level set of f at lam, intersected with the window parts, written into out
// in sorted order.  `super` selects {f > lam} versus {f < lam}.
void build_level_set(const PiecewiseMonotoneFn& f, double lam, bool super,
                     const std::vector<Interval>& window, FlatSet& out) {
  out.count = 0;
  auto emit = [&](double lo, double hi) {
    for (const Interval& w : window) {
      double clo = std::max(lo, w.lo);
      double chi = std::min(hi, w.hi);
      if (chi > clo) out.push(clo, chi);
    }
  };
  for (const Segment& s : f.segments()) {
    double vlo = s.eval(s.lo);
    double vhi = s.eval(s.hi);
    double top = std::max(vlo, vhi);
    double bottom = std::min(vlo, vhi);
    if (super) {
      if (lam >= top) continue;
      if (lam < bottom) {
        emit(s.lo, s.hi);
      } else {
        double r = oracle_crossing(s, lam);
        if (s.tag == Monotonicity::kIncreasing) {
          emit(r, s.hi);
        } else {
          emit(s.lo, r);
        }
      }
    } else {
      if (lam <= bottom) continue;
      if (lam > top) {
        emit(s.lo, s.hi);
      } else {
        double r = oracle_crossing(s, lam);
        if (s.tag == Monotonicity::kIncreasing) {
          emit(s.lo, r);
        } else {
          emit(r, s.hi);
        }
      }
    }
  }
  std::sort(out.parts.begin(), out.parts.begin() + out.count,
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
}

// Length of S n (S - d) by a two-pointer walk over the sorted parts.
double shifted_overlap_length(const FlatSet& s, double d) {
  double total = 0.0;
  int i = 0, j = 0;
  while (i < s.count && j < s.count) {
    double alo = s.parts[i].lo, ahi = s.parts[i].hi;
    double blo = s.parts[j].lo - d, bhi = s.parts[j].hi - d;
    double lo = std::max(alo, blo);
    double hi = std::min(ahi, bhi);
    if (hi > lo) total += hi - lo;
    if (ahi < bhi) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

double flat_measure(const QMeasure& mu, const FlatSet& s) {
  switch (mu.kind()) {
    case MeasureKind::kPlainLebesgue:
      return s.length();
    case MeasureKind::kLebesgueSquared: {
      double len = s.length();
      return len * len;
    }
    case MeasureKind::kDestructivePairs:
      return s.length() - 2.0 * shifted_overlap_length(s, mu.offset());
    default:
      throw std::invalid_argument("riemann_sum_oracle: continuum measure required");
  }
}

struct GridSide {
  double lo = 0.0;
  double hi = 0.0;
  long cells = 0;
  double step = 0.0;
};

GridSide make_grid(double lo, double hi, long per_unit) {
  GridSide g;
  g.lo = lo;
  g.hi = hi;
  if (hi > lo) {
    g.cells = std::max<long>(1, static_cast<long>(std::ceil((hi - lo) * per_unit)));
    g.step = (hi - lo) / static_cast<double>(g.cells);
  }
  return g;
}

double generic_sweep(const PiecewiseMonotoneFn& f, const QMeasure& mu, double center,
                     long per_unit, const std::vector<Interval>& window,
                     const std::vector<Interval>& outside) {
  double fmin = f.fmin();
  double fmax = f.fmax();
  bool proper_window = !outside.empty();
  if (proper_window) {
    fmin = std::min(fmin, 0.0);
    fmax = std::max(fmax, 0.0);
  }
  GridSide up = make_grid(center, std::max(center, fmax), per_unit);
  GridSide down = make_grid(std::min(center, fmin), center, per_unit);

  FlatSet set;
  double above = 0.0;
  for (long k = 0; k < up.cells; ++k) {
    double lam = up.lo + (static_cast<double>(k) + 0.5) * up.step;
    build_level_set(f, lam, true, window, set);
    if (proper_window && lam < 0.0) {
      for (const Interval& iv : outside) set.push(iv.lo, iv.hi);
      std::sort(set.parts.begin(), set.parts.begin() + set.count,
                [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    }
    above += flat_measure(mu, set);
  }
  above *= up.step;

  double below = 0.0;
  for (long k = 0; k < down.cells; ++k) {
    double lam = down.lo + (static_cast<double>(k) + 0.5) * down.step;
    build_level_set(f, lam, false, window, set);
    if (proper_window && lam > 0.0) {
      for (const Interval& iv : outside) set.push(iv.lo, iv.hi);
      std::sort(set.parts.begin(), set.parts.begin() + set.count,
                [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    }
    below += flat_measure(mu, set);
  }
  below *= down.step;

  return above - below;
}

kernels::LevelMeasure level_measure_for(const QMeasure& mu) {
  switch (mu.kind()) {
    case MeasureKind::kPlainLebesgue:
      return kernels::LevelMeasure::kPlainLength;
    case MeasureKind::kLebesgueSquared:
      return kernels::LevelMeasure::kSquaredLength;
    default:
      return kernels::LevelMeasure::kDestructive;
  }
}

double kernel_sweep(const PiecewiseMonotoneFn& f, const QMeasure& mu, double center,
                    long per_unit, const Interval& win) {
  const Segment& seg = f.segments().front();
  const std::vector<double>& coeffs = *seg.poly;
  const int degree = static_cast<int>(coeffs.size()) - 1;
  const bool increasing = seg.tag == Monotonicity::kIncreasing;
  const kernels::Ops& k = kernels::ops();
  const kernels::LevelMeasure lm = level_measure_for(mu);

  GridSide up = make_grid(center, std::max(center, f.fmax()), per_unit);
  GridSide down = make_grid(std::min(center, f.fmin()), center, per_unit);

  constexpr std::size_t kBlock = 8192;
  std::vector<double> lam(kBlock), cross(kBlock);

  auto sweep_side = [&](const GridSide& g, bool super_side) {
    double sum = 0.0;
    long done = 0;
    while (done < g.cells) {
      std::size_t n = static_cast<std::size_t>(std::min<long>(kBlock, g.cells - done));
      for (std::size_t i = 0; i < n; ++i) {
        lam[i] = g.lo + (static_cast<double>(done + static_cast<long>(i)) + 0.5) * g.step;
      }
      k.poly_crossing(coeffs.data(), degree, seg.lo, seg.hi, increasing, lam.data(), cross.data(),
                      n, kernels::kCrossingSteps);
      // {f > lam} keeps the side where f exceeds lam; {f < lam} the other.
      bool anchor_right = super_side == increasing;
      sum += k.level_measure_sum(cross.data(), n, win.lo, win.hi, anchor_right, lm, mu.offset());
      done += static_cast<long>(n);
    }
    return sum * g.step;
  };

  return sweep_side(up, true) - sweep_side(down, false);
}

}  // namespace

bool oracle_uses_kernels(const PiecewiseMonotoneFn& f, const QMeasure& mu, double center,
                         const std::optional<IntervalSet>& window) {
  if (mu.domain().finite) return false;
  if (f.segments().size() != 1 || !f.segments().front().poly) return false;
  if (!window) return true;
  // With a proper window the zero plateau outside it only stays out of both
  // level integrals when the split point is 0 and f is nonnegative.
  return window->size() == 1 && center == 0.0 && f.fmin() >= 0.0;
}

double riemann_sum_oracle(const PiecewiseMonotoneFn& f, const QMeasure& mu, double center,
                          long grid_per_unit, const std::optional<IntervalSet>& window) {
  if (grid_per_unit < 10) {
    throw std::invalid_argument("riemann_sum_oracle: need at least 10 grid points per unit");
  }
  if (mu.domain().finite) {
    throw std::invalid_argument("riemann_sum_oracle: continuum measure required");
  }
  if (window && window->empty()) return 0.0;

  if (oracle_uses_kernels(f, mu, center, window)) {
    Interval win{0.0, 1.0};
    if (window) win = window->parts().front();
    return kernel_sweep(f, mu, center, grid_per_unit, win);
  }

  std::vector<Interval> win_parts{{0.0, 1.0}};
  std::vector<Interval> outside;
  if (window) {
    win_parts = window->parts();
    outside = window->complement().parts();
  }
  return generic_sweep(f, mu, center, grid_per_unit, win_parts, outside);
}

double plateau_sum_oracle(const SimpleFunction& f, const QMeasure& mu, double center) {
  const auto& pieces = f.pieces();

  std::vector<double> values;
  for (const auto& p : pieces) values.push_back(p.first);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // Union of all supports with value >= v (resp. <= v), rebuilt from scratch
  // per plateau.
  auto union_where = [&](auto&& keep) -> MeasurableSet {
    MeasurableSet acc;
    bool first = true;
    for (const auto& p : pieces) {
      if (!keep(p.first)) continue;
      if (first) {
        acc = p.second;
        first = false;
      } else if (std::holds_alternative<IntervalSet>(acc)) {
        acc = std::get<IntervalSet>(acc).unite(std::get<IntervalSet>(p.second));
      } else {
        acc = std::get<FiniteSubset>(acc).unite(std::get<FiniteSubset>(p.second));
      }
    }
    return acc;
  };

  double above = 0.0;
  double prev = center;
  for (double v : values) {
    if (v <= center) continue;
    above += (v - prev) * mu(union_where([&](double w) { return w >= v; }));
    prev = v;
  }

  double below = 0.0;
  std::vector<double> lower;
  for (double v : values) {
    if (v <= center) lower.push_back(v);
  }
  for (std::size_t j = 0; j < lower.size(); ++j) {
    double plateau_hi = (j + 1 < lower.size()) ? lower[j + 1] : center;
    below += (plateau_hi - lower[j]) * mu(union_where([&](double w) { return w <= lower[j]; }));
  }

  return above - below;
}

}  // namespace qint

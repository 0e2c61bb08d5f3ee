#include "qint/function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qint {

namespace {

constexpr double kFlatTol = 1e-13;

Monotonicity direction_of(double at_lo, double at_hi) {
  if (at_hi > at_lo + kFlatTol) return Monotonicity::kIncreasing;
  if (at_hi < at_lo - kFlatTol) return Monotonicity::kDecreasing;
  return Monotonicity::kConstant;
}

std::vector<double> poly_derivative(const std::vector<double>& coeffs) {
  std::vector<double> d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(static_cast<double>(i) * coeffs[i]);
  if (d.empty()) d.push_back(0.0);
  return d;
}

std::vector<double> poly_multiply(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

const Segment& segment_at(const PiecewiseMonotoneFn& f, double x) {
  for (const Segment& s : f.segments()) {
    if (x >= s.lo && x < s.hi) return s;
  }
  return f.segments().back();
}

// Coefficients of f when one polynomial describes it on all of [0,1].
std::optional<std::vector<double>> global_poly(const PiecewiseMonotoneFn& f) {
  if (!f.spec()) return std::nullopt;
  if (f.spec()->kind == "poly") return f.spec()->coeffs;
  if (f.spec()->kind == "monomial") {
    std::vector<double> coeffs(static_cast<std::size_t>(f.spec()->n) + 1, 0.0);
    coeffs.back() = 1.0;
    return coeffs;
  }
  return std::nullopt;
}

}  // namespace

double eval_poly(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

PiecewiseMonotoneFn::PiecewiseMonotoneFn(std::vector<Segment> segments,
                                         std::optional<FunctionSpec> spec)
    : segments_(std::move(segments)), spec_(std::move(spec)) {
  if (segments_.empty()) throw std::invalid_argument("PiecewiseMonotoneFn: no segments");
  if (std::abs(segments_.front().lo) > 1e-12 || std::abs(segments_.back().hi - 1.0) > 1e-12) {
    throw std::invalid_argument("PiecewiseMonotoneFn: segments must cover [0,1]");
  }
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    if (std::abs(segments_[i].hi - segments_[i + 1].lo) > 1e-12) {
      throw std::invalid_argument("PiecewiseMonotoneFn: segments must be contiguous");
    }
  }

  // Spot-check each monotonicity tag by sampling.
  constexpr int kSamples = 48;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (!(s.hi > s.lo)) throw std::invalid_argument("PiecewiseMonotoneFn: empty segment");
    double prev = s.eval(s.lo);
    double first = prev;
    for (int k = 1; k <= kSamples; ++k) {
      double x = s.lo + (s.hi - s.lo) * static_cast<double>(k) / kSamples;
      double v = s.eval(x);
      bool ok = true;
      switch (s.tag) {
        case Monotonicity::kIncreasing: ok = v >= prev - 1e-12; break;
        case Monotonicity::kDecreasing: ok = v <= prev + 1e-12; break;
        case Monotonicity::kConstant: ok = std::abs(v - first) <= 1e-12; break;
      }
      if (!ok) {
        throw std::invalid_argument("PiecewiseMonotoneFn: segment " + std::to_string(i) +
                                    " is not monotone as tagged");
      }
      prev = v;
    }
  }

  // Monotone per segment, so extrema sit at segment endpoints.
  fmin_ = segments_.front().eval(segments_.front().lo);
  fmax_ = fmin_;
  for (const Segment& s : segments_) {
    for (double v : {s.eval(s.lo), s.eval(s.hi)}) {
      fmin_ = std::min(fmin_, v);
      fmax_ = std::max(fmax_, v);
    }
  }
}

double PiecewiseMonotoneFn::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("PiecewiseMonotoneFn: argument outside [0,1]");
  }
  return segment_at(*this, x).eval(x);
}

std::vector<double> PiecewiseMonotoneFn::breakpoint_values() const {
  std::vector<double> values;
  for (const Segment& s : segments_) {
    values.push_back(s.eval(s.lo));
    values.push_back(s.eval(s.hi));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-14; }),
               values.end());
  return values;
}

PiecewiseMonotoneFn monomial_fn(int n) {
  if (n < 0) throw std::invalid_argument("monomial_fn: degree must be nonnegative");
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  coeffs.back() = 1.0;
  FunctionSpec spec;
  spec.kind = "monomial";
  spec.n = n;
  Segment s;
  s.lo = 0.0;
  s.hi = 1.0;
  s.tag = n == 0 ? Monotonicity::kConstant : Monotonicity::kIncreasing;
  s.eval = [n](double x) { return std::pow(x, n); };
  s.poly = coeffs;
  return PiecewiseMonotoneFn({std::move(s)}, spec);
}

PiecewiseMonotoneFn poly_fn(std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("poly_fn: empty coefficient list");
  FunctionSpec spec;
  spec.kind = "poly";
  spec.coeffs = coeffs;

  // Cut at the interior sign changes of the derivative.  A derivative that
  // vanishes exactly on a grid point is itself a cut.
  std::vector<double> deriv = poly_derivative(coeffs);
  bool flat = std::all_of(deriv.begin(), deriv.end(), [](double c) { return c == 0.0; });
  std::vector<double> cuts{0.0};
  constexpr int kGrid = 2048;
  double prev_x = 0.0;
  double prev_d = eval_poly(deriv, 0.0);
  for (int i = 1; i <= kGrid && !flat; ++i) {
    double x = static_cast<double>(i) / kGrid;
    double d = eval_poly(deriv, x);
    if (d == 0.0) {
      if (x > 0.0 && x < 1.0) cuts.push_back(x);
    } else if ((prev_d < 0.0 && d > 0.0) || (prev_d > 0.0 && d < 0.0)) {
      double lo = prev_x, hi = x;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double dm = eval_poly(deriv, mid);
        if ((dm < 0.0) == (prev_d < 0.0)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      cuts.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_d = d;
  }
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-10; }),
             cuts.end());

  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Segment s;
    s.lo = cuts[i];
    s.hi = cuts[i + 1];
    s.tag = direction_of(eval_poly(coeffs, s.lo), eval_poly(coeffs, s.hi));
    s.eval = [coeffs](double x) { return eval_poly(coeffs, x); };
    s.poly = coeffs;
    segments.push_back(std::move(s));
  }
  return PiecewiseMonotoneFn(std::move(segments), spec);
}

PiecewiseMonotoneFn exp_fn() {
  Segment s;
  s.tag = Monotonicity::kIncreasing;
  s.eval = [](double x) { return std::exp(x); };
  return PiecewiseMonotoneFn({std::move(s)}, FunctionSpec{"exp", 1, {}});
}

PiecewiseMonotoneFn tent_fn() {
  Segment up;
  up.lo = 0.0;
  up.hi = 0.5;
  up.tag = Monotonicity::kIncreasing;
  up.eval = [](double x) { return 2.0 * x; };
  up.poly = std::vector<double>{0.0, 2.0};
  Segment down;
  down.lo = 0.5;
  down.hi = 1.0;
  down.tag = Monotonicity::kDecreasing;
  down.eval = [](double x) { return 2.0 - 2.0 * x; };
  down.poly = std::vector<double>{2.0, -2.0};
  return PiecewiseMonotoneFn({std::move(up), std::move(down)}, FunctionSpec{"tent", 1, {}});
}

PiecewiseMonotoneFn cos_fn() {
  Segment s;
  s.tag = Monotonicity::kDecreasing;
  s.eval = [](double x) { return std::cos(x); };
  return PiecewiseMonotoneFn({std::move(s)}, FunctionSpec{"cos", 1, {}});
}

PiecewiseMonotoneFn sin_fn() {
  Segment s;
  s.tag = Monotonicity::kIncreasing;
  s.eval = [](double x) { return std::sin(x); };
  return PiecewiseMonotoneFn({std::move(s)}, FunctionSpec{"sin", 1, {}});
}

PiecewiseMonotoneFn cosh_sqrt2_fn() {
  Segment s;
  s.tag = Monotonicity::kIncreasing;
  s.eval = [](double x) { return std::cosh(std::sqrt(2.0) * x); };
  return PiecewiseMonotoneFn({std::move(s)}, FunctionSpec{"cosh_sqrt2", 1, {}});
}

PiecewiseMonotoneFn make_function(const FunctionSpec& spec) {
  if (spec.kind == "monomial") return monomial_fn(spec.n);
  if (spec.kind == "poly") return poly_fn(spec.coeffs);
  if (spec.kind == "exp") return exp_fn();
  if (spec.kind == "tent") return tent_fn();
  if (spec.kind == "cos") return cos_fn();
  if (spec.kind == "sin") return sin_fn();
  if (spec.kind == "cosh_sqrt2") return cosh_sqrt2_fn();
  throw std::invalid_argument("make_function: unknown kind \"" + spec.kind + "\"");
}

PiecewiseMonotoneFn scale_fn(const PiecewiseMonotoneFn& f, double alpha) {
  if (auto coeffs = global_poly(f)) {
    for (double& c : *coeffs) c *= alpha;
    return poly_fn(std::move(*coeffs));
  }
  std::vector<Segment> segments;
  for (const Segment& s : f.segments()) {
    Segment t = s;
    auto base = s.eval;
    t.eval = [base, alpha](double x) { return alpha * base(x); };
    if (s.poly) {
      auto scaled = *s.poly;
      for (double& c : scaled) c *= alpha;
      t.poly = std::move(scaled);
    }
    if (alpha == 0.0) {
      t.tag = Monotonicity::kConstant;
    } else if (alpha < 0.0) {
      if (s.tag == Monotonicity::kIncreasing) t.tag = Monotonicity::kDecreasing;
      if (s.tag == Monotonicity::kDecreasing) t.tag = Monotonicity::kIncreasing;
    }
    segments.push_back(std::move(t));
  }
  return PiecewiseMonotoneFn(std::move(segments));
}

PiecewiseMonotoneFn sum_fn(const PiecewiseMonotoneFn& f, const PiecewiseMonotoneFn& g) {
  // Two global polynomials sum to a polynomial; poly_fn re-derives the
  // monotone segmentation, so non-monotone sums are handled there.
  auto pf = global_poly(f);
  auto pg = global_poly(g);
  if (pf && pg) {
    std::vector<double> coeffs(std::max(pf->size(), pg->size()), 0.0);
    for (std::size_t k = 0; k < pf->size(); ++k) coeffs[k] += (*pf)[k];
    for (std::size_t k = 0; k < pg->size(); ++k) coeffs[k] += (*pg)[k];
    return poly_fn(std::move(coeffs));
  }

  std::vector<double> cuts;
  for (const Segment& s : f.segments()) {
    cuts.push_back(s.lo);
    cuts.push_back(s.hi);
  }
  for (const Segment& s : g.segments()) {
    cuts.push_back(s.lo);
    cuts.push_back(s.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             cuts.end());

  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Segment s;
    s.lo = cuts[i];
    s.hi = cuts[i + 1];
    double mid = 0.5 * (s.lo + s.hi);
    const Segment& sf = segment_at(f, mid);
    const Segment& sg = segment_at(g, mid);
    auto ef = sf.eval;
    auto eg = sg.eval;
    s.eval = [ef, eg](double x) { return ef(x) + eg(x); };
    s.tag = direction_of(s.eval(s.lo), s.eval(s.hi));
    if (sf.poly && sg.poly) {
      std::vector<double> sum(std::max(sf.poly->size(), sg.poly->size()), 0.0);
      for (std::size_t k = 0; k < sf.poly->size(); ++k) sum[k] += (*sf.poly)[k];
      for (std::size_t k = 0; k < sg.poly->size(); ++k) sum[k] += (*sg.poly)[k];
      s.poly = std::move(sum);
    }
    segments.push_back(std::move(s));
  }
  return PiecewiseMonotoneFn(std::move(segments));
}

PiecewiseMonotoneFn compose_increasing(const std::function<double(double)>& g,
                                       const PiecewiseMonotoneFn& f) {
  std::vector<Segment> segments;
  for (const Segment& s : f.segments()) {
    Segment t;
    t.lo = s.lo;
    t.hi = s.hi;
    t.tag = s.tag;
    auto base = s.eval;
    t.eval = [g, base](double x) { return g(base(x)); };
    segments.push_back(std::move(t));
  }
  return PiecewiseMonotoneFn(std::move(segments));
}

PiecewiseMonotoneFn pow_fn(const PiecewiseMonotoneFn& f, int n) {
  if (n < 1) throw std::invalid_argument("pow_fn: exponent must be positive");
  if (f.fmin() < -1e-12) throw std::invalid_argument("pow_fn: function must be nonnegative");
  std::vector<Segment> segments;
  for (const Segment& s : f.segments()) {
    Segment t;
    t.lo = s.lo;
    t.hi = s.hi;
    t.tag = s.tag;
    auto base = s.eval;
    t.eval = [base, n](double x) { return std::pow(base(x), n); };
    if (s.poly) {
      std::vector<double> acc{1.0};
      for (int k = 0; k < n; ++k) acc = poly_multiply(acc, *s.poly);
      t.poly = std::move(acc);
    }
    segments.push_back(std::move(t));
  }
  return PiecewiseMonotoneFn(std::move(segments));
}

}  // namespace qint

#include "qint/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "qint/simple_function.hpp"

namespace qint::reference {

namespace {

// Deterministic low-discrepancy scramble for two-parameter regions.
double unit_point(int i, int count) { return (static_cast<double>(i) + 0.5) / count; }
double unit_scramble(int i) { return std::fmod(0.6180339887498949 * (i + 1), 1.0); }

double restricted(const PiecewiseMonotoneFn& f, double a, double b, const QMeasure& mu,
                  const QuadratureConfig& cfg) {
  return integrate_restricted(f, IntervalSet(a, b), mu, 0.0, cfg);
}

ClosedForm entry(std::string id, std::string description,
                 std::function<bool(const CaseParams&)> valid,
                 std::function<double(const CaseParams&)> closed,
                 std::function<double(const CaseParams&, const QuadratureConfig&)> engine,
                 std::function<CaseParams(int, int)> sample) {
  return ClosedForm{std::move(id),     std::move(description), std::move(valid),
                    std::move(closed), std::move(engine),      std::move(sample)};
}

std::vector<ClosedForm> build_catalog() {
  std::vector<ClosedForm> list;
  const double q3 = 0.75;

  // --- destructive pairs, offset 3/4 -------------------------------------
  list.push_back(entry(
      "destr34_x_low", "integral of x over [0,b], offset-3/4 pairs, b <= 3/4",
      [](const CaseParams& p) { return p.b > 0.0 && p.b <= 0.75; },
      [](const CaseParams& p) { return 0.5 * p.b * p.b; },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(monomial_fn(1), 0.0, p.b, QMeasure::destructive_pairs(0.75), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.05 + 0.7 * unit_point(i, count), 1}; }));

  list.push_back(entry(
      "destr34_x_high", "integral of x over [0,b], offset-3/4 pairs, b >= 3/4",
      [](const CaseParams& p) { return p.b >= 0.75 && p.b <= 1.0; },
      [](const CaseParams& p) { return 1.5 * p.b - 9.0 / 16.0 - 0.5 * p.b * p.b; },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(monomial_fn(1), 0.0, p.b, QMeasure::destructive_pairs(0.75), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.75 + 0.25 * unit_point(i, count), 1}; }));

  list.push_back(entry(
      "destr34_xn_low", "integral of x^n over [0,b], offset-3/4 pairs, b <= 3/4",
      [](const CaseParams& p) { return p.b > 0.0 && p.b <= 0.75 && p.n >= 1 && p.n <= 8; },
      [](const CaseParams& p) { return std::pow(p.b, p.n + 1) / (p.n + 1); },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(monomial_fn(p.n), 0.0, p.b, QMeasure::destructive_pairs(0.75), cfg);
      },
      [](int i, int count) {
        return CaseParams{0.0, 0.1 + 0.65 * unit_point(i, count), 1 + i % 4};
      }));

  list.push_back(entry(
      "destr34_xn_high", "integral of x^n over [0,b], offset-3/4 pairs, b >= 3/4",
      [](const CaseParams& p) { return p.b >= 0.75 && p.b <= 1.0 && p.n >= 1 && p.n <= 8; },
      [q3](const CaseParams& p) {
        return (std::pow(p.b, p.n + 1) - 2.0 * std::pow(p.b - q3, p.n + 1)) / (p.n + 1);
      },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(monomial_fn(p.n), 0.0, p.b, QMeasure::destructive_pairs(0.75), cfg);
      },
      [](int i, int count) {
        return CaseParams{0.0, 0.75 + 0.25 * unit_point(i, count), 1 + i % 4};
      }));

  list.push_back(entry(
      "destr34_deviation",
      "classical-minus-quantum gap 2(b-3/4)^(n+1)/(n+1) for x^n, offset-3/4 pairs",
      [](const CaseParams& p) { return p.b >= 0.75 && p.b <= 1.0 && p.n >= 1 && p.n <= 8; },
      [q3](const CaseParams& p) { return 2.0 * std::pow(p.b - q3, p.n + 1) / (p.n + 1); },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        PiecewiseMonotoneFn f = monomial_fn(p.n);
        return restricted(f, 0.0, p.b, QMeasure::plain_lebesgue(), cfg) -
               restricted(f, 0.0, p.b, QMeasure::destructive_pairs(0.75), cfg);
      },
      [](int i, int count) {
        return CaseParams{0.0, 0.75 + 0.25 * unit_point(i, count), 1 + i % 4};
      }));

  // --- destructive pairs, offset 1/2 -------------------------------------
  list.push_back(entry(
      "destr12_x_narrow", "integral of x over (a,b), offset-1/2 pairs, b-a <= 1/2",
      [](const CaseParams& p) {
        return p.a >= 0.0 && p.a < p.b && p.b <= 1.0 && p.b - p.a <= 0.5;
      },
      [](const CaseParams& p) { return 0.5 * (p.b * p.b - p.a * p.a); },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(monomial_fn(1), p.a, p.b, QMeasure::destructive_pairs(0.5), cfg);
      },
      [](int i, int count) {
        double a = 0.5 * unit_point(i, count);
        double b = a + 0.05 + 0.45 * unit_scramble(i);
        return CaseParams{a, std::min(b, 1.0), 1};
      }));

  list.push_back(entry(
      "destr12_x_wide", "integral of x over (a,b), offset-1/2 pairs, b-a >= 1/2",
      [](const CaseParams& p) {
        return p.a >= 0.0 && p.a < p.b && p.b <= 1.0 && p.b - p.a >= 0.5;
      },
      [](const CaseParams& p) {
        return 0.5 * p.a * p.a - 0.5 * p.b * p.b + p.b - 0.25;
      },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(monomial_fn(1), p.a, p.b, QMeasure::destructive_pairs(0.5), cfg);
      },
      [](int i, int count) {
        double a = 0.45 * unit_point(i, count);
        double b = a + 0.5 + (0.5 - a) * unit_scramble(i);
        return CaseParams{a, std::min(b, 1.0), 1};
      }));

  list.push_back(entry(
      "destr12_deviation", "classical-minus-quantum gap b^2 - a^2 - b + 1/4, offset-1/2 pairs",
      [](const CaseParams& p) {
        return p.a >= 0.0 && p.a < p.b && p.b <= 1.0 && p.b - p.a >= 0.5;
      },
      [](const CaseParams& p) { return p.b * p.b - p.a * p.a - p.b + 0.25; },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        PiecewiseMonotoneFn f = monomial_fn(1);
        return restricted(f, p.a, p.b, QMeasure::plain_lebesgue(), cfg) -
               restricted(f, p.a, p.b, QMeasure::destructive_pairs(0.5), cfg);
      },
      [](int i, int count) {
        double a = 0.45 * unit_point(i, count);
        double b = a + 0.5 + (0.5 - a) * unit_scramble(i);
        return CaseParams{a, std::min(b, 1.0), 1};
      }));

  // --- Lebesgue-squared ---------------------------------------------------
  list.push_back(entry(
      "leb2_xn_centered", "a-centered integral of x^n over [0,1], Lebesgue squared",
      [](const CaseParams& p) { return p.a >= 0.0 && p.a <= 1.0 && p.n >= 1 && p.n <= 8; },
      [](const CaseParams& p) {
        double c = p.a;
        double n = p.n;
        return 2.0 / ((n + 1.0) * (n + 2.0)) -
               std::pow(c, n) * (1.0 - 2.0 * n / (n + 1.0) * c + 2.0 * n / (n + 2.0) * c * c);
      },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return integrate(monomial_fn(p.n), QMeasure::lebesgue_squared(), p.a, cfg);
      },
      [](int i, int count) { return CaseParams{unit_point(i, count), 1.0, 1 + i % 4}; }));

  list.push_back(entry(
      "leb2_xn_ab", "integral of x^n over (a,b), Lebesgue squared",
      [](const CaseParams& p) {
        return p.a >= 0.0 && p.a < p.b && p.b <= 1.0 && p.n >= 1 && p.n <= 8;
      },
      [](const CaseParams& p) {
        double n = p.n;
        return 2.0 / ((n + 1.0) * (n + 2.0)) * (std::pow(p.b, n + 2) - std::pow(p.a, n + 2)) -
               2.0 * std::pow(p.a, n + 1) / (n + 1.0) * (p.b - p.a);
      },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(monomial_fn(p.n), p.a, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) {
        double a = 0.6 * unit_point(i, count);
        double b = a + 0.05 + (0.95 - a) * unit_scramble(i);
        return CaseParams{a, std::min(b, 1.0), 1 + i % 4};
      }));

  list.push_back(entry(
      "leb2_exp", "integral of e^x over (a,b), Lebesgue squared",
      [](const CaseParams& p) { return p.a >= 0.0 && p.a < p.b && p.b <= 1.0; },
      [](const CaseParams& p) {
        return 2.0 * (std::exp(p.b) - std::exp(p.a) - std::exp(p.a) * (p.b - p.a));
      },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(exp_fn(), p.a, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) {
        double a = 0.6 * unit_point(i, count);
        double b = a + 0.05 + (0.95 - a) * unit_scramble(i);
        return CaseParams{a, std::min(b, 1.0), 1};
      }));

  list.push_back(entry(
      "leb2_sum_xx2", "integral of x + x^2 over [0,b], Lebesgue squared",
      [](const CaseParams& p) { return p.b > 0.0 && p.b <= 1.0; },
      [](const CaseParams& p) {
        return p.b * p.b * p.b / 3.0 + std::pow(p.b, 4) / 6.0;
      },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(poly_fn({0.0, 1.0, 1.0}), 0.0, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.05 + 0.95 * unit_point(i, count), 1}; }));

  list.push_back(entry(
      "leb2_diff_xx2_low", "integral of x - x^2 over [0,b], Lebesgue squared, b <= 1/2",
      [](const CaseParams& p) { return p.b > 0.0 && p.b <= 0.5; },
      [](const CaseParams& p) {
        return p.b * p.b * p.b / 3.0 - std::pow(p.b, 4) / 6.0;
      },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(poly_fn({0.0, 1.0, -1.0}), 0.0, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.05 + 0.45 * unit_point(i, count), 1}; }));

  list.push_back(entry(
      "leb2_diff_xx2_high", "integral of x - x^2 over [0,b], Lebesgue squared, b >= 1/2",
      [](const CaseParams& p) { return p.b >= 0.5 && p.b <= 1.0; },
      [](const CaseParams& p) {
        double b = p.b;
        return -1.0 / 24.0 + b / 3.0 - b * b + 5.0 / 3.0 * b * b * b -
               5.0 / 6.0 * b * b * b * b;
      },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(poly_fn({0.0, 1.0, -1.0}), 0.0, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.5 + 0.5 * unit_point(i, count), 1}; }));

  list.push_back(entry(
      "leb2_tent_low", "integral of the tent map over [0,b], Lebesgue squared, b <= 1/2",
      [](const CaseParams& p) { return p.b > 0.0 && p.b <= 0.5; },
      [](const CaseParams& p) { return 2.0 / 3.0 * p.b * p.b * p.b; },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(tent_fn(), 0.0, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.05 + 0.45 * unit_point(i, count), 1}; }));

  list.push_back(entry(
      "leb2_tent_high", "integral of the tent map over [0,b], Lebesgue squared, b >= 1/2",
      [](const CaseParams& p) { return p.b >= 0.5 && p.b <= 1.0; },
      [](const CaseParams& p) {
        double b = p.b;
        return 1.0 / 3.0 - 2.0 * b + 4.0 * b * b - 2.0 * b * b * b;
      },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(tent_fn(), 0.0, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.5 + 0.5 * unit_point(i, count), 1}; }));

  list.push_back(entry(
      "leb2_cos", "integral of cos x over [0,b], Lebesgue squared",
      [](const CaseParams& p) { return p.b > 0.0 && p.b <= 1.0; },
      [](const CaseParams& p) { return 2.0 * (1.0 - std::cos(p.b)); },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(cos_fn(), 0.0, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.05 + 0.95 * unit_point(i, count), 1}; }));

  list.push_back(entry(
      "leb2_sin", "integral of sin x over [0,b], Lebesgue squared",
      [](const CaseParams& p) { return p.b > 0.0 && p.b <= 1.0; },
      [](const CaseParams& p) { return 2.0 * (p.b - std::sin(p.b)); },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(sin_fn(), 0.0, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.05 + 0.95 * unit_point(i, count), 1}; }));

  list.push_back(entry(
      "leb2_cosh_sqrt2", "integral of cosh(sqrt(2) x) over [0,b], Lebesgue squared",
      [](const CaseParams& p) { return p.b > 0.0 && p.b <= 1.0; },
      [](const CaseParams& p) { return std::cosh(std::sqrt(2.0) * p.b) - 1.0; },
      [](const CaseParams& p, const QuadratureConfig& cfg) {
        return restricted(cosh_sqrt2_fn(), 0.0, p.b, QMeasure::lebesgue_squared(), cfg);
      },
      [](int i, int count) { return CaseParams{0.0, 0.05 + 0.95 * unit_point(i, count), 1}; }));

  return list;
}

CheckReport make_report(std::string id, const CaseParams& params, double engine_value,
                        double closed_value, double tolerance) {
  CheckReport r;
  r.id = std::move(id);
  r.params = params;
  r.engine_value = engine_value;
  r.closed_value = closed_value;
  r.abs_difference = std::abs(engine_value - closed_value);
  r.tolerance = tolerance;
  r.pass = r.abs_difference <= tolerance;
  return r;
}

}  // namespace

const std::vector<ClosedForm>& closed_form_catalog() {
  static const std::vector<ClosedForm> catalog = build_catalog();
  return catalog;
}

CheckReport verify_case(const std::string& id, const CaseParams& params,
                        const QuadratureConfig& cfg, double tolerance) {
  for (const ClosedForm& form : closed_form_catalog()) {
    if (form.id != id) continue;
    if (!form.valid(params)) {
      throw std::invalid_argument("verify_case: parameters outside the validity region of \"" +
                                  id + "\"");
    }
    return make_report(id, params, form.engine(params, cfg), form.closed(params), tolerance);
  }
  throw std::invalid_argument("verify_case: unknown case id \"" + id + "\"");
}

double ftc_second_derivative(const PiecewiseMonotoneFn& f, double b, double h,
                             const QuadratureConfig& cfg) {
  if (!(h > 0.0) || !(b - 2.0 * h > 0.0) || !(b + 2.0 * h < 1.0)) {
    throw std::invalid_argument("ftc_second_derivative: need 0 < b-2h and b+2h < 1");
  }
  QMeasure mu = QMeasure::lebesgue_squared();
  auto G = [&](double t) { return integrate_restricted(f, IntervalSet(0.0, t), mu, 0.0, cfg); };
  return 0.5 * (G(b + h) - 2.0 * G(b) + G(b - h)) / (h * h);
}

double ftc_double_integral(const PiecewiseMonotoneFn& f, double b, const QuadratureConfig& cfg) {
  if (!(b > 0.0 && b <= 1.0)) {
    throw std::invalid_argument("ftc_double_integral: need 0 < b <= 1");
  }
  std::vector<double> xsplits;
  for (const Segment& s : f.segments()) xsplits.push_back(s.hi);

  auto inner = [&](double t) {
    if (t <= 0.0) return 0.0;
    return adaptive_integrate([&f](double x) { return f(x); }, 0.0, t, xsplits, 1e-12,
                              cfg.max_subdivisions)
        .value;
  };
  auto outer = adaptive_integrate(inner, 0.0, b, xsplits, cfg.abs_tol, cfg.max_subdivisions);
  return 2.0 * outer.value;
}

double derivative_at_zero(const PiecewiseMonotoneFn& f, double h, const QuadratureConfig& cfg) {
  if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("derivative_at_zero: need 0 < h < 1");
  QMeasure mu = QMeasure::lebesgue_squared();
  return integrate_restricted(f, IntervalSet(0.0, h), mu, 0.0, cfg) / h;
}

CheckReport decomposition_check(const PiecewiseMonotoneFn& f, double a, double b,
                                const QuadratureConfig& cfg, double tolerance) {
  if (!(a >= 0.0 && a < b && b <= 1.0)) {
    throw std::invalid_argument("decomposition_check: need 0 <= a < b <= 1");
  }
  QMeasure mu = QMeasure::lebesgue_squared();
  double lhs = integrate_restricted(f, IntervalSet(a, b), mu, 0.0, cfg);
  double classical_head =
      integrate_restricted(f, IntervalSet(0.0, a), QMeasure::plain_lebesgue(), 0.0, cfg);
  double rhs = integrate_restricted(f, IntervalSet(0.0, b), mu, 0.0, cfg) -
               integrate_restricted(f, IntervalSet(0.0, a), mu, 0.0, cfg) -
               2.0 * (b - a) * classical_head;
  return make_report("decomposition", CaseParams{a, b, 1}, lhs, rhs, tolerance);
}

CheckReport additivity_check(const PiecewiseMonotoneFn& f, const PiecewiseMonotoneFn& g, double b,
                             const QuadratureConfig& cfg, double tolerance) {
  QMeasure mu = QMeasure::lebesgue_squared();
  IntervalSet window(0.0, b);
  double lhs = integrate_restricted(sum_fn(f, g), window, mu, 0.0, cfg);
  double rhs = integrate_restricted(f, window, mu, 0.0, cfg) +
               integrate_restricted(g, window, mu, 0.0, cfg);
  return make_report("additivity", CaseParams{0.0, b, 1}, lhs, rhs, tolerance);
}

std::vector<WitnessReport> run_witnesses(const QuadratureConfig& cfg) {
  std::vector<WitnessReport> out;

  {
    // Nonlinearity of the quantum integral of a two-step simple function.
    QMeasure mu = QMeasure::lebesgue_squared();
    IntervalSet a_set(0.0, 0.25);
    IntervalSet b_set(0.5, 0.75);
    IntervalSet rest = a_set.unite(b_set).complement();
    SimpleFunction f({{1.0, a_set}, {2.0, b_set}, {0.0, rest}});
    double integral = integrate_simple(f, mu, 0.0);
    double linear_combination = 1.0 * mu(a_set) + 2.0 * mu(b_set);
    WitnessReport w;
    w.id = "witness_nonlinear_simple";
    w.description = "quantum integral of a*chi_A + b*chi_B must differ from a mu(A) + b mu(B)";
    w.observed = std::abs(integral - linear_combination);
    w.required = 0.01;
    w.holds = w.observed >= w.required;
    out.push_back(w);
  }

  {
    // x - x^2 is not monotone on [0,1]; additivity must fail at b = 1.
    CheckReport r = additivity_check(monomial_fn(1), scale_fn(monomial_fn(2), -1.0), 1.0, cfg,
                                     kDefaultTolerance);
    WitnessReport w;
    w.id = "witness_nonadditive_xx2";
    w.description = "integral of x - x^2 over [0,1] must miss (int x) - (int x^2) by >= 0.02";
    w.observed = r.abs_difference;
    w.required = 0.02;
    w.holds = w.observed >= w.required;
    out.push_back(w);
  }

  {
    // The tent map is not monotone; the half-second-derivative at b = 0.75
    // lands at 4 - 6b = -0.5, exactly 1 away from f(b) = 0.5.
    PiecewiseMonotoneFn tent = tent_fn();
    double estimate = ftc_second_derivative(tent, 0.75, 1e-2, cfg);
    WitnessReport w;
    w.id = "witness_tent_ftc";
    w.description =
        "half second derivative of the tent integral at b=0.75 must miss f(b) by exactly 1";
    w.observed = std::abs(estimate - tent(0.75));
    w.required = 1.0;
    w.holds = std::abs(w.observed - w.required) <= 1e-3;
    out.push_back(w);
  }

  return out;
}

VerifySummary run_verification(const QuadratureConfig& cfg, int samples_per_entry,
                               double tolerance) {
  if (samples_per_entry < 1) {
    throw std::invalid_argument("run_verification: need at least one sample per entry");
  }
  VerifySummary summary;
  const auto& catalog = closed_form_catalog();
  summary.catalog_entries = static_cast<int>(catalog.size());
  for (const ClosedForm& form : catalog) {
    for (int i = 0; i < samples_per_entry; ++i) {
      CaseParams params = form.sample(i, samples_per_entry);
      summary.reports.push_back(
          make_report(form.id, params, form.engine(params, cfg), form.closed(params), tolerance));
    }
    ++summary.entries_covered;
  }
  summary.witnesses = run_witnesses(cfg);

  summary.all_pass = true;
  for (const CheckReport& r : summary.reports) summary.all_pass = summary.all_pass && r.pass;
  for (const WitnessReport& w : summary.witnesses) summary.all_pass = summary.all_pass && w.holds;
  return summary;
}

}  // namespace qint::reference

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qint/integrate.hpp"
#include "qint/simple_function.hpp"

using namespace qint;

namespace {

const QuadratureConfig kCfg{};

double quantum(const PiecewiseMonotoneFn& f, const QMeasure& mu, double center = 0.0) {
  return integrate(f, mu, center, kCfg);
}

double over(const PiecewiseMonotoneFn& f, double a, double b, const QMeasure& mu) {
  return integrate_restricted(f, IntervalSet(a, b), mu, 0.0, kCfg);
}

}  // namespace

TEST_CASE("monomials under the squared measure") {
  QMeasure mu = QMeasure::lebesgue_squared();
  for (int n = 1; n <= 6; ++n) {
    double expected = 2.0 / ((n + 1.0) * (n + 2.0));
    CHECK(quantum(monomial_fn(n), mu) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("constant functions integrate to c times the total measure") {
  for (const QMeasure& mu : {QMeasure::lebesgue_squared(), QMeasure::plain_lebesgue(),
                             QMeasure::destructive_pairs(0.75)}) {
    PiecewiseMonotoneFn c = scale_fn(monomial_fn(0), 0.7);
    CHECK(quantum(c, mu) == doctest::Approx(0.7 * mu.total()).epsilon(1e-9));
  }
}

TEST_CASE("centered integral of x under the squared measure") {
  QMeasure mu = QMeasure::lebesgue_squared();
  PiecewiseMonotoneFn x = monomial_fn(1);
  for (double a : {0.0, 0.1, 0.3, 0.55, 0.8, 1.0}) {
    double expected = 1.0 / 3.0 - a + a * a - 2.0 / 3.0 * a * a * a;
    CHECK(integrate(x, mu, a, kCfg) == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("destructive-pairs integrals of x") {
  PiecewiseMonotoneFn x = monomial_fn(1);
  QMeasure d34 = QMeasure::destructive_pairs(0.75);
  CHECK(over(x, 0.0, 1.0, d34) == doctest::Approx(7.0 / 16.0).epsilon(1e-9));
  CHECK(over(x, 0.0, 0.5, d34) == doctest::Approx(0.125).epsilon(1e-9));
  CHECK(over(x, 0.0, 0.75, d34) == doctest::Approx(9.0 / 32.0).epsilon(1e-9));
  CHECK(over(x, 0.0, 0.9, d34) ==
        doctest::Approx(1.5 * 0.9 - 9.0 / 16.0 - 0.5 * 0.81).epsilon(1e-9));

  QMeasure d12 = QMeasure::destructive_pairs(0.5);
  CHECK(over(x, 0.0, 0.5, d12) == doctest::Approx(1.0 / 8.0).epsilon(1e-9));
  CHECK(over(x, 0.0, 0.75, d12) == doctest::Approx(7.0 / 32.0).epsilon(1e-9));
  CHECK(over(x, 0.0, 1.0, d12) == doctest::Approx(1.0 / 4.0).epsilon(1e-9));
  // General (a, b) with b - a >= 1/2.
  CHECK(over(x, 0.2, 0.9, d12) ==
        doctest::Approx(0.5 * 0.04 - 0.5 * 0.81 + 0.9 - 0.25).epsilon(1e-9));
}

TEST_CASE("indicator windows reproduce the measure") {
  QMeasure mu = QMeasure::lebesgue_squared();
  PiecewiseMonotoneFn one = monomial_fn(0);
  for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {0.2, 0.7}, {0.5, 0.6}}) {
    CHECK(over(one, a, b, mu) == doctest::Approx((b - a) * (b - a)).epsilon(1e-9));
  }
}

TEST_CASE("window and subspace routes agree at center zero") {
  // integrate_restricted would throw if its two routes disagreed; exercise a
  // spread of measures and windows.
  PiecewiseMonotoneFn f = poly_fn({0.0, 1.0, 1.0});
  for (const QMeasure& mu : {QMeasure::lebesgue_squared(), QMeasure::destructive_pairs(0.5),
                             QMeasure::plain_lebesgue()}) {
    for (auto [a, b] :
         std::vector<std::pair<double, double>>{{0.0, 0.35}, {0.25, 0.8}, {0.6, 1.0}}) {
      CHECK_NOTHROW(over(f, a, b, mu));
    }
  }
}

TEST_CASE("non-monotone integrands, squared measure") {
  QMeasure mu = QMeasure::lebesgue_squared();
  PiecewiseMonotoneFn hump = poly_fn({0.0, 1.0, -1.0});
  // Increasing branch.
  CHECK(over(hump, 0.0, 0.4, mu) ==
        doctest::Approx(std::pow(0.4, 3) / 3.0 - std::pow(0.4, 4) / 6.0).epsilon(1e-8));
  // Past the peak the closed form changes; value at b = 1 is 1/8.
  CHECK(over(hump, 0.0, 1.0, mu) == doctest::Approx(0.125).epsilon(1e-8));

  PiecewiseMonotoneFn tent = tent_fn();
  CHECK(over(tent, 0.0, 0.4, mu) == doctest::Approx(2.0 / 3.0 * 0.064).epsilon(1e-8));
  double b = 0.75;
  CHECK(over(tent, 0.0, b, mu) ==
        doctest::Approx(1.0 / 3.0 - 2 * b + 4 * b * b - 2 * b * b * b).epsilon(1e-8));
}

TEST_CASE("homogeneity") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> alpha_dist(-3.0, 3.0);
  QMeasure mus[] = {QMeasure::lebesgue_squared(), QMeasure::destructive_pairs(0.75),
                    QMeasure::plain_lebesgue()};
  PiecewiseMonotoneFn fns[] = {monomial_fn(2), exp_fn(), tent_fn()};
  for (const QMeasure& mu : mus) {
    for (const PiecewiseMonotoneFn& f : fns) {
      double base = quantum(f, mu);
      for (int trial = 0; trial < 6; ++trial) {
        double alpha = alpha_dist(rng);
        double scaled = quantum(scale_fn(f, alpha), mu);
        REQUIRE(std::abs(scaled - alpha * base) <= 3.0 * kCfg.abs_tol +
                                                       1e-12 * std::abs(alpha * base));
      }
    }
  }
}

TEST_CASE("plain lebesgue reduces to the classical integral") {
  QMeasure plain = QMeasure::plain_lebesgue();
  struct Case {
    PiecewiseMonotoneFn f;
    double integral;  // over [0,1]
  };
  std::vector<Case> cases;
  cases.push_back({monomial_fn(1), 0.5});
  cases.push_back({monomial_fn(3), 0.25});
  cases.push_back({exp_fn(), std::exp(1.0) - 1.0});
  cases.push_back({tent_fn(), 0.5});
  cases.push_back({poly_fn({0.0, 1.0, -1.0}), 0.5 - 1.0 / 3.0});
  cases.push_back({cos_fn(), std::sin(1.0)});

  for (const Case& c : cases) {
    CHECK(std::abs(quantum(c.f, plain) - c.integral) <= 3e-10);
    // Centering only shifts by a * mu(X) for additive measures.
    for (double a : {0.25, 0.7, 1.5}) {
      double centered = integrate(c.f, plain, a, kCfg);
      CHECK(std::abs(centered - (c.integral - a)) <= 3e-10);
    }
  }
}

TEST_CASE("centering genuinely matters for non-additive measures") {
  QMeasure mu = QMeasure::lebesgue_squared();
  PiecewiseMonotoneFn x = monomial_fn(1);
  double at_half = integrate(x, mu, 0.5, kCfg);
  double shifted = quantum(x, mu) - 0.5 * mu.total();
  CHECK(std::abs(at_half - shifted) > 1e-3);
}

TEST_CASE("power route matches direct integration of f^n") {
  QuadratureConfig cfg;
  PiecewiseMonotoneFn x = monomial_fn(1);
  QMeasure mu = QMeasure::lebesgue_squared();

  // n = 1 collapses to the plain integral.
  CHECK(integrate_power(x, 1, mu, cfg) == doctest::Approx(quantum(x, mu)).epsilon(1e-9));

  for (int n : {2, 3, 5}) {
    double via_power = integrate_power(x, n, mu, cfg);
    double direct = quantum(pow_fn(x, n), mu);
    CHECK(std::abs(via_power - direct) <= 2.0 * cfg.abs_tol);
    CHECK(via_power == doctest::Approx(2.0 / ((n + 1.0) * (n + 2.0))).epsilon(1e-8));
  }

  // Windowed power under destructive pairs: frozen value 31/96 at n=2.
  QMeasure d34 = QMeasure::destructive_pairs(0.75);
  double windowed = integrate_power(x, 2, d34, cfg, IntervalSet(0.0, 1.0));
  CHECK(windowed == doctest::Approx(31.0 / 96.0).epsilon(1e-8));

  CHECK_THROWS_AS(integrate_power(scale_fn(x, -1.0), 2, mu, cfg), std::invalid_argument);
}

TEST_CASE("change of variable") {
  QuadratureConfig cfg;
  QMeasure mu = QMeasure::lebesgue_squared();
  PiecewiseMonotoneFn x = monomial_fn(1);

  IncreasingChange expc{[](double t) { return std::exp(t); },
                        [](double t) { return std::exp(t); },
                        [](double y) { return std::log(y); },
                        "exp"};
  // exp o id over (a, b) against the closed form.
  for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {0.2, 0.7}}) {
    double got = integrate_via_g(x, expc, mu, 0.0, cfg, IntervalSet(a, b));
    double expected = 2.0 * (std::exp(b) - std::exp(a) - std::exp(a) * (b - a));
    CHECK(got == doctest::Approx(expected).epsilon(1e-8));
    // And against the direct engine on the composed function.
    double direct = over(exp_fn(), a, b, mu);
    CHECK(std::abs(got - direct) <= 2.0 * cfg.abs_tol);
  }

  IncreasingChange ident{[](double t) { return t; }, [](double) { return 1.0; },
                         [](double y) { return y; }, "identity"};
  CHECK(integrate_via_g(x, ident, mu, 0.0, cfg) ==
        doctest::Approx(quantum(x, mu)).epsilon(1e-9));
  // Identity with a center reproduces the centered integral.
  CHECK(integrate_via_g(x, ident, mu, 0.4, cfg) ==
        doctest::Approx(integrate(x, mu, 0.4, cfg)).epsilon(1e-8));

  IncreasingChange cube{[](double t) { return t * t * t; },
                        [](double t) { return 3.0 * t * t; },
                        [](double y) { return std::cbrt(y); },
                        "cube"};
  CHECK(integrate_via_g(x, cube, mu, 0.0, cfg) == doctest::Approx(0.1).epsilon(1e-8));
  CHECK(std::abs(integrate_via_g(x, cube, mu, 0.0, cfg) - quantum(pow_fn(x, 3), mu)) <=
        2.0 * cfg.abs_tol);

  IncreasingChange bogus{[](double t) { return -t; }, [](double) { return -1.0; },
                         [](double y) { return -y; }, "neg"};
  CHECK_THROWS_AS(integrate_via_g(x, bogus, mu, 0.0, cfg), std::invalid_argument);
}

TEST_CASE("nonlinearity witness") {
  QMeasure mu = QMeasure::lebesgue_squared();
  IntervalSet a_set(0.0, 0.25);
  IntervalSet b_set(0.5, 0.75);
  SimpleFunction f({{1.0, a_set}, {2.0, b_set}, {0.0, a_set.unite(b_set).complement()}});
  double integral = integrate_simple(f, mu, 0.0);
  double linear = 1.0 * mu(a_set) + 2.0 * mu(b_set);
  CHECK(mu(a_set.unite(b_set)) != doctest::Approx(mu(a_set) + mu(b_set)));
  CHECK(std::abs(integral - linear) > 0.05);
}

TEST_CASE("quadrature failure carries its best estimate") {
  QuadratureConfig strangled;
  strangled.abs_tol = 1e-14;
  strangled.max_subdivisions = 2;
  try {
    integrate(poly_fn({0.0, 1.0, -1.0}), QMeasure::lebesgue_squared(), 0.0, strangled);
    FAIL("expected quadrature_error");
  } catch (const quadrature_error& e) {
    CHECK(e.achieved_error > strangled.abs_tol);
    CHECK(std::abs(e.best_estimate) < 1.0);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qint/integrate.hpp"

using namespace qint;

namespace {

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("identity function") {
  PiecewiseMonotoneFn f = monomial_fn(1);
  IntervalSet s = super_level_set(f, 0.3);
  REQUIRE(s.size() == 1);
  CHECK(close(s.parts()[0].lo, 0.3));
  CHECK(close(s.parts()[0].hi, 1.0));

  CHECK(super_level_set(f, 1.0).empty());
  CHECK(super_level_set(f, -0.5) == IntervalSet::unit());
  CHECK(sub_level_set(f, 0.0).empty());
  IntervalSet below = sub_level_set(f, 0.25);
  REQUIRE(below.size() == 1);
  CHECK(close(below.parts()[0].hi, 0.25));
}

TEST_CASE("quadratic hump x - x^2") {
  PiecewiseMonotoneFn f = poly_fn({0.0, 1.0, -1.0});
  REQUIRE(f.segments().size() == 2);
  CHECK(f.fmax() == doctest::Approx(0.25).epsilon(1e-9));

  // At the peak level the set is empty up to root tolerance.
  CHECK(super_level_set(f, 0.25).total_length() <= 1e-6);

  // Roots of x - x^2 = 0.21 are 0.3 and 0.7.
  IntervalSet s = super_level_set(f, 0.21);
  REQUIRE(s.size() == 1);
  CHECK(close(s.parts()[0].lo, 0.3, 1e-9));
  CHECK(close(s.parts()[0].hi, 0.7, 1e-9));
}

TEST_CASE("tent produces split sub-level sets") {
  PiecewiseMonotoneFn f = tent_fn();
  IntervalSet above = super_level_set(f, 0.5);
  REQUIRE(above.size() == 1);  // (0.25, 0.75) merges across the peak
  CHECK(close(above.parts()[0].lo, 0.25, 1e-9));
  CHECK(close(above.parts()[0].hi, 0.75, 1e-9));

  IntervalSet below = sub_level_set(f, 0.5);
  REQUIRE(below.size() == 2);
  CHECK(close(below.parts()[0].hi, 0.25, 1e-9));
  CHECK(close(below.parts()[1].lo, 0.75, 1e-9));

  CHECK(super_level_set(f, 1.0).empty());
}

TEST_CASE("decreasing function anchors at the left") {
  PiecewiseMonotoneFn f = cos_fn();
  IntervalSet s = super_level_set(f, std::cos(0.4));
  REQUIRE(s.size() == 1);
  CHECK(close(s.parts()[0].lo, 0.0));
  CHECK(close(s.parts()[0].hi, 0.4, 1e-9));
}

TEST_CASE("constant segments respect strict inequality") {
  PiecewiseMonotoneFn c = monomial_fn(0);  // f == 1
  CHECK(super_level_set(c, 1.0).empty());
  CHECK(super_level_set(c, 0.999) == IntervalSet::unit());
  CHECK(sub_level_set(c, 1.0).empty());
  CHECK(sub_level_set(c, 1.001) == IntervalSet::unit());
}

TEST_CASE("level sets respect membership sampling") {
  for (const PiecewiseMonotoneFn& f :
       {poly_fn({0.1, 0.3, -0.9, 0.5}), tent_fn(), exp_fn(), cos_fn()}) {
    for (double frac : {0.15, 0.4, 0.75}) {
      double lam = f.fmin() + frac * (f.fmax() - f.fmin());
      IntervalSet above = super_level_set(f, lam);
      IntervalSet below = sub_level_set(f, lam);
      for (int k = 0; k <= 400; ++k) {
        double x = k / 400.0;
        double v = f(x);
        if (std::abs(v - lam) < 1e-6) continue;  // boundary slop
        REQUIRE(above.contains(x) == (v > lam));
        REQUIRE(below.contains(x) == (v < lam));
      }
    }
  }
}

TEST_CASE("mis-tagged segments are rejected") {
  Segment bad;
  bad.lo = 0.0;
  bad.hi = 1.0;
  bad.tag = Monotonicity::kDecreasing;
  bad.eval = [](double x) { return x; };
  CHECK_THROWS_AS(PiecewiseMonotoneFn({bad}), std::invalid_argument);

  Segment humped;
  humped.lo = 0.0;
  humped.hi = 1.0;
  humped.tag = Monotonicity::kIncreasing;
  humped.eval = [](double x) { return x - x * x; };
  CHECK_THROWS_AS(PiecewiseMonotoneFn({humped}), std::invalid_argument);
}

TEST_CASE("function specs rebuild the same function") {
  PiecewiseMonotoneFn f = poly_fn({0.0, 1.0, 1.0});
  REQUIRE(f.spec().has_value());
  PiecewiseMonotoneFn g = make_function(*f.spec());
  for (int k = 0; k <= 100; ++k) {
    double x = k / 100.0;
    CHECK(close(f(x), g(x)));
  }
  CHECK_THROWS_AS(make_function(FunctionSpec{"nope", 1, {}}), std::invalid_argument);
}

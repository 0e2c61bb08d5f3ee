#pragma once

/// Closed-form oracles for the worked integrals, and the verification
/// machinery that pits the layer-cake engine against them.
///
/// Every catalog entry pairs a closed-form expression with the engine route
/// that should reproduce it; verify_case reports the absolute difference at
/// a stated tolerance.  The module also carries the calculus identities for
/// the Lebesgue-squared measure:
///
///   second-derivative form:  (1/2) d^2/db^2 I([0,b], f) = f(b)
///   double-integral form:    I([0,b], f) = 2 int_0^b int_0^t f(x) dx dt
///
/// for continuous monotone f, their derivative-at-zero companion, the
/// decomposition of I([a,b], f) for increasing f, and additivity for
/// same-direction sums.  Non-monotone integrands are the standing
/// counterexamples, exposed through the expected-fail witnesses.

#include <functional>
#include <string>
#include <vector>

#include "qint/function.hpp"
#include "qint/integrate.hpp"
#include "qint/quadrature.hpp"

namespace qint::reference {

struct CaseParams {
  double a = 0.0;  // lower bound, or the center for centered entries
  double b = 1.0;  // upper bound
  int n = 1;       // monomial degree where applicable

  friend bool operator==(const CaseParams&, const CaseParams&) = default;
};

struct ClosedForm {
  std::string id;
  std::string description;
  std::function<bool(const CaseParams&)> valid;
  std::function<double(const CaseParams&)> closed;
  std::function<double(const CaseParams&, const QuadratureConfig&)> engine;
  /// Deterministic i-th of `count` parameter points inside the validity
  /// region.
  std::function<CaseParams(int i, int count)> sample;
};

struct CheckReport {
  std::string id;
  CaseParams params;
  double engine_value = 0.0;
  double closed_value = 0.0;
  double abs_difference = 0.0;
  double tolerance = 0.0;
  bool pass = false;  // pass <=> abs_difference <= tolerance
};

inline constexpr double kDefaultTolerance = 1e-7;

const std::vector<ClosedForm>& closed_form_catalog();

CheckReport verify_case(const std::string& id, const CaseParams& params,
                        const QuadratureConfig& cfg, double tolerance = kDefaultTolerance);

/// (1/2) of the central second difference of G(b) = I([0,b], f) under the
/// Lebesgue-squared measure; estimates f(b) for monotone f.
double ftc_second_derivative(const PiecewiseMonotoneFn& f, double b, double h,
                             const QuadratureConfig& cfg);

/// 2 int_0^b int_0^t f(x) dx dt by nested classical quadrature.
double ftc_double_integral(const PiecewiseMonotoneFn& f, double b, const QuadratureConfig& cfg);

/// Forward-difference estimate of G'(0); O(h)-small for monotone f.
double derivative_at_zero(const PiecewiseMonotoneFn& f, double h, const QuadratureConfig& cfg);

/// I([a,b], f) against I([0,b], f) - I([0,a], f) - 2 (b-a) int_0^a f, for
/// increasing nonnegative f; the classical term runs through the plain-
/// Lebesgue engine path so both sides share one noise model.
CheckReport decomposition_check(const PiecewiseMonotoneFn& f, double a, double b,
                                const QuadratureConfig& cfg,
                                double tolerance = kDefaultTolerance);

/// |I([0,b], f+g) - I([0,b], f) - I([0,b], g)| under Lebesgue-squared.
CheckReport additivity_check(const PiecewiseMonotoneFn& f, const PiecewiseMonotoneFn& g, double b,
                             const QuadratureConfig& cfg, double tolerance = kDefaultTolerance);

/// Expected-fail witnesses: quantities that must stay AWAY from the naive
/// value.  `holds` is true when the expected gap is present.
struct WitnessReport {
  std::string id;
  std::string description;
  double observed = 0.0;
  double required = 0.0;
  bool holds = false;
};

std::vector<WitnessReport> run_witnesses(const QuadratureConfig& cfg);

struct VerifySummary {
  std::vector<CheckReport> reports;
  std::vector<WitnessReport> witnesses;
  int catalog_entries = 0;
  int entries_covered = 0;
  bool all_pass = false;  // every report passes and every witness holds
};

/// Runs every catalog entry at `samples_per_entry` deterministic parameter
/// points, plus the witnesses.
VerifySummary run_verification(const QuadratureConfig& cfg, int samples_per_entry,
                               double tolerance = kDefaultTolerance);

}  // namespace qint::reference

#pragma once

/// Brute-force reference evaluators for the quantum integral.
///
/// riemann_sum_oracle integrates the layer-cake definition by midpoint sums
/// over a uniform level grid (`grid_per_unit` points per unit of level
/// range).  It shares nothing with the adaptive engine: level crossings are
/// re-solved by its own fixed-step bisection and set measures are recomputed
/// from first principles on flat interval buffers.  Convergence is O(1/N) or
/// better, which makes it the independent check for every engine path.
///
/// plateau_sum_oracle handles simple functions exactly: the level integrand
/// is a step function with finitely many plateaus, so the sum is closed form.

#include <optional>

#include "qint/function.hpp"
#include "qint/interval_set.hpp"
#include "qint/measure.hpp"
#include "qint/simple_function.hpp"

namespace qint {

double riemann_sum_oracle(const PiecewiseMonotoneFn& f, const QMeasure& mu, double center,
                          long grid_per_unit,
                          const std::optional<IntervalSet>& window = std::nullopt);

double plateau_sum_oracle(const SimpleFunction& f, const QMeasure& mu, double center = 0.0);

/// True when riemann_sum_oracle will take the batched-kernel sweep for these
/// arguments (single polynomial segment, single-interval window, length-based
/// measure).  Exposed for the kernel-equivalence tests.
bool oracle_uses_kernels(const PiecewiseMonotoneFn& f, const QMeasure& mu, double center,
                         const std::optional<IntervalSet>& window = std::nullopt);

}  // namespace qint

#pragma once

/// JSON forms of the library's domain objects.
///
///   IntervalSet      [[lo, hi], ...]
///   QMeasure         {"kind":"lebesgue2"} | {"kind":"destructive","offset":d}
///                    | {"kind":"lebesgue"} | {"kind":"coin","n":n}
///                    | {"kind":"squared","weights":[...]}
///   FunctionSpec     {"kind":"monomial","n":2}, {"kind":"poly","coeffs":[...]},
///                    {"kind":"exp"|"tent"|"cos"|"sin"|"cosh_sqrt2"},
///                    {"kind":"simple","pieces":[[alpha,[[lo,hi],...]],...]}
///
/// Parsers throw std::invalid_argument naming the offending field.

#include <json.hpp>
#include <optional>

#include "qint/function.hpp"
#include "qint/interval_set.hpp"
#include "qint/measure.hpp"
#include "qint/simple_function.hpp"

namespace qint {

using Json = nlohmann::ordered_json;

Json to_json(const IntervalSet& set);
IntervalSet interval_set_from_json(const Json& j);

Json to_json(const QMeasure& mu);
QMeasure measure_from_json(const Json& j);

Json to_json(const FunctionSpec& spec);
FunctionSpec function_spec_from_json(const Json& j);

/// Continuum simple functions ({"kind":"simple",...}).
Json to_json(const SimpleFunction& f);
SimpleFunction simple_function_from_json(const Json& j);

/// Shortest decimal representation that round-trips, or a fixed digit count
/// when digits >= 0.
std::string format_double(double value, int digits = -1);

}  // namespace qint

#include "qint/json_io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <variant>

namespace qint {

namespace {

double require_number(const Json& j, const char* field) {
  if (!j.is_number()) {
    throw std::invalid_argument(std::string("expected a number in field \"") + field + "\"");
  }
  return j.get<double>();
}

}  // namespace

Json to_json(const IntervalSet& set) {
  Json arr = Json::array();
  for (const Interval& iv : set.parts()) arr.push_back(Json::array({iv.lo, iv.hi}));
  return arr;
}

IntervalSet interval_set_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("interval set: expected an array of [lo,hi]");
  std::vector<std::pair<double, double>> parts;
  for (const Json& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw std::invalid_argument("interval set: each entry must be [lo, hi]");
    }
    parts.emplace_back(require_number(item[0], "lo"), require_number(item[1], "hi"));
  }
  return IntervalSet(std::move(parts));
}

Json to_json(const QMeasure& mu) {
  Json j;
  switch (mu.kind()) {
    case MeasureKind::kLebesgueSquared: j["kind"] = "lebesgue2"; break;
    case MeasureKind::kPlainLebesgue: j["kind"] = "lebesgue"; break;
    case MeasureKind::kDestructivePairs:
      j["kind"] = "destructive";
      j["offset"] = mu.offset();
      break;
    case MeasureKind::kSquaredCounting:
      j["kind"] = "coin";
      j["n"] = mu.flips();
      break;
    case MeasureKind::kSquaredWeights:
      j["kind"] = "squared";
      j["weights"] = mu.weights();
      break;
  }
  return j;
}

QMeasure measure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("measure: field \"kind\" is required");
  }
  std::string kind = j["kind"].get<std::string>();
  if (kind == "lebesgue2") return QMeasure::lebesgue_squared();
  if (kind == "lebesgue") return QMeasure::plain_lebesgue();
  if (kind == "destructive") {
    if (!j.contains("offset")) throw std::invalid_argument("measure: field \"offset\" is required");
    return QMeasure::destructive_pairs(require_number(j["offset"], "offset"));
  }
  if (kind == "coin") {
    if (!j.contains("n")) throw std::invalid_argument("measure: field \"n\" is required");
    return QMeasure::squared_counting(j["n"].get<std::uint32_t>());
  }
  if (kind == "squared") {
    if (!j.contains("weights") || !j["weights"].is_array()) {
      throw std::invalid_argument("measure: field \"weights\" is required");
    }
    return QMeasure::squared_weights(j["weights"].get<std::vector<double>>());
  }
  throw std::invalid_argument("measure: unknown kind \"" + kind + "\"");
}

Json to_json(const FunctionSpec& spec) {
  Json j;
  j["kind"] = spec.kind;
  if (spec.kind == "monomial") j["n"] = spec.n;
  if (spec.kind == "poly") j["coeffs"] = spec.coeffs;
  return j;
}

FunctionSpec function_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("fn: field \"kind\" is required");
  }
  FunctionSpec spec;
  spec.kind = j["kind"].get<std::string>();
  if (spec.kind == "monomial") {
    if (!j.contains("n")) throw std::invalid_argument("fn: field \"n\" is required");
    spec.n = j["n"].get<int>();
  } else if (spec.kind == "poly") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
      throw std::invalid_argument("fn: field \"coeffs\" is required");
    }
    spec.coeffs = j["coeffs"].get<std::vector<double>>();
  }
  return spec;
}

Json to_json(const SimpleFunction& f) {
  Json pieces = Json::array();
  for (const auto& [value, support] : f.pieces()) {
    pieces.push_back(Json::array({value, to_json(std::get<IntervalSet>(support))}));
  }
  Json j;
  j["kind"] = "simple";
  j["pieces"] = pieces;
  return j;
}

SimpleFunction simple_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array()) {
    throw std::invalid_argument("fn: field \"pieces\" is required for kind \"simple\"");
  }
  std::vector<SimpleFunction::Piece> pieces;
  for (const Json& item : j["pieces"]) {
    if (!item.is_array() || item.size() != 2) {
      throw std::invalid_argument("fn: each piece must be [value, interval-set]");
    }
    pieces.emplace_back(require_number(item[0], "pieces.value"),
                        interval_set_from_json(item[1]));
  }
  return SimpleFunction(std::move(pieces));
}

std::string format_double(double value, int digits) {
  if (digits >= 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace qint

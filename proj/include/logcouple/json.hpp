#pragma once

// JSON encodings. Rationals are strings ("3", "-1/2"), vectors are dense
// arrays of rationals, ∞ is the string "inf", Ψ-elements are levels.

#include <nlohmann/json.hpp>

#include "logcouple/eventual.hpp"
#include "logcouple/psi_subset.hpp"
#include "logcouple/sfunction.hpp"
#include "logcouple/term.hpp"
#include "logcouple/vector.hpp"

namespace logcouple {

using json = nlohmann::json;

inline json to_json(const LogVector& v) {
  json out = json::array();
  for (const auto& c : v.dense()) out.push_back(to_string(c));
  return out;
}

inline json to_json(const ExtValue& v) { return v.is_infinite() ? json("inf") : to_json(v.finite()); }

inline json to_json(const SFunction& f) {
  if (f.is_constant()) return {{"kind", "const"}, {"value", to_json(f.value())}};
  json shifts = json::array();
  for (const auto& s : f.shifts()) shifts.push_back(json::array({s.k, to_string(s.q)}));
  return {{"kind", "linear"}, {"shifts", shifts}, {"beta", to_json(f.beta())}};
}

inline json to_json(const PsiInterval& i) {
  return {{"lo_level", i.lo}, {"hi_level", i.hi ? json(*i.hi) : json(nullptr)}};
}

inline json to_json(const PiecewiseSFunction& f) {
  json out = json::array();
  for (const auto& p : f.pieces()) out.push_back({{"interval", to_json(p.interval)}, {"fn", to_json(p.fn)}});
  return out;
}

inline json to_json(const PsiSubset& s) {
  json intervals = json::array();
  for (const auto& i : s.intervals()) intervals.push_back(to_json(i));
  return {{"intervals", intervals}, {"points", s.points()}};
}

inline json to_json(const EventualForm& f) {
  json out;
  if (f.is_constant()) {
    out = {{"kind", "constant"}, {"value", to_json(f.constant().value)}};
  } else {
    out = {{"kind", "affine"}, {"q", to_string(f.affine().q)}, {"beta", to_json(f.affine().beta)}};
  }
  out["threshold"] = to_json(f.threshold);
  return out;
}

// Decoding, for round trips and replay.

inline LogVector vector_from_json(const json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(parse_rational(c.get<std::string>()));
  return LogVector::from_dense(coords);
}

inline ExtValue ext_value_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtValue::infinity();
  return vector_from_json(j);
}

inline SFunction sfunction_from_json(const json& j) {
  if (j.at("kind") == "const") return SFunction::constant(ext_value_from_json(j.at("value")));
  std::vector<Shift> shifts;
  for (const auto& s : j.at("shifts")) shifts.push_back(Shift{s.at(0).get<long long>(), parse_rational(s.at(1).get<std::string>())});
  return SFunction::linear(std::move(shifts), vector_from_json(j.at("beta")));
}

inline PsiInterval interval_from_json(const json& j) {
  PsiInterval i{j.at("lo_level").get<Level>(), std::nullopt};
  if (!j.at("hi_level").is_null()) i.hi = j.at("hi_level").get<Level>();
  return i;
}

inline PiecewiseSFunction piecewise_from_json(const json& j) {
  std::vector<Piece> pieces;
  for (const auto& p : j) pieces.push_back(Piece{interval_from_json(p.at("interval")), sfunction_from_json(p.at("fn"))});
  return PiecewiseSFunction(pieces);
}

inline PsiSubset psi_subset_from_json(const json& j) {
  std::vector<PsiInterval> runs;
  for (const auto& i : j.at("intervals")) runs.push_back(interval_from_json(i));
  for (const auto& p : j.at("points")) runs.push_back(PsiInterval{p.get<Level>(), p.get<Level>() + 1});
  return PsiSubset::from_runs(std::move(runs));
}

}  // namespace logcouple

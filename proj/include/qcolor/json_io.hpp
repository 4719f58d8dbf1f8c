#pragma once

// JSON encodings (nlohmann/json). Kept apart from the core headers so the
// algorithms do not depend on a JSON library.

#include "qcolor/coloring_search.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/laurent.hpp"
#include "qcolor/linear_coloring.hpp"
#include "qcolor/quandle.hpp"
#include "qcolor/twist.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace qcolor::json {

using nlohmann::json;

// Quandles: {"order": q, "table": [[...], ...], "name": "..."}, 0-based.

inline json to_json(const FiniteQuandle& q) {
  json j;
  j["order"] = q.order();
  j["table"] = q.table();
  j["name"] = q.name();
  return j;
}

inline FiniteQuandle quandle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("table")) throw ParseError("quandle JSON needs a \"table\" field");
  FiniteQuandle::Table t;
  try {
    t = j.at("table").get<FiniteQuandle::Table>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("quandle table: ") + e.what());
  }
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(t.size()))
    throw ValidationError("\"order\" does not match the table size");
  std::string name = j.value("name", std::string{});
  FiniteQuandle q(std::move(t), std::move(name));
  auto rep = verify_quandle_axioms(q);
  if (!rep.well_formed()) throw ValidationError("malformed quandle table: " + *rep.malformed);
  if (!rep.ok()) throw ValidationError("table violates quandle axiom " + std::to_string(rep.failures.front().axiom));
  return q;
}

// Diagrams: {"crossings": [{"over": o, "right": r, "left": l}, ...]}.

inline json to_json(const OrientedDiagram& d) {
  json xs = json::array();
  for (const auto& x : d.crossings()) xs.push_back({{"over", x.over}, {"right", x.right}, {"left", x.left}});
  return {{"crossings", xs}};
}

inline OrientedDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("crossings") || !j.at("crossings").is_array())
    throw ParseError("diagram JSON needs a \"crossings\" array");
  std::vector<CrossingTriple> xs;
  try {
    for (const auto& x : j.at("crossings"))
      xs.push_back({x.at("over").get<int>(), x.at("right").get<int>(), x.at("left").get<int>()});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("diagram crossing: ") + e.what());
  }
  OrientedDiagram d(std::move(xs));
  require_valid(d);
  return d;
}

// Big integers: JSON numbers when they fit in 64 bits, decimal strings
// otherwise.

inline json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer");
}

// Polynomials: coefficient arrays, index = degree (normalized polynomials
// start at t^0).

inline json to_json(const LaurentPoly& p) {
  json arr = json::array();
  if (p.is_zero()) return arr;
  if (p.low() < 0) throw ParameterError("negative exponents have no array encoding");
  for (int e = 0; e <= p.high(); ++e) arr.push_back(big_to_json(p.coeff(e)));
  return arr;
}

inline LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<BigInt> cs;
  for (const auto& c : j) cs.push_back(big_from_json(c));
  return LaurentPoly(std::move(cs));
}

// Colorings serialize as arrays indexed by arc id; counts as decimal strings.

inline json to_json(const LinearColoring& c) { return c.assignment; }
inline json count_to_json(const BigInt& count) { return count.str(); }

// Verdicts.

inline json to_json(const LinearColorabilityVerdict& v) {
  json j{{"colorable", v.colorable}};
  j["witness"] = v.witness ? json{{"p", v.witness->p}, {"k", v.witness->k}} : json(nullptr);
  return j;
}

inline json to_json(const LinearMinOrder& m) {
  return {{"min_order", m.n}, {"witness", {{"p", m.witness.p}, {"k", m.witness.k}}}};
}

inline json to_json(const QuandleMinOrder& m) {
  json j;
  j["min_order"] = m.order ? json(*m.order) : json("geq8");
  j["witness_quandle"] = m.order ? json(m.witness) : json(nullptr);
  return j;
}

inline json to_json(const TwistVerdict& v) {
  json j;
  j["q_value"] = v.q_value ? json(*v.q_value) : json("geq8");
  j["witness"] = v.q_value ? json(v.witness) : json(nullptr);
  return j;
}

}  // namespace qcolor::json

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pascalgeo/error.hpp"
#include "pascalgeo/hexagram.hpp"
#include "pascalgeo/pascal.hpp"
#include "pascalgeo/projgeom.hpp"
#include "pascalgeo/rational.hpp"
#include "pascalgeo/sextuple.hpp"
#include "pascalgeo/symbols.hpp"

namespace pascalgeo::json_io {

using Json = nlohmann::ordered_json;

inline Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

// Scalars: rationals travel as strings, integers are also accepted on input.

inline Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw ParseError("expected a rational string, got " + j.dump());
}

inline Json to_json(const Rational& r) { return to_string(r); }

inline P1Point p1_from(const Json& j) {
  if (j.is_string()) return parse_p1(j.get<std::string>());
  return P1Point::affine(rational_from(j));
}

inline Json to_json(const P1Point& p) { return p.to_value_string(); }

template <std::size_t N, class Tag>
Json to_json(const Homogeneous<N, Tag>& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(to_string(c));
  return out;
}

template <class H>
H homogeneous_from(const Json& j) {
  typename H::Coords c;
  if (!j.is_array() || j.size() != c.size()) {
    throw ParseError("expected " + std::to_string(c.size()) + " homogeneous coordinates, got " + j.dump());
  }
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = rational_from(j[i]);
  bool zero = true;
  for (const auto& x : c) zero = zero && x == 0;
  if (zero) throw DomainError("homogeneous coordinates are all zero");
  return H(c);
}

inline ProjPoint point_from(const Json& j) { return homogeneous_from<ProjPoint>(j); }
inline ProjLine line_from(const Json& j) { return homogeneous_from<ProjLine>(j); }

inline Json to_json(const std::optional<ProjLine>& l) { return l ? to_json(*l) : Json(nullptr); }

// Sextuples and symbols.

inline Json to_json(const Sextuple& h) {
  Json out = Json::object();
  for (Letter l : kLetters) out[std::string(1, to_char(l))] = to_json(h[l]);
  return out;
}

inline Sextuple sextuple_from(const Json& j) {
  if (!j.is_object()) throw ParseError("a sextuple is an object with keys A..F");
  if (j.size() != 6) throw ParseError("a sextuple has exactly the keys A..F");
  std::array<P1Point, 6> pts{P1Point::infinity(), P1Point::infinity(), P1Point::infinity(),
                             P1Point::infinity(), P1Point::infinity(), P1Point::infinity()};
  for (Letter l : kLetters) pts[index(l)] = p1_from(require(j, std::string(1, to_char(l)).c_str()));
  return Sextuple(pts);
}

inline Json to_json(const PascalSymbol& s) { return s.to_string(); }

inline PascalSymbol symbol_from(const Json& j) {
  if (!j.is_string()) throw ParseError("a symbol is a string like \"ABC/FED\"");
  return PascalSymbol::parse(j.get<std::string>());
}

inline Json to_json(const SymbolTriple& t) {
  Json out = Json::array();
  for (const auto& s : t.members()) out.push_back(s.to_string());
  return out;
}

inline Json to_json(const Partition& p) { return p.to_string(); }

// Degeneration specs.

inline Json homogeneous_json(const P1Point& p) { return Json::array({to_string(p[0]), to_string(p[1])}); }

inline Json to_json(const FiberPoint& f) {
  return std::visit(
      [](const auto& x) -> Json {
        using F = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<F, Codim2Fiber>) {
          return {{"kind", "codim2"}, {"coords", homogeneous_json(x.coords)}};
        } else if constexpr (std::is_same_v<F, Interior222Fiber>) {
          return {{"kind", "interior222"}, {"coords", to_json(x.coords)}};
        } else {
          return {{"kind", "lline222"}, {"marked", marked_to_string(x.marked)}, {"coords", homogeneous_json(x.coords)}};
        }
      },
      f);
}

inline FiberPoint fiber_from(const Json& j) {
  const auto kind = require(j, "kind");
  if (!kind.is_string()) throw ParseError("fiber kind must be a string");
  const std::string k = kind.get<std::string>();
  const Json& coords = require(j, "coords");
  if (k == "codim2") return Codim2Fiber{homogeneous_from<P1Point>(coords)};
  if (k == "interior222") return Interior222Fiber{point_from(coords)};
  if (k == "lline222") {
    const Json& m = require(j, "marked");
    if (!m.is_string()) throw ParseError("marked must be a string like \"AF.BE\"");
    return LLine222Fiber{parse_marked(m.get<std::string>()), homogeneous_from<P1Point>(coords)};
  }
  throw ParseError("unknown fiber kind '" + k + "'");
}

inline Json to_json(const DegenerationSpec& s) {
  return {{"base", to_json(s.base)}, {"symbol", to_json(s.symbol)}, {"fiber", to_json(s.fiber)}};
}

inline DegenerationSpec spec_from(const Json& j) {
  return {sextuple_from(require(j, "base")), symbol_from(require(j, "symbol")), fiber_from(require(j, "fiber"))};
}

// Classification.

inline Json to_json(const PolarTriangle& t) {
  Json cross = Json::array();
  for (const auto& c : t.cross_points) cross.push_back(to_json(c));
  return {{"P", to_json(t.p)},           {"Q", to_json(t.q)},           {"R", to_json(t.r)},
          {"P'", to_json(t.p_pole)},     {"Q'", to_json(t.q_pole)},     {"R'", to_json(t.r_pole)},
          {"CH", to_json(t.center)},     {"ch", to_json(t.axis)},       {"cross_points", cross}};
}

inline Json to_json(const Classification222& c) {
  const auto counts = c.counts();
  Json by_label = Json::object();
  for (const auto& [k, v] : counts.by_label) by_label[k] = v;
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json row{{"symbol", e.symbol.to_string()}, {"behaviour", to_string(e.behaviour)}, {"label", e.label}};
    if (e.kind) row["kind"] = to_string(*e.kind);
    if (e.line) row["line"] = to_json(*e.line);
    if (e.center) row["center"] = to_json(*e.center);
    row["defined_at_base"] = e.defined_at_base;
    entries.push_back(std::move(row));
  }
  return {{"geometry", to_json(c.geometry)},
          {"counts", {{"constant", counts.constant}, {"non_constant", counts.non_constant}, {"by_label", by_label}}},
          {"entries", entries}};
}

// Incidence reports.

template <class Carrier>
Json to_json(const IncidenceReport<Carrier>& r) {
  Json fams = Json::array();
  for (const auto& f : r.families) fams.push_back({{"carrier", to_json(f.carrier)}, {"members", f.members}});
  return {{"families", fams}};
}

template <class Carrier>
IncidenceReport<Carrier> report_from(const Json& j) {
  IncidenceReport<Carrier> out;
  const Json& fams = require(j, "families");
  if (!fams.is_array()) throw ParseError("families must be an array");
  for (const auto& f : fams) {
    IncidenceFamily<Carrier> fam{homogeneous_from<Carrier>(require(f, "carrier")), {}};
    for (const auto& m : require(f, "members")) {
      if (!m.is_string()) throw ParseError("member labels are strings");
      fam.members.push_back(m.get<std::string>());
    }
    out.families.push_back(std::move(fam));
  }
  return out;
}

}  // namespace pascalgeo::json_io

#pragma once

/// @file json_io.hpp
/// JSON encoding of the domain values. Exact quantities are strings in the
/// scalar grammar; matrix entries and indices are JSON integers.

#include <json.hpp>

#include "splittori/classify.hpp"
#include "splittori/monodromy.hpp"
#include "splittori/packing.hpp"
#include "splittori/recurrence.hpp"

namespace splittori {

using Json = nlohmann::ordered_json;

namespace detail {

template <typename E, std::size_t N>
E enum_from_name(const std::string& name, const std::array<E, N>& values, const char* (*to_name)(E)) {
  for (E v : values)
    if (name == to_name(v)) return v;
  throw ParseError("unknown name '" + name + "'");
}

}  // namespace detail

inline void to_json(Json& j, const Scalar& s) { j = format_scalar(s); }
inline void from_json(const Json& j, Scalar& s) { s = parse_scalar(j.get<std::string>()); }

inline void to_json(Json& j, const Point& p) { j = Json{{"x", p.x}, {"y", p.y}}; }
inline void from_json(const Json& j, Point& p) {
  p.x = j.at("x").get<Scalar>();
  p.y = j.at("y").get<Scalar>();
}

inline void to_json(Json& j, const IntMatrix2& m) { j = Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }
inline void from_json(const Json& j, IntMatrix2& m) {
  m = {j.at(0).at(0).get<std::int64_t>(), j.at(0).at(1).get<std::int64_t>(), j.at(1).at(0).get<std::int64_t>(),
       j.at(1).at(1).get<std::int64_t>()};
}

inline void to_json(Json& j, const CanonicalForm& c) {
  if (const auto* s = std::get_if<CanonicalForm::SigmaPoint>(&c.value))
    j = Json{{"kind", "sigma"}, {"ax", s->ax}, {"ay", s->ay}};
  else {
    const auto& q = std::get<CanonicalForm::QClass>(c.value);
    j = Json{{"kind", "Q"}, {"y", q.y}, {"x_rep", q.x_rep}};
  }
}
inline void from_json(const Json& j, CanonicalForm& c) {
  if (j.at("kind") == "sigma")
    c.value = CanonicalForm::SigmaPoint{j.at("ax").get<Scalar>(), j.at("ay").get<Scalar>()};
  else
    c.value = CanonicalForm::QClass{j.at("y").get<Scalar>(), j.at("x_rep").get<Scalar>()};
}

inline Json gamma_to_json(const GammaLattice& g) { return Json(g.basis()); }

inline void to_json(Json& j, const ChekanovInvariants& c) {
  j = Json{{"ell", c.ell}, {"d", c.d}, {"index_set", c.index_set}, {"count", c.count()}, {"gamma", gamma_to_json(c.gamma)}};
}

inline void to_json(Json& j, const Trajectory& t) {
  Json hits = Json::array();
  for (const auto& h : t.corner_hits) hits.push_back({{"from", h.from}, {"to", h.to}, {"corner", h.corner}});
  j = Json{{"start", t.start}, {"r", t.r},           {"k_min", t.k_min},          {"k_max", t.k_max},
           {"points", t.points}, {"corner_hits", hits}, {"stationary", t.stationary}};
}
inline void from_json(const Json& j, Trajectory& t) {
  t.start = j.at("start").get<Point>();
  t.r = j.at("r").get<Scalar>();
  t.k_min = j.at("k_min").get<std::int64_t>();
  t.k_max = j.at("k_max").get<std::int64_t>();
  t.points = j.at("points").get<std::vector<Point>>();
  t.stationary = j.at("stationary").get<bool>();
  t.corner_hits.clear();
  for (const auto& h : j.at("corner_hits"))
    t.corner_hits.push_back({h.at("from").get<std::int64_t>(), h.at("to").get<std::int64_t>(), h.at("corner").get<Point>()});
}

inline void to_json(Json& j, const ProbeStep& s) {
  j = Json{{"direction", {s.probe.direction.dx, s.probe.direction.dy}},
           {"start", s.probe.start},
           {"end", s.probe.end},
           {"start_edge", edge_name(s.probe.start_edge)},
           {"end_edge", edge_name(s.probe.end_edge)},
           {"from", s.from},
           {"to", s.to},
           {"matrix", s.matrix}};
}

inline void to_json(Json& j, const MonodromyGroup& g) {
  j = Json{{"case_tag", case_name(g.case_tag)},
           {"iso_type", iso_name(g.iso_type)},
           {"exactness", exactness_name(g.exactness)},
           {"generators", g.generators},
           {"lower_bound_generators", g.lower_bound_generators},
           {"normalized", g.normalized},
           {"conjugator", g.conjugator},
           {"family", {{"q", g.family.q}, {"m2", g.family.m2}, {"k2", g.family.k2}}}};
}
inline void from_json(const Json& j, MonodromyGroup& g) {
  using C = MonodromyCase;
  g.case_tag = detail::enum_from_name(j.at("case_tag").get<std::string>(),
                                      std::array{C::Mon1_5, C::Mon1, C::Mon3, C::Mon2, C::Mon5, C::Mon4, C::Mon4_5,
                                                 C::Mon6, C::Mon7, C::Mon8},
                                      case_name);
  using I = IsoType;
  g.iso_type = detail::enum_from_name(
      j.at("iso_type").get<std::string>(),
      std::array{I::Trivial, I::Z2, I::Z, I::Z_rtimes_Z2, I::Z2_ltimes_Z, I::Z2_ltimes_Z_rtimes_Z2}, iso_name);
  g.exactness = detail::enum_from_name(j.at("exactness").get<std::string>(),
                                       std::array{Exactness::Exact, Exactness::UpperBound}, exactness_name);
  g.generators = j.at("generators").get<std::vector<IntMatrix2>>();
  g.lower_bound_generators = j.at("lower_bound_generators").get<std::vector<IntMatrix2>>();
  g.normalized = j.at("normalized").get<Point>();
  g.conjugator = j.at("conjugator").get<IntMatrix2>();
  g.family.tag = g.case_tag;
  g.family.q = j.at("family").at("q").get<std::int64_t>();
  g.family.m2 = j.at("family").at("m2").get<std::int64_t>();
  g.family.k2 = j.at("family").at("k2").get<std::int64_t>();
}

inline Json cardinality_to_json(const Cardinality& c) { return c.str(); }
inline Cardinality cardinality_from_json(const Json& j) {
  std::string s = j.get<std::string>();
  if (s == "inf") return Cardinality::infinite();
  try {
    return Cardinality(Integer(s));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad cardinality '" + s + "'");
  }
}

inline Json packing_to_json(const PackingReport& r) {
  Json j{{"toric", cardinality_to_json(r.toric)}};
  j["ps_upper_bound"] = r.ps_bound ? Json(r.ps_bound->get_str()) : Json(nullptr);
  if (r.known)
    j["known"] = {{"value", cardinality_to_json(r.known->value)}, {"source", source_name(r.known->source)}};
  else
    j["known"] = nullptr;
  return j;
}

inline void to_json(Json& j, const BallTypes& b) {
  j = Json{{"clifford", b.clifford}, {"chekanov", b.chekanov}, {"nonmonotone", b.nonmonotone}};
}
inline void from_json(const Json& j, BallTypes& b) {
  b.clifford = j.at("clifford").get<bool>();
  b.chekanov = j.at("chekanov").get<bool>();
  b.nonmonotone = j.at("nonmonotone").get<bool>();
}

}  // namespace splittori

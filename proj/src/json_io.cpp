#include "nsdeg/json_io.hpp"

namespace nsdeg {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

Json to_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.minimal_generators();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["type"] = s.type();
  j["multiplicity"] = s.multiplicity();
  j["embedding_dim"] = s.embedding_dimension();
  return j;
}

Json to_json(const RelativeIdeal& e) {
  Json j;
  j["ambient"] = e.semigroup().minimal_generators();
  j["elements_below_conductor"] = e.elements_below_conductor();
  j["conductor"] = e.conductor();
  j["offset"] = e.offset();
  return j;
}

Json to_json(const DegreeReport& r) {
  Json j;
  j["generators"] = r.generators;
  j["frobenius"] = r.frobenius;
  j["genus"] = r.genus;
  j["multiplicity"] = r.multiplicity;
  j["embedding_dim"] = r.embedding_dim;
  j["type"] = r.type_r;
  j["cdeg"] = r.cdeg;
  j["ddeg"] = r.ddeg;
  j["tdeg"] = r.tdeg;
  j["canonical_index"] = r.canonical_index;
  j["gorenstein"] = r.gorenstein;
  j["almost_gorenstein"] = r.almost_gorenstein;
  j["ddeg_is_one"] = r.ddeg_is_one;
  j["idealization"] = {{"cdeg", optional_json(r.idealization.cdeg)}, {"ddeg", optional_json(r.idealization.ddeg)}};
  if (r.tcdeg)
    j["tcdeg"] = {{"lhs", r.tcdeg->lhs}, {"rhs", r.tcdeg->rhs}, {"equal", r.tcdeg->equal}};
  else
    j["tcdeg"] = nullptr;
  return j;
}

DegreeReport degree_report_from_json(const Json& j) {
  DegreeReport r;
  r.generators = j.at("generators").get<std::vector<std::int64_t>>();
  r.frobenius = j.at("frobenius").get<std::int64_t>();
  r.genus = j.at("genus").get<std::int64_t>();
  r.multiplicity = j.at("multiplicity").get<std::int64_t>();
  r.embedding_dim = j.at("embedding_dim").get<std::int64_t>();
  r.type_r = j.at("type").get<std::int64_t>();
  r.cdeg = j.at("cdeg").get<std::int64_t>();
  r.ddeg = j.at("ddeg").get<std::int64_t>();
  r.tdeg = j.at("tdeg").get<std::int64_t>();
  r.canonical_index = j.at("canonical_index").get<std::int64_t>();
  r.gorenstein = j.at("gorenstein").get<bool>();
  r.almost_gorenstein = j.at("almost_gorenstein").get<bool>();
  r.ddeg_is_one = j.at("ddeg_is_one").get<bool>();
  r.idealization.cdeg = optional_from<std::int64_t>(j.at("idealization").at("cdeg"));
  r.idealization.ddeg = optional_from<std::int64_t>(j.at("idealization").at("ddeg"));
  if (const auto& t = j.at("tcdeg"); !t.is_null())
    r.tcdeg = TcdegCheck{t.at("lhs").get<std::int64_t>(), t.at("rhs").get<std::int64_t>(), t.at("equal").get<bool>()};
  return r;
}

Json to_json(const HerzogData& h) {
  const auto& e = h.exponents;
  Json j;
  j["assignment"] = h.assignment;
  j["exponents"] = {{"a1", e.a1}, {"a2", e.a2}, {"b1", e.b1}, {"b2", e.b2}, {"c1", e.c1}, {"c2", e.c2}};
  j["ddeg_formula"] = h.ddeg_formula;
  j["cdeg_candidates"] = h.cdeg_candidates;
  return j;
}

Json to_json(const HerzogConsistency& c) {
  Json j;
  j["formula_ddeg"] = c.formula_ddeg;
  j["direct_ddeg"] = c.direct_ddeg;
  j["direct_cdeg"] = c.direct_cdeg;
  j["ddeg_match"] = c.ddeg_match;
  j["cdeg_in_candidates"] = c.cdeg_in_candidates;
  return j;
}

Json to_json(const IdealProfile& p) {
  Json j;
  j["ideal"] = to_json(p.ideal);
  j["gap_mask"] = p.gap_mask;
  j["closed"] = p.is_closed;
  j["reflexive"] = p.is_reflexive;
  j["principal"] = p.is_principal;
  j["canonical"] = p.is_canonical;
  j["rel_ddeg"] = p.rel_ddeg;
  Json w = Json::array();
  for (const auto& s : p.socle_witnesses) w.push_back({{"c", s.element}, {"n", s.dimension}});
  j["socle_witnesses"] = w;
  j["ext_check_required"] = p.ext_check_required();
  return j;
}

}  // namespace nsdeg

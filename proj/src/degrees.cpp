#include "nsdeg/degrees.hpp"

#include <string>

#include "nsdeg/error.hpp"

namespace nsdeg {

std::int64_t cdeg(const SemigroupPtr& s) {
  return length_quotient(canonical_ideal(s), RelativeIdeal::unit(s));
}

std::int64_t ddeg(const SemigroupPtr& s) {
  const RelativeIdeal k = canonical_ideal(s);
  return length_quotient(bidual(k), k);
}

std::int64_t tdeg(const SemigroupPtr& s) {
  return length_quotient(RelativeIdeal::unit(s), trace(canonical_ideal(s)));
}

std::int64_t canonical_index(const SemigroupPtr& s) { return reduction(canonical_ideal(s)).reduction_number; }

IdealizationDegrees idealization_degrees(const SemigroupPtr& s) {
  IdealizationDegrees out;
  if (s->is_full()) return out;
  out.cdeg = 2 * cdeg(s) + 2;
  if (s->type() > 1) out.ddeg = 2 * ddeg(s) - 1;
  return out;
}

NumericalSemigroup endomorphism_blowup(const SemigroupPtr& s) {
  if (s->is_full()) throw Error(ErrorCode::FullSemigroup, "m : m is undefined for a DVR");
  const RelativeIdeal m = RelativeIdeal::maximal(s);
  const RelativeIdeal blowup = colon(m, m);
  std::vector<std::int64_t> gaps;
  for (std::int64_t z = 1; z < blowup.conductor(); ++z)
    if (!blowup.contains(z)) gaps.push_back(z);
  return NumericalSemigroup::from_gaps(gaps);
}

TcdegCheck tcdeg_check(const SemigroupPtr& s) {
  if (s->is_full()) throw Error(ErrorCode::FullSemigroup, "m : m is undefined for a DVR");
  TcdegCheck out;
  out.lhs = cdeg(share(endomorphism_blowup(s)));
  out.rhs = cdeg(s) + s->multiplicity() - 2 * s->type();
  out.equal = out.lhs == out.rhs;
  return out;
}

DegreeReport compute_report(const SemigroupPtr& s) {
  DegreeReport r;
  r.generators = s->minimal_generators();
  r.frobenius = s->frobenius();
  r.genus = s->genus();
  r.multiplicity = s->multiplicity();
  r.embedding_dim = s->embedding_dimension();
  r.type_r = s->type();

  const RelativeIdeal unit = RelativeIdeal::unit(s);
  const RelativeIdeal k = canonical_ideal(s);
  r.cdeg = length_quotient(k, unit);
  r.ddeg = length_quotient(bidual(k), k);
  r.tdeg = length_quotient(unit, trace(k));
  r.canonical_index = reduction(k).reduction_number;
  r.gorenstein = r.type_r == 1;
  r.almost_gorenstein = r.cdeg == r.type_r - 1;
  r.ddeg_is_one = r.ddeg == 1;
  if (!s->is_full()) {
    r.idealization.cdeg = 2 * r.cdeg + 2;
    if (!r.gorenstein) r.idealization.ddeg = 2 * r.ddeg - 1;
    r.tcdeg = tcdeg_check(s);
  }
  return r;
}

DegreeReport classify(const SemigroupPtr& s) {
  DegreeReport r = compute_report(s);
  auto fail = [&](const std::string& what) {
    std::string gens;
    for (auto g : r.generators) gens += (gens.empty() ? "" : ",") + std::to_string(g);
    throw Error(ErrorCode::InternalInvariantViolation, what + " for <" + gens + ">");
  };
  if (r.cdeg < r.type_r - 1) fail("cdeg < type - 1");
  if (r.gorenstein != (r.cdeg == 0) || r.gorenstein != (r.ddeg == 0)) fail("gorenstein/cdeg/ddeg vanishing disagree");
  return r;
}

}  // namespace nsdeg

#include "nsdeg/herzog.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "nsdeg/degrees.hpp"
#include "nsdeg/error.hpp"

#include <omp.h>

namespace nsdeg {

namespace {

// n·g = first·p + second·q with n minimal.
struct PurePower {
  std::int64_t n = 0;
  std::int64_t first = 0;
  std::int64_t second = 0;
};

std::string triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  return "<" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ">";
}

PurePower pure_power(std::int64_t g, std::int64_t p, std::int64_t q) {
  // n = q always works (q·g = g·q), so the scan is bounded.
  for (std::int64_t n = 1; n <= q; ++n) {
    const std::int64_t x = n * g;
    std::optional<PurePower> found;
    for (std::int64_t alpha = 0; alpha * p <= x; ++alpha) {
      const std::int64_t rest = x - alpha * p;
      if (rest % q != 0) continue;
      if (found)
        throw Error(ErrorCode::AmbiguousDecomposition,
                    std::to_string(n) + "*" + std::to_string(g) + " has two representations in <" +
                        std::to_string(p) + "," + std::to_string(q) + ">");
      found = PurePower{n, alpha, rest / q};
    }
    if (found) return *found;
  }
  throw Error(ErrorCode::InternalInvariantViolation, "no pure-power relation for " + std::to_string(g));
}

HerzogData orient(std::int64_t a, std::int64_t b, std::int64_t c) {
  const PurePower x = pure_power(a, b, c);  // X^(a1+a2) = Y^b2 Z^c1
  const PurePower y = pure_power(b, a, c);  // Y^(b1+b2) = X^a1 Z^c2
  const PurePower z = pure_power(c, a, b);  // Z^(c1+c2) = X^a2 Y^b1
  HerzogData h;
  h.assignment = {a, b, c};
  h.exponents = {y.first, z.first, z.second, x.first, x.second, y.second};
  const auto& e = h.exponents;
  if (e.a1 <= 0 || e.a2 <= 0 || e.b1 <= 0 || e.b2 <= 0 || e.c1 <= 0 || e.c2 <= 0)
    throw Error(ErrorCode::InternalInvariantViolation, "pure-power relation with a zero exponent in " + triple(a, b, c));
  if (e.a1 + e.a2 != x.n || e.b1 + e.b2 != y.n || e.c1 + e.c2 != z.n)
    throw Error(ErrorCode::InternalInvariantViolation, "relations of " + triple(a, b, c) + " are not determinantal");
  h.ddeg_formula = e.a1 * e.b2 * e.c1;
  h.cdeg_candidates = {e.a1 * e.b1 * e.c1, e.a2 * e.b2 * e.c2};
  return h;
}

bool satisfies_inequalities(const HerzogExponents& e) { return e.a1 <= e.a2 && e.b2 <= e.b1 && e.c1 <= e.c2; }

}  // namespace

std::vector<HerzogData> herzog_assignments(const NumericalSemigroup& s) {
  const auto& g = s.minimal_generators();
  if (g.size() != 3)
    throw Error(ErrorCode::NotThreeGenerated, "embedding dimension is " + std::to_string(g.size()));
  if (s.is_symmetric()) throw Error(ErrorCode::SymmetricSemigroup, triple(g[0], g[1], g[2]) + " has type 1");
  const std::array<std::array<std::int64_t, 3>, 6> orders{{
      {g[0], g[1], g[2]},
      {g[1], g[2], g[0]},
      {g[2], g[0], g[1]},
      {g[2], g[1], g[0]},
      {g[1], g[0], g[2]},
      {g[0], g[2], g[1]},
  }};
  std::vector<HerzogData> out;
  for (const auto& o : orders) out.push_back(orient(o[0], o[1], o[2]));
  return out;
}

namespace {

// Least n > 0 with n·g ∈ ⟨p, q⟩, by dynamic programming on membership.
std::int64_t least_pure_power(std::int64_t g, std::int64_t p, std::int64_t q) {
  const std::int64_t limit = g * q;
  std::vector<char> member(static_cast<std::size_t>(limit + 1), 0);
  member[0] = 1;
  for (std::int64_t x = 1; x <= limit; ++x)
    member[static_cast<std::size_t>(x)] =
        (x >= p && member[static_cast<std::size_t>(x - p)]) || (x >= q && member[static_cast<std::size_t>(x - q)]);
  for (std::int64_t n = 1; n * g <= limit; ++n)
    if (member[static_cast<std::size_t>(n * g)]) return n;
  return -1;
}

}  // namespace

std::vector<HerzogData> herzog_orientations(const NumericalSemigroup& s) {
  std::vector<HerzogData> out;
  for (auto& h : herzog_assignments(s))
    if (satisfies_inequalities(h.exponents)) out.push_back(h);
  return out;
}

HerzogData herzog_matrix(const NumericalSemigroup& s) {
  for (auto& h : herzog_assignments(s))
    if (satisfies_inequalities(h.exponents)) return h;
  const auto& g = s.minimal_generators();
  throw Error(ErrorCode::NoValidOrientation, triple(g[0], g[1], g[2]));
}

std::string verify_herzog(const HerzogData& h) {
  const auto [a, b, c] = h.assignment;
  const auto& e = h.exponents;
  if (!satisfies_inequalities(e)) return "inequalities a1<=a2, b2<=b1, c1<=c2 fail";
  if (e.a1 * a + e.c2 * c != (e.b1 + e.b2) * b) return "minor X^a1 Z^c2 - Y^(b1+b2) does not vanish";
  if ((e.a1 + e.a2) * a != e.b2 * b + e.c1 * c) return "minor X^(a1+a2) - Y^b2 Z^c1 does not vanish";
  if (e.b1 * b + e.a2 * a != (e.c1 + e.c2) * c) return "minor Y^b1 X^a2 - Z^(c1+c2) does not vanish";
  if (least_pure_power(a, b, c) != e.a1 + e.a2) return "a1 + a2 is not the least pure power of X";
  if (least_pure_power(b, a, c) != e.b1 + e.b2) return "b1 + b2 is not the least pure power of Y";
  if (least_pure_power(c, a, b) != e.c1 + e.c2) return "c1 + c2 is not the least pure power of Z";
  if (h.ddeg_formula != e.a1 * e.b2 * e.c1) return "ddeg_formula is not a1*b2*c1";
  return {};
}

HerzogConsistency herzog_consistency(const SemigroupPtr& s) {
  HerzogConsistency out;
  out.data = herzog_matrix(*s);
  out.formula_ddeg = out.data.ddeg_formula;
  out.direct_ddeg = ddeg(s);
  out.direct_cdeg = cdeg(s);
  out.ddeg_match = out.formula_ddeg == out.direct_ddeg;
  out.cdeg_in_candidates =
      out.direct_cdeg == out.data.cdeg_candidates[0] || out.direct_cdeg == out.data.cdeg_candidates[1];
  return out;
}

namespace {

enum class TripleOutcome { Skip, Pass, Fail, NoOrientation, Error };

struct TripleResult {
  TripleOutcome outcome = TripleOutcome::Skip;
  bool ddeg_match = true;
  bool cdeg_in = true;
  bool verified = true;
  int realized = 0;  // 1 first, 2 second, 3 both
  bool fallback_cdeg_in = true;
};

TripleResult evaluate_triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  TripleResult r;
  if (std::gcd(std::gcd(a, b), c) != 1) return r;
  const std::array<std::int64_t, 3> gens{a, b, c};
  SemigroupPtr s = share(NumericalSemigroup::from_generators(gens));
  if (s->embedding_dimension() != 3 || s->is_symmetric()) return r;
  try {
    const HerzogConsistency hc = herzog_consistency(s);
    r.ddeg_match = hc.ddeg_match;
    r.cdeg_in = hc.cdeg_in_candidates;
    r.verified = verify_herzog(hc.data).empty();
    const bool first = hc.direct_cdeg == hc.data.cdeg_candidates[0];
    const bool second = hc.direct_cdeg == hc.data.cdeg_candidates[1];
    r.realized = (first ? 1 : 0) | (second ? 2 : 0);
    r.outcome = (r.ddeg_match && r.cdeg_in && r.verified) ? TripleOutcome::Pass : TripleOutcome::Fail;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoValidOrientation) {
      r.outcome = TripleOutcome::Error;
      return r;
    }
    r.outcome = TripleOutcome::NoOrientation;
    const HerzogData first = herzog_assignments(*s).front();
    const std::int64_t direct = cdeg(s);
    r.fallback_cdeg_in = direct == first.cdeg_candidates[0] || direct == first.cdeg_candidates[1];
  }
  return r;
}

std::vector<std::array<std::int64_t, 3>> candidate_triples(std::int64_t n) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t a = 3; a <= n; ++a)
    for (std::int64_t b = a + 1; b <= n; ++b)
      for (std::int64_t c = b + 1; c <= n; ++c) out.push_back({a, b, c});
  return out;
}

HerzogFamilyReport merge(std::int64_t n, const std::vector<std::array<std::int64_t, 3>>& triples,
                         const std::vector<TripleResult>& results) {
  HerzogFamilyReport rep;
  rep.max_generator = n;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const TripleResult& r = results[i];
    switch (r.outcome) {
      case TripleOutcome::Skip: continue;
      case TripleOutcome::NoOrientation:
        rep.no_orientation.push_back(triples[i]);
        if (!r.fallback_cdeg_in) ++rep.no_orientation_cdeg_outside_candidates;
        ++rep.checked;
        continue;
      case TripleOutcome::Error: rep.errors.push_back(triples[i]); ++rep.checked; continue;
      case TripleOutcome::Fail: rep.failures.push_back(triples[i]); break;
      case TripleOutcome::Pass: break;
    }
    ++rep.checked;
    if (!r.ddeg_match) ++rep.ddeg_mismatches;
    if (!r.cdeg_in) ++rep.cdeg_outside_candidates;
    if (!r.verified) ++rep.verification_failures;
    if (r.realized == 1) ++rep.cdeg_is_first;
    if (r.realized == 2) ++rep.cdeg_is_second;
    if (r.realized == 3) ++rep.cdeg_is_both;
  }
  return rep;
}

}  // namespace

HerzogFamilyReport herzog_family(std::int64_t max_generator, int threads) {
  const auto triples = candidate_triples(max_generator);
  std::vector<TripleResult> results(triples.size());
  const auto count = static_cast<std::int64_t>(triples.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& t = triples[static_cast<std::size_t>(i)];
    results[static_cast<std::size_t>(i)] = evaluate_triple(t[0], t[1], t[2]);
  }
  return merge(max_generator, triples, results);
}

HerzogFamilyReport herzog_family_serial(std::int64_t max_generator) {
  const auto triples = candidate_triples(max_generator);
  std::vector<TripleResult> results;
  results.reserve(triples.size());
  for (const auto& t : triples) results.push_back(evaluate_triple(t[0], t[1], t[2]));
  return merge(max_generator, triples, results);
}

}  // namespace nsdeg

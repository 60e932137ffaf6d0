#include "nsdeg/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <sstream>

#include "nsdeg/error.hpp"
#include "nsdeg/herzog.hpp"
#include "nsdeg/json_io.hpp"
#include "nsdeg/lab.hpp"

namespace nsdeg {

namespace {

struct PropertyInfo {
  const char* name;
  const char* origin;
};

enum Property : std::size_t {
  kLowerBound,
  kVanishing,
  kAgImpliesDdegOne,
  kTraceIdentity,
  kTcdeg,
  kClosedReflexivePrincipal,
  kCanonicalClosed,
  kHerzog,
  kPropertyCount,
};

constexpr std::array<PropertyInfo, kPropertyCount> kProperties{{
    {"cdeg_lower_bound", "degrees"},
    {"gorenstein_vanishing", "degrees"},
    {"almost_gorenstein_implies_ddeg_one", "degrees"},
    {"ddeg_equals_tdeg", "degrees"},
    {"tcdeg_identity", "degrees"},
    {"closed_reflexive_implies_principal", "precanonical-lab"},
    {"canonical_implies_closed", "precanonical-lab"},
    {"herzog_consistency", "herzog"},
}};

constexpr std::size_t kDdegOneExampleLimit = 10;

bool key_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (a.genus() != b.genus()) return a.genus() < b.genus();
  return a.minimal_generators() < b.minimal_generators();
}

void count_subtree(const NumericalSemigroup& s, int max_genus, std::vector<std::int64_t>& counts) {
  ++counts[static_cast<std::size_t>(s.genus())];
  if (s.genus() == max_genus) return;
  for (std::int64_t g : s.minimal_generators())
    if (g > s.frobenius()) count_subtree(s.remove_generator(g), max_genus, counts);
}

std::string bool_cell(bool v) { return v ? "true" : "false"; }

std::string optional_cell(const std::optional<bool>& v) { return v ? bool_cell(*v) : "NA"; }

std::string join(const std::vector<std::int64_t>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

// Per-ring check outcomes, indexed by Property; nullopt = not applicable.
using Checks = std::array<std::optional<bool>, kPropertyCount>;

Checks checks_of(const RingRecord& r) {
  Checks c{};
  if (!r.internal_error.empty()) return c;
  const DegreeReport& d = r.report;
  c[kLowerBound] = d.cdeg >= d.type_r - 1;
  c[kVanishing] = (d.cdeg == 0) == r.symmetric && (d.ddeg == 0) == r.symmetric;
  if (d.almost_gorenstein && !d.gorenstein) c[kAgImpliesDdegOne] = d.ddeg == 1;
  c[kTraceIdentity] = d.ddeg == d.tdeg;
  c[kTcdeg] = r.tcdeg_ok;
  c[kClosedReflexivePrincipal] = r.closed_reflexive_principal_ok;
  c[kCanonicalClosed] = r.canonical_closed_ok;
  c[kHerzog] = r.herzog_ok;
  return c;
}

SweepReport assemble(const SweepConfig& cfg, const std::vector<NumericalSemigroup>& rings,
                     std::vector<RingRecord> records) {
  SweepReport rep;
  rep.config = cfg;
  rep.genus_counts.assign(static_cast<std::size_t>(cfg.max_genus + 1), 0);
  for (std::size_t p = 0; p < kPropertyCount; ++p) {
    if (p == kHerzog && !cfg.check_herzog) continue;
    rep.properties.push_back({kProperties[p].name, kProperties[p].origin, 0, 0, {}});
  }
  auto tally = [&](std::size_t p) -> PropertyTally& {
    for (auto& t : rep.properties)
      if (t.name == kProperties[p].name) return t;
    throw Error(ErrorCode::InternalInvariantViolation, "unknown property");
  };
  rep.conjecture_checked = cfg.check_conjecture;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    RingRecord& r = records[i];
    ++rep.genus_counts[static_cast<std::size_t>(rings[i].genus())];
    if (!r.internal_error.empty()) {
      rep.internal_errors.push_back(rings[i].minimal_generators());
      continue;
    }
    const Checks c = checks_of(r);
    for (std::size_t p = 0; p < kPropertyCount; ++p) {
      if (!c[p] || (p == kHerzog && !cfg.check_herzog)) continue;
      PropertyTally& t = tally(p);
      ++t.checked;
      if (*c[p])
        ++t.passed;
      else
        t.witnesses.push_back(r.report.generators);
    }
    if (cfg.check_conjecture) {
      ++rep.conjecture_tested;
      if (!r.conjecture_ok) rep.conjecture_counterexamples.push_back(r.report);
    }
    if (r.report.ddeg_is_one) {
      if (r.report.almost_gorenstein) {
        ++rep.ddeg_one_almost_gorenstein;
      } else {
        ++rep.ddeg_one_not_almost_gorenstein;
        if (rep.ddeg_one_not_ag_examples.size() < kDdegOneExampleLimit)
          rep.ddeg_one_not_ag_examples.push_back(r.report.generators);
      }
    }
    if (r.herzog_realized) {
      if (*r.herzog_realized == 1) ++rep.herzog_first;
      if (*r.herzog_realized == 2) ++rep.herzog_second;
      if (*r.herzog_realized == 3) ++rep.herzog_both;
    }
    if (cfg.check_herzog && !r.herzog_ok && r.report.embedding_dim == 3 && !r.symmetric)
      rep.herzog_no_orientation.push_back(r.report.generators);
    rep.ext_check_required += r.ext_check_required;
  }
  rep.rings = std::move(records);
  return rep;
}

}  // namespace

std::vector<NumericalSemigroup> enumerate_semigroups(int max_genus) {
  if (max_genus < 0 || max_genus > kMaxSweepGenus)
    throw Error(ErrorCode::CapExceeded, "max_genus " + std::to_string(max_genus) + " outside [0, 40]");
  std::vector<NumericalSemigroup> all{NumericalSemigroup()};
  std::size_t level_begin = 0;
  for (int g = 0; g < max_genus; ++g) {
    const std::size_t level_end = all.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const NumericalSemigroup parent = all[i];
      for (std::int64_t gen : parent.minimal_generators())
        if (gen > parent.frobenius()) all.push_back(parent.remove_generator(gen));
    }
    level_begin = level_end;
  }
  std::sort(all.begin(), all.end(), key_less);
  return all;
}

std::vector<std::int64_t> count_semigroups(int max_genus) {
  if (max_genus < 0 || max_genus > kMaxSweepGenus)
    throw Error(ErrorCode::CapExceeded, "max_genus " + std::to_string(max_genus) + " outside [0, 40]");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(max_genus + 1), 0);
  count_subtree(NumericalSemigroup(), max_genus, counts);
  return counts;
}

void validate(const SweepConfig& cfg) {
  if (cfg.max_genus < 1 || cfg.max_genus > kMaxSweepGenus)
    throw Error(ErrorCode::CapExceeded, "max_genus " + std::to_string(cfg.max_genus) + " outside [1, 40]");
  if (cfg.parallelism < 1) throw Error(ErrorCode::CapExceeded, "parallelism must be positive");
  if (cfg.ideal_check_max_genus > kDefaultIdealGenusCap)
    throw Error(ErrorCode::CapExceeded, "ideal checks are capped at genus 22");
}

RingRecord evaluate_ring(const NumericalSemigroup& s, const SweepConfig& cfg) {
  RingRecord rec;
  try {
    const SemigroupPtr p = share(s);
    rec.report = compute_report(p);
    rec.symmetric = s.is_full() || s.is_symmetric();
    rec.conjecture_ok = rec.report.cdeg >= rec.report.ddeg;
    if (rec.report.tcdeg) rec.tcdeg_ok = rec.report.tcdeg->equal;

    if (!s.is_full() && s.genus() <= cfg.ideal_check_max_genus) {
      const RelativeIdeal unit = RelativeIdeal::unit(p);
      bool principal_ok = true;
      bool canonical_ok = true;
      for_each_ideal(p, [&](std::uint64_t, const RelativeIdeal& e) {
        ++rec.ideal_count;
        const bool closed = is_closed(e);
        if (closed && is_reflexive(e) && e != unit) principal_ok = false;
        const bool canonical = is_canonical(e);
        if (canonical && !closed) canonical_ok = false;
        if (closed && !canonical && !socle_witnesses(e).empty()) ++rec.ext_check_required;
      });
      rec.closed_reflexive_principal_ok = principal_ok;
      rec.canonical_closed_ok = canonical_ok;
    }

    if (cfg.check_herzog && s.embedding_dimension() == 3 && !rec.symmetric) {
      try {
        const HerzogConsistency hc = herzog_consistency(p);
        rec.herzog_ok = hc.ddeg_match && hc.cdeg_in_candidates && verify_herzog(hc.data).empty();
        const bool first = hc.direct_cdeg == hc.data.cdeg_candidates[0];
        const bool second = hc.direct_cdeg == hc.data.cdeg_candidates[1];
        rec.herzog_realized = (first ? 1 : 0) | (second ? 2 : 0);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoValidOrientation) throw;
      }
    }

    const Checks c = checks_of(rec);
    for (std::size_t i = 0; i < kPropertyCount; ++i)
      if (c[i] && !*c[i])
        rec.failed_properties.push_back(kProperties[i].name);
  } catch (const Error& e) {
    rec.report.generators = s.minimal_generators();
    rec.internal_error = e.what();
  }
  return rec;
}

bool SweepReport::theorems_hold() const {
  for (const auto& t : properties)
    if (t.passed != t.checked) return false;
  return true;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const std::vector<NumericalSemigroup> rings = enumerate_semigroups(cfg.max_genus);
  std::vector<RingRecord> records(rings.size());
  const auto n = static_cast<std::int64_t>(rings.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(cfg.parallelism)
  for (std::int64_t i = 0; i < n; ++i)
    records[static_cast<std::size_t>(i)] = evaluate_ring(rings[static_cast<std::size_t>(i)], cfg);
  return assemble(cfg, rings, std::move(records));
}

SweepReport run_sweep_serial(const SweepConfig& cfg) {
  validate(cfg);
  const std::vector<NumericalSemigroup> rings = enumerate_semigroups(cfg.max_genus);
  std::vector<RingRecord> records;
  records.reserve(rings.size());
  for (const auto& s : rings) records.push_back(evaluate_ring(s, cfg));
  return assemble(cfg, rings, std::move(records));
}

int exit_code(const SweepReport& report, bool strict_conjecture) {
  if (!report.internal_errors.empty()) return 2;
  if (!report.theorems_hold()) return 3;
  if (strict_conjecture && !report.conjecture_counterexamples.empty()) return 4;
  return 0;
}

std::string render_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "genus,generators,frobenius,type,e0,cdeg,ddeg,tdeg,canonical_index,gorenstein,almost_gorenstein,"
         "conjecture_ok,tcdeg_ok,herzog_ok\n";
  for (const auto& r : report.rings) {
    const DegreeReport& d = r.report;
    out << d.genus << ',' << join(d.generators, ';') << ',' << d.frobenius << ',' << d.type_r << ','
        << d.multiplicity << ',' << d.cdeg << ',' << d.ddeg << ',' << d.tdeg << ',' << d.canonical_index << ','
        << bool_cell(d.gorenstein) << ',' << bool_cell(d.almost_gorenstein) << ','
        << (report.config.check_conjecture ? bool_cell(r.conjecture_ok) : "NA") << ',' << optional_cell(r.tcdeg_ok)
        << ',' << optional_cell(r.herzog_ok) << '\n';
  }
  return out.str();
}

std::string render_json(const SweepReport& report) {
  const SweepConfig& cfg = report.config;
  Json j;
  j["config"] = {{"max_genus", cfg.max_genus},
                 {"check_conjecture", cfg.check_conjecture},
                 {"check_herzog", cfg.check_herzog},
                 {"ideal_check_max_genus", cfg.ideal_check_max_genus}};
  j["genus_counts"] = report.genus_counts;
  j["total"] = report.rings.size();
  Json theorems = Json::array();
  for (const auto& t : report.properties)
    theorems.push_back({{"name", t.name},
                        {"origin", t.origin},
                        {"checked", t.checked},
                        {"passed", t.passed},
                        {"failed", t.checked - t.passed},
                        {"witnesses", t.witnesses}});
  j["theorems"] = theorems;
  if (report.conjecture_checked) {
    Json ce = Json::array();
    for (const auto& d : report.conjecture_counterexamples) ce.push_back(to_json(d));
    j["conjecture"] = {{"statement", "cdeg >= ddeg"},
                       {"status", "open"},
                       {"tested", report.conjecture_tested},
                       {"counterexamples", ce}};
  }
  j["ddeg_one_stratum"] = {{"almost_gorenstein", report.ddeg_one_almost_gorenstein},
                           {"not_almost_gorenstein", report.ddeg_one_not_almost_gorenstein},
                           {"not_almost_gorenstein_examples", report.ddeg_one_not_ag_examples}};
  if (cfg.check_herzog)
    j["herzog"] = {{"cdeg_is_a1b1c1", report.herzog_first},
                   {"cdeg_is_a2b2c2", report.herzog_second},
                   {"candidates_coincide", report.herzog_both},
                   {"no_valid_orientation", report.herzog_no_orientation}};
  j["ext_check_required"] = report.ext_check_required;
  j["internal_errors"] = report.internal_errors;
  Json rings = Json::array();
  for (const auto& r : report.rings) {
    Json x = to_json(r.report);
    x["symmetric"] = r.symmetric;
    x["conjecture_ok"] = r.conjecture_ok;
    x["tcdeg_ok"] = r.tcdeg_ok ? Json(*r.tcdeg_ok) : Json(nullptr);
    x["herzog_ok"] = r.herzog_ok ? Json(*r.herzog_ok) : Json(nullptr);
    x["closed_reflexive_principal_ok"] =
        r.closed_reflexive_principal_ok ? Json(*r.closed_reflexive_principal_ok) : Json(nullptr);
    x["ideal_count"] = r.ideal_count;
    x["failed_properties"] = r.failed_properties;
    if (!r.internal_error.empty()) x["internal_error"] = r.internal_error;
    rings.push_back(std::move(x));
  }
  j["rings"] = rings;
  return j.dump(2) + "\n";
}

}  // namespace nsdeg

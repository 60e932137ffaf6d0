#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsdeg/degrees.hpp"
#include "nsdeg/semigroup.hpp"

namespace nsdeg {

constexpr int kMaxSweepGenus = 40;

/// Every numerical semigroup of genus ≤ max_genus, each exactly once, via
/// the tree whose children drop a minimal generator above the Frobenius
/// number. Sorted by (genus, minimal generators). Throws CapExceeded past 40.
std::vector<NumericalSemigroup> enumerate_semigroups(int max_genus);

/// Per-genus counts n_0 … n_max_genus, from the same tree walk without
/// materializing the semigroups.
std::vector<std::int64_t> count_semigroups(int max_genus);

enum class OutputFormat { Json, Csv };

struct SweepConfig {
  int max_genus = 12;
  bool check_conjecture = false;
  bool check_herzog = false;
  OutputFormat output_format = OutputFormat::Json;
  int parallelism = 1;
  /// Exhaustive ideal checks run only on semigroups up to this genus.
  int ideal_check_max_genus = 10;
};

/// Throws CapExceeded when the config is out of range.
void validate(const SweepConfig& cfg);

struct RingRecord {
  DegreeReport report;
  bool symmetric = true;
  bool conjecture_ok = true;  // cdeg ≥ ddeg
  std::optional<bool> tcdeg_ok;
  std::optional<bool> herzog_ok;
  std::optional<int> herzog_realized;  // 1: a1b1c1, 2: a2b2c2, 3: both
  std::optional<bool> closed_reflexive_principal_ok;
  std::optional<bool> canonical_closed_ok;
  std::int64_t ideal_count = 0;
  std::int64_t ext_check_required = 0;
  std::vector<std::string> failed_properties;
  std::string internal_error;  // nonempty when evaluation threw
};

/// Theorem checks: expected true everywhere they apply.
struct PropertyTally {
  std::string name;
  std::string origin;  // module that owns the statement
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  std::vector<std::vector<std::int64_t>> witnesses;  // generator lists of failures
};

struct SweepReport {
  SweepConfig config;
  std::vector<std::int64_t> genus_counts;
  std::vector<PropertyTally> properties;
  // Open statement: recorded as data, never as a failure.
  bool conjecture_checked = false;
  std::int64_t conjecture_tested = 0;
  std::vector<DegreeReport> conjecture_counterexamples;
  // ddeg = 1 stratum.
  std::int64_t ddeg_one_almost_gorenstein = 0;
  std::int64_t ddeg_one_not_almost_gorenstein = 0;
  std::vector<std::vector<std::int64_t>> ddeg_one_not_ag_examples;  // first few, in sweep order
  // Herzog candidate frequencies when check_herzog.
  std::int64_t herzog_first = 0, herzog_second = 0, herzog_both = 0;
  std::vector<std::vector<std::int64_t>> herzog_no_orientation;
  std::int64_t ext_check_required = 0;
  std::vector<std::vector<std::int64_t>> internal_errors;
  std::vector<RingRecord> rings;

  bool theorems_hold() const;
};

/// Evaluates one semigroup; pure, safe to call concurrently.
RingRecord evaluate_ring(const NumericalSemigroup& s, const SweepConfig& cfg);

/// OpenMP over rings; output is identical to run_sweep_serial.
SweepReport run_sweep(const SweepConfig& cfg);
/// Serial reference for run_sweep.
SweepReport run_sweep_serial(const SweepConfig& cfg);

/// 0 clean, 2 internal invariant violation, 3 theorem failure,
/// 4 conjecture counterexample under strict mode.
int exit_code(const SweepReport& report, bool strict_conjecture);

std::string render_csv(const SweepReport& report);
std::string render_json(const SweepReport& report);

}  // namespace nsdeg

#include "nsdeg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "nsdeg/degrees.hpp"
#include "nsdeg/error.hpp"
#include "nsdeg/herzog.hpp"
#include "nsdeg/json_io.hpp"
#include "nsdeg/lab.hpp"
#include "nsdeg/sweep.hpp"

namespace nsdeg {

namespace {

struct UsageError {
  std::string message;
};

std::vector<std::int64_t> parse_list(const std::string& flag, const std::string& text, bool positive) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::int64_t v = 0;
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (item.empty() || ec != std::errc() || ptr != end || (positive && v <= 0))
      throw UsageError{"invalid value for " + flag + ": '" + text + "' (expected comma-separated " +
                       (positive ? "positive " : "") + "integers)"};
    out.push_back(v);
  }
  if (out.empty() || text.back() == ',') throw UsageError{"invalid value for " + flag + ": '" + text + "'"};
  return out;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string flag(bool v) { return v ? "true" : "false"; }

template <typename T>
std::string optional_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "absent";
}

/// Value set through `through`, then an ellipsis for the complete tail.
std::string value_set(const RelativeIdeal& e, std::int64_t through) {
  std::string s;
  for (std::int64_t z = e.offset(); z <= std::max(through, e.conductor()); ++z)
    if (e.contains(z)) s += std::to_string(z) + ",";
  return s + "...";
}

void print_ideal(std::ostream& out, const RelativeIdeal& e, std::int64_t through) {
  out << "elements_below_conductor: " << join(e.elements_below_conductor()) << "\n"
      << "conductor: " << e.conductor() << "\n"
      << "offset: " << e.offset() << "\n"
      << "value_set: " << value_set(e, through) << "\n";
}

void print_report(std::ostream& out, const DegreeReport& r) {
  out << "generators: " << join(r.generators) << "\n"
      << "frobenius: " << r.frobenius << "\n"
      << "genus: " << r.genus << "\n"
      << "multiplicity: " << r.multiplicity << "\n"
      << "embedding_dim: " << r.embedding_dim << "\n"
      << "type: " << r.type_r << "\n"
      << "cdeg: " << r.cdeg << "\n"
      << "ddeg: " << r.ddeg << "\n"
      << "tdeg: " << r.tdeg << "\n"
      << "canonical_index: " << r.canonical_index << "\n"
      << "gorenstein: " << flag(r.gorenstein) << "\n"
      << "almost_gorenstein: " << flag(r.almost_gorenstein) << "\n"
      << "ddeg_is_one: " << flag(r.ddeg_is_one) << "\n"
      << "idealization_cdeg: " << optional_text(r.idealization.cdeg) << "\n"
      << "idealization_ddeg: " << optional_text(r.idealization.ddeg) << "\n";
  if (r.tcdeg)
    out << "tcdeg_lhs: " << r.tcdeg->lhs << "\n"
        << "tcdeg_rhs: " << r.tcdeg->rhs << "\n"
        << "tcdeg_equal: " << flag(r.tcdeg->equal) << "\n";
}

void print_profile(std::ostream& out, const IdealProfile& p) {
  print_ideal(out, p.ideal, p.ideal.conductor());
  out << "closed: " << flag(p.is_closed) << "\n"
      << "reflexive: " << flag(p.is_reflexive) << "\n"
      << "principal: " << flag(p.is_principal) << "\n"
      << "canonical: " << flag(p.is_canonical) << "\n"
      << "rel_ddeg: " << p.rel_ddeg << "\n"
      << "socle_witnesses:";
  for (const auto& w : p.socle_witnesses) out << " (" << w.element << "," << w.dimension << ")";
  out << "\n"
      << "ext_check_required: " << flag(p.ext_check_required()) << "\n";
}

int cmd_info(std::ostream& out, const SemigroupPtr& s, bool json) {
  if (json) {
    out << to_json(*s).dump() << "\n";
    return 0;
  }
  out << "generators: " << join(s->minimal_generators()) << "\n"
      << "frobenius: " << s->frobenius() << "\n"
      << "genus: " << s->genus() << "\n"
      << "type: " << s->type() << "\n"
      << "multiplicity: " << s->multiplicity() << "\n"
      << "embedding_dim: " << s->embedding_dimension() << "\n"
      << "gaps: " << join(s->gaps()) << "\n";
  if (!s->is_full()) {
    auto apery = s->apery_set(s->multiplicity());
    out << "pseudo_frobenius: " << join(s->pseudo_frobenius()) << "\n"
        << "apery_set: " << join(apery) << "\n"
        << "symmetric: " << flag(s->is_symmetric()) << "\n";
  }
  return 0;
}

int cmd_degrees(std::ostream& out, const SemigroupPtr& s, bool json) {
  const DegreeReport r = classify(s);
  if (json)
    out << to_json(r).dump() << "\n";
  else
    print_report(out, r);
  return 0;
}

int cmd_ideal(std::ostream& out, const SemigroupPtr& s, const std::vector<std::int64_t>& gens, const std::string& op,
              bool json) {
  const RelativeIdeal e = RelativeIdeal::generate(s, gens);
  std::optional<RelativeIdeal> result;
  if (op == "dual") result = dual(e);
  if (op == "bidual") result = bidual(e);
  if (op == "trace") result = trace(e);
  if (result) {
    if (json)
      out << to_json(*result).dump() << "\n";
    else {
      out << "op: " << op << "\n";
      print_ideal(out, *result, e.conductor());
    }
    return 0;
  }
  if (op == "closed" || op == "reflexive") {
    const bool v = op == "closed" ? is_closed(e) : is_reflexive(e);
    if (json)
      out << Json{{op, v}}.dump() << "\n";
    else
      out << op << ": " << flag(v) << "\n";
    return 0;
  }
  if (op == "generators") {
    const auto g = minimal_generators(e);
    if (json)
      out << Json{{"generators", g}}.dump() << "\n";
    else
      out << "generators: " << join(g) << "\n";
    return 0;
  }
  if (op == "reduction") {
    const ReductionData r = reduction(e);
    if (json)
      out << Json{{"element_value", r.element_value}, {"reduction_number", r.reduction_number}}.dump() << "\n";
    else
      out << "element_value: " << r.element_value << "\n"
          << "reduction_number: " << r.reduction_number << "\n";
    return 0;
  }
  if (op == "profile") {
    const IdealProfile p = profile(e);
    if (json)
      out << to_json(p).dump() << "\n";
    else
      print_profile(out, p);
    return 0;
  }
  throw UsageError{"invalid value for --op: '" + op + "'"};
}

int cmd_herzog(std::ostream& out, const SemigroupPtr& s, bool json) {
  const HerzogConsistency c = herzog_consistency(s);
  if (json) {
    Json j = to_json(c.data);
    j["consistency"] = to_json(c);
    out << j.dump() << "\n";
    return 0;
  }
  const auto& e = c.data.exponents;
  const auto& a = c.data.assignment;
  out << "assignment: " << a[0] << "," << a[1] << "," << a[2] << "\n"
      << "exponents: a1=" << e.a1 << " a2=" << e.a2 << " b1=" << e.b1 << " b2=" << e.b2 << " c1=" << e.c1
      << " c2=" << e.c2 << "\n"
      << "ddeg_formula: " << c.formula_ddeg << "\n"
      << "cdeg_candidates: " << c.data.cdeg_candidates[0] << "," << c.data.cdeg_candidates[1] << "\n"
      << "direct_ddeg: " << c.direct_ddeg << "\n"
      << "direct_cdeg: " << c.direct_cdeg << "\n"
      << "ddeg_match: " << flag(c.ddeg_match) << "\n"
      << "cdeg_in_candidates: " << flag(c.cdeg_in_candidates) << "\n";
  return 0;
}

int cmd_herzog_family(std::ostream& out, std::int64_t max_generator, int jobs, bool json) {
  const HerzogFamilyReport r = herzog_family(max_generator, jobs);
  if (json) {
    out << Json{{"max_generator", r.max_generator},
                {"checked", r.checked},
                {"ddeg_mismatches", r.ddeg_mismatches},
                {"cdeg_outside_candidates", r.cdeg_outside_candidates},
                {"verification_failures", r.verification_failures},
                {"cdeg_is_a1b1c1", r.cdeg_is_first},
                {"cdeg_is_a2b2c2", r.cdeg_is_second},
                {"candidates_coincide", r.cdeg_is_both},
                {"failures", r.failures},
                {"no_valid_orientation", r.no_orientation},
                {"no_orientation_cdeg_outside_candidates", r.no_orientation_cdeg_outside_candidates},
                {"errors", r.errors}}
               .dump()
        << "\n";
  } else {
    out << "max_generator: " << r.max_generator << "\n"
        << "checked: " << r.checked << "\n"
        << "ddeg_mismatches: " << r.ddeg_mismatches << "\n"
        << "cdeg_outside_candidates: " << r.cdeg_outside_candidates << "\n"
        << "verification_failures: " << r.verification_failures << "\n"
        << "cdeg_is_a1b1c1: " << r.cdeg_is_first << "\n"
        << "cdeg_is_a2b2c2: " << r.cdeg_is_second << "\n"
        << "candidates_coincide: " << r.cdeg_is_both << "\n"
        << "no_valid_orientation: " << r.no_orientation.size() << "\n"
        << "no_orientation_cdeg_outside_candidates: " << r.no_orientation_cdeg_outside_candidates << "\n";
  }
  const bool clean = r.failures.empty() && r.errors.empty();
  return clean ? 0 : 3;
}

int cmd_sweep(std::ostream& out, std::ostream& err, const SweepConfig& cfg, const std::string& path,
              bool strict_conjecture) {
  const SweepReport rep = run_sweep(cfg);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError{"invalid value for --out: cannot open '" + path + "'"};
  file << (cfg.output_format == OutputFormat::Csv ? render_csv(rep) : render_json(rep));
  out << "rings: " << rep.rings.size() << "\n";
  for (const auto& t : rep.properties)
    out << "theorem " << t.name << ": " << t.passed << "/" << t.checked << (t.passed == t.checked ? " ok" : " FAILED")
        << "\n";
  if (rep.conjecture_checked)
    out << "conjecture cdeg >= ddeg: " << rep.conjecture_tested << " tested, "
        << rep.conjecture_counterexamples.size() << " counterexamples\n";
  out << "ddeg_one: " << rep.ddeg_one_almost_gorenstein << " almost Gorenstein, "
      << rep.ddeg_one_not_almost_gorenstein << " not almost Gorenstein\n";
  if (!rep.herzog_no_orientation.empty())
    err << "warning: " << rep.herzog_no_orientation.size()
        << " three-generated rings admit no Herzog orientation satisfying the inequalities\n";
  if (!rep.internal_errors.empty()) err << "error: " << rep.internal_errors.size() << " rings raised internal errors\n";
  return exit_code(rep, strict_conjecture);
}

int cmd_lab(std::ostream& out, const SemigroupPtr& s, bool json) {
  Json rows = Json::array();
  if (!json) out << "generators,gap_mask,closed,reflexive,principal,canonical,rel_ddeg,socle_witnesses\n";
  for_each_ideal(s, [&](std::uint64_t, const RelativeIdeal& e) {
    const IdealProfile p = profile(e);
    if (json) {
      rows.push_back(to_json(p));
      return;
    }
    std::string gens;
    for (auto g : s->minimal_generators()) gens += (gens.empty() ? "" : ";") + std::to_string(g);
    out << gens << ',' << p.gap_mask << ',' << flag(p.is_closed) << ',' << flag(p.is_reflexive) << ','
        << flag(p.is_principal) << ',' << flag(p.is_canonical) << ',' << p.rel_ddeg << ','
        << p.socle_witnesses.size() << "\n";
  });
  if (json) out << rows.dump() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical and bi-canonical degrees of numerical semigroup rings", "nsdeg"};
  app.require_subcommand(1, 1);

  std::string gens_text;
  std::string ideal_text;
  std::string op;
  std::string out_path;
  std::string format = "json";
  bool json = false;
  bool check_conjecture = false;
  bool check_herzog = false;
  bool strict_conjecture = false;
  bool enumerate = false;
  int max_genus = 12;
  int jobs = 1;
  int ideal_max_genus = 10;
  std::int64_t family_max = 0;

  auto* info = app.add_subcommand("info", "Semigroup invariants");
  auto* degrees = app.add_subcommand("degrees", "Full degree report");
  auto* ideal = app.add_subcommand("ideal", "Ideal calculus on an ideal given by generators");
  auto* herzog = app.add_subcommand("herzog", "Herzog matrix and closed-form cross-check");
  auto* sweep = app.add_subcommand("sweep", "Check every semigroup up to a genus bound");
  auto* lab = app.add_subcommand("lab", "Profiles of relative ideals");

  for (auto* sub : {info, degrees, ideal, lab}) sub->add_option("--gens", gens_text, "Generators, e.g. 5,7,9")->required();
  herzog->add_option("--gens", gens_text, "Generators, e.g. 5,7,9");
  herzog->add_option("--family-max", family_max, "Census of all triples with generators up to N instead of --gens");
  herzog->add_option("--jobs", jobs, "Threads for --family-max")->check(CLI::PositiveNumber);
  for (auto* sub : {info, degrees, ideal, herzog, lab}) sub->add_flag("--json", json, "JSON output");
  ideal->add_option("--ideal", ideal_text, "Ideal generators as values, e.g. 0,2")->required();
  ideal->add_option("--op", op, "bidual|trace|dual|closed|reflexive|generators|reduction|profile")->required();
  lab->add_flag("--enumerate-ideals", enumerate, "Profile every normalized relative ideal")->required();

  sweep->add_option("--max-genus", max_genus, "Genus bound (1..40)")->check(CLI::Range(1, kMaxSweepGenus));
  sweep->add_flag("--check-conjecture", check_conjecture, "Record cdeg >= ddeg outcomes");
  sweep->add_flag("--check-herzog", check_herzog, "Cross-check Herzog formulas on three-generated rings");
  sweep->add_flag("--strict-conjecture", strict_conjecture, "Exit 4 on a conjecture counterexample");
  sweep->add_option("--out", out_path, "Report file")->required();
  sweep->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--ideal-max-genus", ideal_max_genus, "Exhaustive ideal checks up to this genus")
      ->check(CLI::Range(0, static_cast<int>(kDefaultIdealGenusCap)));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << "\n";
    return 1;
  }

  try {
    if (sweep->parsed()) {
      SweepConfig cfg;
      cfg.max_genus = max_genus;
      cfg.check_conjecture = check_conjecture;
      cfg.check_herzog = check_herzog;
      cfg.output_format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
      cfg.parallelism = jobs;
      cfg.ideal_check_max_genus = ideal_max_genus;
      return cmd_sweep(out, err, cfg, out_path, strict_conjecture);
    }
    if (herzog->parsed() && family_max > 0) return cmd_herzog_family(out, family_max, jobs, json);
    if (gens_text.empty()) throw UsageError{"--gens is required"};
    const SemigroupPtr s = share(NumericalSemigroup::from_generators(parse_list("--gens", gens_text, true)));
    if (info->parsed()) return cmd_info(out, s, json);
    if (degrees->parsed()) return cmd_degrees(out, s, json);
    if (ideal->parsed()) return cmd_ideal(out, s, parse_list("--ideal", ideal_text, false), op, json);
    if (herzog->parsed()) return cmd_herzog(out, s, json);
    if (lab->parsed()) return cmd_lab(out, s, json);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInvariantViolation ? 2 : 1;
  }
  return 1;
}

}  // namespace nsdeg

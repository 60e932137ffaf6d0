#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "nsdeg/cli.hpp"
#include "nsdeg/json_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nsdeg::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) kv[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return kv;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("cli info and degrees") {
  const auto info = run({"info", "--gens", "5,7,9"});
  CHECK(info.code == 0);
  const auto kv = key_values(info.out);
  CHECK(kv.at("frobenius") == "13");
  CHECK(kv.at("gaps") == "1,2,3,4,6,8,11,13");
  CHECK(kv.at("pseudo_frobenius") == "11,13");

  const auto deg = run({"degrees", "--gens", "5,7,9"});
  CHECK(deg.code == 0);
  const auto dk = key_values(deg.out);
  CHECK(dk.at("cdeg") == "2");
  CHECK(dk.at("ddeg") == "1");
  CHECK(dk.at("almost_gorenstein") == "false");
}

TEST_CASE("cli human and JSON output agree") {
  for (std::string gens : {"5,7,9", "3,4,5", "2,3", "4,6,7,9"}) {
    const auto human = key_values(run({"degrees", "--gens", gens}).out);
    const auto js = run({"degrees", "--gens", gens, "--json"});
    REQUIRE(js.code == 0);
    const auto j = nsdeg::Json::parse(js.out);
    for (const char* key : {"cdeg", "ddeg", "tdeg", "canonical_index", "frobenius", "genus"})
      CHECK(human.at(key) == j.at(key).dump());
    CHECK(nsdeg::to_json(nsdeg::degree_report_from_json(j)) == j);
  }
}

TEST_CASE("cli ideal operations") {
  const auto b = run({"ideal", "--gens", "5,7,9", "--ideal", "0,2", "--op", "bidual"});
  CHECK(b.code == 0);
  CHECK(key_values(b.out).at("value_set") == "0,2,5,7,9,10,11,12,13,14,...");
  const auto t = run({"ideal", "--gens", "3,4,5", "--ideal", "0,1", "--op", "trace", "--json"});
  CHECK(t.code == 0);
  const auto j = nsdeg::Json::parse(t.out);
  CHECK(j.at("offset") == 3);
  const auto r = run({"ideal", "--gens", "5,7,9", "--ideal", "0,2", "--op", "reduction"});
  CHECK(key_values(r.out).at("reduction_number") == "4");
  const auto bad = run({"ideal", "--gens", "5,7,9", "--ideal", "0,2", "--op", "nope"});
  CHECK(bad.code == 1);
}

TEST_CASE("cli herzog") {
  const auto h = run({"herzog", "--gens", "5,7,9"});
  CHECK(h.code == 0);
  CHECK(key_values(h.out).at("assignment") == "7,9,5");
  const auto sym = run({"herzog", "--gens", "4,5,6"});
  CHECK(sym.code == 1);
  CHECK(sym.err.find("SymmetricSemigroup") != std::string::npos);
  const auto fam = run({"herzog", "--family-max", "15", "--json"});
  CHECK(fam.code == 0);
  CHECK(nsdeg::Json::parse(fam.out).at("ddeg_mismatches") == 0);
}

TEST_CASE("cli lab") {
  const auto lab = run({"lab", "--gens", "3,4,5", "--enumerate-ideals"});
  CHECK(lab.code == 0);
  CHECK(std::count(lab.out.begin(), lab.out.end(), '\n') == 5);
  const auto js = run({"lab", "--gens", "3,4,5", "--enumerate-ideals", "--json"});
  CHECK(nsdeg::Json::parse(js.out).size() == 4);
}

TEST_CASE("cli usage and computation errors") {
  const auto missing = run({"degrees"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("--gens") != std::string::npos);
  const auto garbage = run({"degrees", "--gens", "5,x,9"});
  CHECK(garbage.code == 1);
  CHECK(garbage.err.find("--gens") != std::string::npos);
  const auto gcd = run({"degrees", "--gens", "4,6"});
  CHECK(gcd.code == 1);
  CHECK(gcd.err.find("GcdNotOne") != std::string::npos);
  const auto neg = run({"info", "--gens", "-3,5"});
  CHECK(neg.code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"sweep", "--out", "/tmp/x.json", "--max-genus", "41"}).code == 1);
}

TEST_CASE("cli sweep writes the requested format") {
  const auto dir = std::filesystem::temp_directory_path() / "nsdeg_cli_test";
  std::filesystem::create_directories(dir);
  const auto json_path = dir / "s.json";
  const auto csv_path = dir / "s.csv";
  const auto a = run({"sweep", "--max-genus", "6", "--check-conjecture", "--strict-conjecture", "--out",
                      json_path.string(), "--jobs", "2"});
  CHECK(a.code == 0);
  const auto j = nsdeg::Json::parse(slurp(json_path));
  CHECK(j.at("total") == 50);
  CHECK(j.at("conjecture").at("status") == "open");
  const auto c = run({"sweep", "--max-genus", "6", "--check-herzog", "--format", "csv", "--out", csv_path.string()});
  CHECK(c.code == 0);
  const auto csv = slurp(csv_path);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 51);
  std::filesystem::remove_all(dir);
}

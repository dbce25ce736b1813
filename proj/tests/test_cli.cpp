#include "frob/cli.hpp"

#include "frob/coprime.hpp"
#include "frob/scan.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace frob;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cmd_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("single value subcommands") {
  CHECK(run({"gnum", "2", "3"}).out == "1\n");
  CHECK(run({"gnum", "6", "11"}).out == "49\n");
  CHECK(run({"count", "15", "--basis", "3,5"}).out == "2\n");
  CHECK(run({"count", "15", "--basis", "3,5", "--coprime"}).out == "0\n");
  CHECK(run({"count", "10", "--basis", "2,3,5"}).out == "4\n");
  CHECK(run({"bigG", "4", "13"}).out == "231\n");
  CHECK(run({"jacobsthal", "30"}).out == "6\n");
  CHECK(run({"jacobsthal-gen", "2:0,3:1"}).out == "4\n");
  CHECK(run({"pi", "2", "5", "8"}).out == "1\n");
  CHECK(run({"gaps", "3", "5"}).out == "ell=2 L=2\n");
}

TEST_CASE("json outputs") {
  auto g = nlohmann::json::parse(run({"bigG", "4", "13", "--json"}).out);
  CHECK(g["G"] == 231);
  CHECK(g["certified"] == true);
  CHECK(g["cutoff"] == 884);

  auto adv = nlohmann::json::parse(
      run({"adversarial", "3", "7", "--verify", "--json"}).out);
  CHECK(adv["a2"] == "89");
  CHECK(adv["n"] == "1870");
  CHECK(adv["verified"] == true);
  CHECK(adv["assignments"].size() == 7);
  CHECK(adv["assignments"][0]["x"] == "564");

  auto pi = nlohmann::json::parse(run({"pi", "2", "5", "8", "--json"}).out);
  CHECK(pi["witnesses"] == nlohmann::json::array({5}));

  auto gk = nlohmann::json::parse(
      run({"bigG-k", "2,3,5", "--window", "2000", "--json"}).out);
  CHECK(gk["G"] == 6);
  CHECK(gk["certified"] == false);
}

TEST_CASE("adversarial plain output") {
  const RunResult r = run({"adversarial", "3", "7", "--verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "a2=89 n=1870 verified=true\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"bigG", "4", "6"}).code == kExitDomain);
  CHECK(run({"bigG", "4", "6"}).err.find("gcd(a1,a2) must be 1") != std::string::npos);
  CHECK(run({"adversarial", "2", "5"}).code == kExitDomain);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"gnum", "2"}).code == kExitDomain);
  CHECK(run({"gnum", "two", "3"}).code == kExitDomain);

  // budget errors surface as exit 2
  setenv("COPRIME_FROBENIUS_BUDGET", "100", 1);
  CHECK(run({"bigG", "3", "89"}).code == kExitBudget);
  unsetenv("COPRIME_FROBENIUS_BUDGET");
}

TEST_CASE("zero-scan output lines") {
  const RunResult r = run({"zero-scan", "1", "--a1-max", "3", "--a2-max", "10"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "2,3\n");
}

TEST_CASE("meanvalue subcommand writes CSV") {
  const fs::path path = temp_file("frob_meanvalue_test.csv");
  const RunResult r = run({"meanvalue", "3", "5", "--nmax", "100", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  std::ifstream in(path);
  std::string header, line10;
  std::getline(in, header);
  std::getline(in, line10);
  CHECK(header == "N,S_num,S_den,normalized");
  CHECK(line10.rfind("10,13,15,", 0) == 0);
  fs::remove(path);
}

TEST_CASE("scan CSV round-trip, determinism, cache") {
  const fs::path csv1 = temp_file("frob_scan_w1.csv");
  const fs::path csv4 = temp_file("frob_scan_w4.csv");
  const fs::path cache = temp_file("frob_scan_cache.txt");
  fs::remove(cache);

  REQUIRE(run({"scan", "--a1-max", "6", "--a2-max", "12", "--out", csv1.string()}).code == kExitOk);
  REQUIRE(run({"scan", "--a1-max", "6", "--a2-max", "12", "--out", csv4.string(),
               "--workers", "4"}).code == kExitOk);

  std::ifstream f1(csv1), f4(csv4);
  std::stringstream b1, b4;
  b1 << f1.rdbuf();
  b4 << f4.rdbuf();
  CHECK(b1.str() == b4.str());  // byte-identical regardless of workers

  // round-trip
  std::istringstream parse_in(b1.str());
  const auto rows = parse_scan_csv(parse_in);
  std::ostringstream rewritten;
  write_scan_csv(rewritten, rows);
  CHECK(rewritten.str() == b1.str());

  // every row satisfies the record invariants
  for (const auto& r : rows) {
    CHECK(r.g_frobenius == r.a1 * r.a2 - r.a1 - r.a2);
    CHECK(r.ell == r.a1 - 1);
    CHECK(r.parity == (r.G % 2 == 0 ? "even" : "odd"));
    CHECK(r.G >= r.a1 * r.a2);
    CHECK(r.G_certified);
    CHECK(r.L >= 1);
  }

  // cache: first run fills it, second run reuses entries and matches
  const fs::path csvc = temp_file("frob_scan_cached.csv");
  REQUIRE(run({"scan", "--a1-max", "6", "--a2-max", "12", "--out", csvc.string(),
               "--cache", cache.string()}).code == kExitOk);
  {
    std::ifstream cache_in(cache);
    std::string first;
    std::getline(cache_in, first);
    CHECK(first == kCacheVersionLine);
  }
  REQUIRE(run({"scan", "--a1-max", "6", "--a2-max", "12", "--out", csvc.string(),
               "--cache", cache.string()}).code == kExitOk);
  std::ifstream fc(csvc);
  std::stringstream bc;
  bc << fc.rdbuf();
  CHECK(bc.str() == b1.str());

  // cached G values re-verify against fresh computation on a sample
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
  for (int i = 0; i < std::max<int>(1, static_cast<int>(rows.size() / 20)); ++i) {
    const auto& r = rows[pick(rng)];
    CHECK(coprime_frobenius(CoprimePair(r.a1, r.a2)).value == r.G);
  }

  // stale cache versions are invalidated and rewritten
  {
    std::ofstream stale(cache, std::ios::trunc);
    stale << "# coprime-frobenius-cache v0\n2,3,999,true\n";
  }
  REQUIRE(run({"scan", "--a1-max", "6", "--a2-max", "12", "--out", csvc.string(),
               "--cache", cache.string()}).code == kExitOk);
  std::ifstream fc2(csvc);
  std::stringstream bc2;
  bc2 << fc2.rdbuf();
  CHECK(bc2.str() == b1.str());

  fs::remove(csv1);
  fs::remove(csv4);
  fs::remove(csvc);
  fs::remove(cache);
}

TEST_CASE("scan argument validation") {
  CHECK(run({"scan", "--a1-max", "6", "--a2-max", "3", "--out", "/tmp/x.csv"}).code ==
        kExitDomain);
  CHECK(run({"scan", "--a1-max", "6", "--a2-max", "12", "--out",
             "/nonexistent-dir/x.csv"}).code == kExitBudget);
}

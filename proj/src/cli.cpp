#include "frob/cli.hpp"

#include "frob/adversarial.hpp"
#include "frob/arith.hpp"
#include "frob/coprime.hpp"
#include "frob/denumerant.hpp"
#include "frob/jacobsthal.hpp"
#include "frob/meanvalue.hpp"
#include "frob/prime_powers.hpp"
#include "frob/scan.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace frob {

namespace {

using nlohmann::json;
using Args = std::vector<std::string>;

constexpr const char* kUsage = R"(usage: frob <subcommand> [args]

subcommands:
  gnum <a1> <a2>                      classical Frobenius number a1*a2-a1-a2
  count <n> --basis a1,a2[,...]       representation count of n [--coprime]
  bigG <a1> <a2> [--json]             certified coprime Frobenius number
  bigG-k <a1,...,ak> --window W       heuristic k-variable search [--json]
  jacobsthal <n>                      Jacobsthal function j(n)
  jacobsthal-gen p1:c1,p2:c2,...      generalized j with shifted residues
  pi <k> <a1> <a2> [--json]           representable prime powers p^k <= g
  zero-scan <k> --a1-max A --a2-max B pairs with pi_k = 0, one per line
  adversarial <a1> <q> [--verify]     CRT lower-bound construction [--json]
  meanvalue <a1> <a2> --nmax N --out FILE [--workers W]
                                      partial sums of E(n) as CSV
  scan --a1-max A --a2-max B --out FILE [--cache FILE] [--workers W]
                                      per-pair G/parity/gap table as CSV
  gaps <a1> <a2> [--json]             longest-run statistics ell and L
)";

struct Flags {
  std::vector<std::string> positional;
  std::map<std::string, std::string> named;
  bool has(const std::string& name) const { return named.count(name) != 0; }
  std::string get(const std::string& name) const {
    auto it = named.find(name);
    if (it == named.end() || it->second.empty())
      throw std::invalid_argument("missing value for --" + name);
    return it->second;
  }
};

// Boolean flags take no value; everything else consumes the next token.
Flags parse_flags(const Args& args, std::size_t start) {
  static const std::set<std::string> kBool = {"json", "coprime", "verify"};
  Flags out;
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0) {
      const std::string name = a.substr(2);
      if (kBool.count(name) != 0) {
        out.named[name] = "true";
      } else {
        if (i + 1 >= args.size())
          throw std::invalid_argument("missing value for --" + name);
        out.named[name] = args[++i];
      }
    } else {
      out.positional.push_back(a);
    }
  }
  return out;
}

std::vector<i64> parse_i64_list(const std::string& text) {
  std::vector<i64> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_i64(item));
  if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
  return out;
}

void require_positional(const Flags& flags, std::size_t count) {
  if (flags.positional.size() != count)
    throw std::invalid_argument("wrong number of arguments (see usage)");
}

CoprimePair pair_from(const Flags& flags, std::size_t i) {
  return CoprimePair(parse_i64(flags.positional[i]),
                     parse_i64(flags.positional[i + 1]));
}

int cmd_gnum(const Flags& flags, std::ostream& out) {
  require_positional(flags, 2);
  out << sylvester_frobenius(pair_from(flags, 0)) << '\n';
  return kExitOk;
}

int cmd_count(const Flags& flags, std::ostream& out) {
  require_positional(flags, 1);
  const i64 n = parse_i64(flags.positional[0]);
  const Basis basis(parse_i64_list(flags.get("basis")));
  const bool coprime = flags.has("coprime");
  const auto& cs = basis.coefficients();
  if (coprime) {
    if (cs.size() == 2 && n >= 1)
      out << count_coprime_reps(n, CoprimePair(cs[0], cs[1])) << '\n';
    else
      out << count_coprime_reps_oracle(n, basis) << '\n';
  } else {
    if (cs.size() == 2 && n >= 1)
      out << count_reps(n, CoprimePair(cs[0], cs[1])) << '\n';
    else
      out << count_reps_k(n, basis) << '\n';
  }
  return kExitOk;
}

int cmd_bigG(const Flags& flags, std::ostream& out) {
  require_positional(flags, 2);
  const CoprimePair pair = pair_from(flags, 0);
  const GResult res = coprime_frobenius(pair);
  if (flags.has("json")) {
    json j{{"a1", pair.a1()},
           {"a2", pair.a2()},
           {"G", res.value},
           {"certified", res.certified},
           {"cutoff", res.cutoff_used}};
    out << j.dump() << '\n';
  } else {
    out << res.value << '\n';
  }
  return kExitOk;
}

int cmd_bigG_k(const Flags& flags, std::ostream& out) {
  require_positional(flags, 1);
  const Basis basis(parse_i64_list(flags.positional[0]));
  const i64 window = parse_i64(flags.get("window"));
  const GResult res = coprime_frobenius_k(basis, window);
  if (flags.has("json")) {
    json j{{"basis", basis.coefficients()},
           {"G", res.value},
           {"certified", res.certified},
           {"cutoff", res.cutoff_used}};
    out << j.dump() << '\n';
  } else {
    out << res.value << '\n';
  }
  return kExitOk;
}

int cmd_jacobsthal(const Flags& flags, std::ostream& out) {
  require_positional(flags, 1);
  const i64 n = parse_i64(flags.positional[0]);
  if (n < 1) throw std::invalid_argument("n must be positive");
  out << jacobsthal(static_cast<u64>(n)) << '\n';
  return kExitOk;
}

int cmd_jacobsthal_gen(const Flags& flags, std::ostream& out) {
  require_positional(flags, 1);
  ShiftConstraintSet cs;
  std::istringstream in(flags.positional[0]);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected p:c entries, got '" + item + "'");
    cs.primes.push_back(parse_i64(item.substr(0, colon)));
    cs.shifts.push_back(parse_i64(item.substr(colon + 1)));
  }
  out << jacobsthal_general(cs) << '\n';
  return kExitOk;
}

int cmd_pi(const Flags& flags, std::ostream& out) {
  require_positional(flags, 3);
  const i64 k = parse_i64(flags.positional[0]);
  const CoprimePair pair = pair_from(flags, 1);
  const PrimePowerCount res = count_prime_power_reps(k, pair);
  if (flags.has("json")) {
    json j{{"k", k},
           {"a1", pair.a1()},
           {"a2", pair.a2()},
           {"count", res.count},
           {"witnesses", res.witnesses}};
    out << j.dump() << '\n';
  } else {
    out << res.count << '\n';
  }
  return kExitOk;
}

int cmd_zero_scan(const Flags& flags, std::ostream& out) {
  require_positional(flags, 1);
  const i64 k = parse_i64(flags.positional[0]);
  const auto pairs = scan_zero_pairs(k, parse_i64(flags.get("a1-max")),
                                     parse_i64(flags.get("a2-max")));
  for (const CoprimePair& p : pairs) out << p.a1() << ',' << p.a2() << '\n';
  return kExitOk;
}

int cmd_adversarial(const Flags& flags, std::ostream& out) {
  require_positional(flags, 2);
  const i64 a1 = parse_i64(flags.positional[0]);
  const i64 q = parse_i64(flags.positional[1]);
  const AdversarialWitness w = construct_adversarial(a1, q);
  std::optional<bool> verified;
  if (flags.has("verify")) verified = verify_adversarial(w);
  if (flags.has("json")) {
    json assignments = json::array();
    for (const auto& a : w.assignments)
      assignments.push_back({{"ell", a.ell},
                             {"x", a.x.str()},
                             {"y", a.y},
                             {"p", a.p}});
    json j{{"a1", w.a1},
           {"q", w.q},
           {"a2", w.a2.str()},
           {"n", w.n.str()},
           {"assignments", assignments}};
    if (verified) j["verified"] = *verified;
    out << j.dump() << '\n';
  } else {
    out << "a2=" << w.a2 << " n=" << w.n;
    if (verified) out << " verified=" << (*verified ? "true" : "false");
    out << '\n';
  }
  return kExitOk;
}

int cmd_meanvalue(const Flags& flags, std::ostream& out) {
  require_positional(flags, 2);
  const CoprimePair pair = pair_from(flags, 0);
  const i64 n_max = parse_i64(flags.get("nmax"));
  const int workers = flags.has("workers")
                          ? static_cast<int>(parse_i64(flags.get("workers")))
                          : 1;
  std::vector<i64> checkpoints;  // powers of 10 up to n_max, plus n_max
  for (i64 c = 10; c <= n_max && c > 0; c *= 10) checkpoints.push_back(c);
  if (checkpoints.empty() || checkpoints.back() != n_max)
    checkpoints.push_back(n_max);
  const PartialSumSeries series =
      error_partial_sums(pair, n_max, checkpoints, workers);
  const std::string path = flags.get("out");
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  write_meanvalue_csv(file, series);
  out << "wrote " << series.checkpoints.size() << " checkpoints to " << path
      << '\n';
  return kExitOk;
}

int cmd_scan(const Flags& flags, std::ostream& out) {
  require_positional(flags, 0);
  ScanOptions options;
  if (flags.has("cache")) options.cache_path = flags.get("cache");
  if (flags.has("workers"))
    options.workers = static_cast<int>(parse_i64(flags.get("workers")));
  const auto rows = run_scan(parse_i64(flags.get("a1-max")),
                             parse_i64(flags.get("a2-max")), options);
  const std::string path = flags.get("out");
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  write_scan_csv(file, rows);
  out << "wrote " << rows.size() << " rows to " << path << '\n';
  return kExitOk;
}

int cmd_gaps(const Flags& flags, std::ostream& out) {
  require_positional(flags, 2);
  const CoprimePair pair = pair_from(flags, 0);
  const GapReport rep = gap_report(pair);
  if (flags.has("json")) {
    json j{{"a1", pair.a1()}, {"a2", pair.a2()}, {"ell", rep.ell}, {"L", rep.L}};
    out << j.dump() << '\n';
  } else {
    out << "ell=" << rep.ell << " L=" << rep.L << '\n';
  }
  return kExitOk;
}

}  // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return kExitUsage;
  }
  const std::string& cmd = args[0];
  try {
    const Flags flags = parse_flags(args, 1);
    if (cmd == "gnum") return cmd_gnum(flags, out);
    if (cmd == "count") return cmd_count(flags, out);
    if (cmd == "bigG") return cmd_bigG(flags, out);
    if (cmd == "bigG-k") return cmd_bigG_k(flags, out);
    if (cmd == "jacobsthal") return cmd_jacobsthal(flags, out);
    if (cmd == "jacobsthal-gen") return cmd_jacobsthal_gen(flags, out);
    if (cmd == "pi") return cmd_pi(flags, out);
    if (cmd == "zero-scan") return cmd_zero_scan(flags, out);
    if (cmd == "adversarial") return cmd_adversarial(flags, out);
    if (cmd == "meanvalue") return cmd_meanvalue(flags, out);
    if (cmd == "scan") return cmd_scan(flags, out);
    if (cmd == "gaps") return cmd_gaps(flags, out);
    err << "unknown subcommand '" << cmd << "'\n" << kUsage;
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::runtime_error& e) {
    // unwritable outputs and similar resource failures
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace frob

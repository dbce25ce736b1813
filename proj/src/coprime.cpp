#include "frob/coprime.hpp"

#include "frob/arith.hpp"
#include "frob/budget.hpp"
#include "frob/jacobsthal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

namespace frob {

i64 count_coprime_reps(i64 n, const CoprimePair& pair) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const Factorization f = factorize(static_cast<u64>(n));
  __int128 total = 0;
  for_each_squarefree_divisor(f, [&](u64 d, int mu) {
    total += static_cast<__int128>(mu) * count_reps(n / static_cast<i64>(d), pair);
  });
  return static_cast<i64>(total);
}

namespace {

bool has_coprime_rep_2(i64 n, const CoprimePair& pair) {
  const SolutionFamily fam = solutions(n, pair);
  i64 x = fam.x0, y = fam.y0;
  for (i64 k = 0; k < fam.count; ++k, x -= pair.a2(), y += pair.a1())
    if (std::gcd(x, y) == 1) return true;
  return false;
}

void guard_tuple_budget(i64 n, const Basis& basis) {
  double estimate = 1.0;
  const auto& cs = basis.coefficients();
  for (std::size_t i = 1; i < cs.size(); ++i)
    estimate *= static_cast<double>(n) / static_cast<double>(cs[i]) + 1.0;
  if (estimate > static_cast<double>(budget_or(kDefaultEnumBudget)))
    throw BudgetError("enumeration over ~" + std::to_string(estimate) +
                      " tuples exceeds the budget (set COPRIME_FROBENIUS_BUDGET)");
}

// Depth-first tuple enumeration over x_k..x_2 with x_1 determined; fn gets
// the gcd of each complete tuple and returns true to stop early.
template <class Fn>
bool walk_tuples_k(i64 rem, std::size_t idx, i64 partial_gcd,
                   const std::vector<i64>& coeffs, const Fn& fn) {
  if (idx == 0) {
    if (rem % coeffs[0] != 0) return false;
    return fn(std::gcd(partial_gcd, rem / coeffs[0]));
  }
  for (i64 x = 0; x * coeffs[idx] <= rem; ++x) {
    if (walk_tuples_k(rem - x * coeffs[idx], idx - 1, std::gcd(partial_gcd, x),
                      coeffs, fn))
      return true;
  }
  return false;
}

}  // namespace

u64 count_coprime_reps_oracle(i64 n, const Basis& basis) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) return 0;  // the all-zero tuple has no gcd
  const auto& cs = basis.coefficients();
  if (cs.size() == 2) {
    const CoprimePair pair(cs[0], cs[1]);
    const SolutionFamily fam = solutions(n, pair);
    u64 count = 0;
    fam.for_each(pair.a1(), pair.a2(), [&](i64 x, i64 y) {
      if (std::gcd(x, y) == 1) ++count;
    });
    return count;
  }
  guard_tuple_budget(n, basis);
  u64 count = 0;
  walk_tuples_k(n, cs.size() - 1, 0, cs, [&](i64 g) {
    if (g == 1) ++count;
    return false;
  });
  return count;
}

bool has_coprime_rep(i64 n, const Basis& basis) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const auto& cs = basis.coefficients();
  if (cs.size() == 2) return has_coprime_rep_2(n, CoprimePair(cs[0], cs[1]));
  guard_tuple_budget(n, basis);
  return walk_tuples_k(n, cs.size() - 1, 0, cs, [](i64 g) { return g == 1; });
}

ErrorTermValue error_term(i64 n, const CoprimePair& pair) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const i64 a2 = pair.a2(), a1a2 = pair.product();
  const Factorization f = factorize(static_cast<u64>(n));
  // E(n) = sum over divisors d of mu(n/d) * h(d),
  // h(d) = 1 - r_d/a1 - frac((d - a2*r_d)/(a1*a2)); common denominator a1*a2.
  BigInt numerator = 0;
  for_each_squarefree_divisor(f, [&](u64 e, int mu) {
    const i64 d = n / static_cast<i64>(e);
    const i64 r = residue_r(d, pair);
    const i64 frac_num = floor_mod(d - a2 * r, a1a2);
    numerator += BigInt(mu) * (a1a2 - a2 * r - frac_num);
  });
  ErrorTermValue out;
  out.n = n;
  out.value = BigRat(numerator, BigInt(a1a2));
  return out;
}

namespace detail {

bool coprime_count_is_zero(i64 n, i64 a1, i64 a2, i64 inv_a2_mod_a1) {
  const i64 y0 = static_cast<i64>(static_cast<unsigned __int128>(n % a1) *
                                  static_cast<u64>(inv_a2_mod_a1) %
                                  static_cast<u64>(a1));
  const i64 num = n - a2 * y0;
  if (num < 0) return true;  // no representation at all
  const i64 x0 = num / a1;
  const i64 count = x0 / a2 + 1;
  i64 x = x0, y = y0;
  for (i64 k = 0; k < count; ++k, x -= a2, y += a1)
    if (std::gcd(x, y) == 1) return false;
  return true;
}

GSearch coprime_frobenius_search(const CoprimePair& pair, int workers) {
  const i64 cutoff = certified_cutoff(pair);
  const u64 ceiling = budget_or(kDefaultSearchCeiling);
  if (static_cast<u64>(cutoff) > ceiling)
    throw BudgetError("certified cutoff " + std::to_string(cutoff) +
                      " exceeds the search ceiling " + std::to_string(ceiling) +
                      "; raise COPRIME_FROBENIUS_BUDGET to search this pair");
  const i64 a1 = pair.a1(), a2 = pair.a2();
  const i64 inv = mod_inverse(a2 % a1, a1);

  struct ChunkStats {
    i64 max_zero = 0;
    i64 longest_run = 0;    // longest zero run fully inside the chunk
    i64 prefix_run = 0;     // zeros at the chunk head
    i64 suffix_run = 0;     // zeros at the chunk tail
    i64 length = 0;
    bool all_zero = false;
  };

  auto scan_chunk = [&](i64 lo, i64 hi) {  // inclusive range
    ChunkStats s;
    s.length = hi - lo + 1;
    i64 run = 0;
    bool head_open = true;
    for (i64 n = lo; n <= hi; ++n) {
      if (coprime_count_is_zero(n, a1, a2, inv)) {
        s.max_zero = n;
        ++run;
      } else {
        if (head_open) s.prefix_run = run;
        head_open = false;
        s.longest_run = std::max(s.longest_run, run);
        run = 0;
      }
    }
    if (head_open) {
      s.all_zero = true;
      s.prefix_run = run;
    }
    s.suffix_run = run;
    s.longest_run = std::max(s.longest_run, run);
    return s;
  };

  workers = std::max(1, workers);
  std::vector<ChunkStats> stats;
  if (workers == 1 || cutoff < 4 * workers) {
    stats.push_back(scan_chunk(1, cutoff));
  } else {
    stats.resize(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    const i64 chunk = (cutoff + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const i64 lo = 1 + chunk * w;
      const i64 hi = std::min<i64>(cutoff, lo + chunk - 1);
      if (lo > hi) {
        stats.resize(static_cast<std::size_t>(w));
        break;
      }
      pool.emplace_back([&, w, lo, hi] { stats[static_cast<std::size_t>(w)] = scan_chunk(lo, hi); });
    }
    for (auto& t : pool) t.join();
  }

  // Merge: max zero is a plain max; zero runs join across chunk borders.
  i64 max_zero = 0, longest = 0, carry = 0;
  for (const ChunkStats& s : stats) {
    max_zero = std::max(max_zero, s.max_zero);
    if (s.all_zero) {
      carry += s.length;
      longest = std::max(longest, carry);
      continue;
    }
    longest = std::max({longest, s.longest_run, carry + s.prefix_run});
    carry = s.suffix_run;
  }
  longest = std::max(longest, carry);

  GSearch out{GResult{Basis({a1, a2}), max_zero, true, cutoff}, longest};
  return out;
}

}  // namespace detail

GResult coprime_frobenius(const CoprimePair& pair, int workers) {
  return detail::coprime_frobenius_search(pair, workers).result;
}

GResult coprime_frobenius_k(const Basis& basis, i64 stability_window) {
  if (basis.size() == 2)
    throw std::invalid_argument("use coprime_frobenius for k=2");
  if (stability_window < 1)
    throw std::invalid_argument("stability window must be positive");
  const u64 horizon = budget_or(kDefaultSearchCeiling);
  i64 last_zero = 0;
  for (i64 n = 1;; ++n) {
    if (static_cast<u64>(n) > horizon)
      throw BudgetError("coprime_frobenius_k: no clean stability window below "
                        "the horizon (set COPRIME_FROBENIUS_BUDGET)");
    if (!has_coprime_rep(n, basis)) last_zero = n;
    if (n >= last_zero + stability_window) {
      GResult out{basis, last_zero, false, n};
      return out;
    }
  }
}

GapReport gap_report(const CoprimePair& pair) {
  const i64 g_f = sylvester_frobenius(pair);
  i64 ell = 0, run = 0;
  for (i64 n = 0; n <= g_f; ++n) {
    const bool representable = (n == 0) || count_reps(n, pair) > 0;
    if (!representable) {
      ++run;
      ell = std::max(ell, run);
    } else {
      run = 0;
    }
  }
  if (ell != pair.a1() - 1)
    throw std::logic_error("gap scan disagrees with ell = a1 - 1");
  const detail::GSearch search = detail::coprime_frobenius_search(pair, 1);
  return GapReport{pair, ell, search.longest_zero_run};
}

}  // namespace frob

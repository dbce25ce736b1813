#include "frob/jacobsthal.hpp"

#include "frob/arith.hpp"
#include "frob/budget.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace frob {

namespace {

// Longest circular run of marked residues over one period.
i64 longest_circular_run(const std::vector<char>& bad) {
  const i64 period = static_cast<i64>(bad.size());
  i64 best = 0, cur = 0, first_run = -1;
  bool saw_good = false;
  for (i64 i = 0; i < period; ++i) {
    if (bad[static_cast<std::size_t>(i)]) {
      ++cur;
    } else {
      if (first_run < 0) first_run = cur;
      best = std::max(best, cur);
      cur = 0;
      saw_good = true;
    }
  }
  if (!saw_good) return period;  // cannot happen: density of good residues > 0
  if (first_run < 0) first_run = 0;
  best = std::max(best, cur + first_run);  // wrap-around join
  return best;
}

i64 scan_period(const std::vector<i64>& primes, const std::vector<i64>& shifts,
                i64 period) {
  std::vector<char> bad(static_cast<std::size_t>(period), 0);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const i64 p = primes[i];
    for (i64 m = shifts[i]; m < period; m += p) bad[static_cast<std::size_t>(m)] = 1;
  }
  return longest_circular_run(bad) + 1;
}

}  // namespace

i64 jacobsthal(u64 n) {
  if (n == 0) throw std::invalid_argument("jacobsthal: n must be positive");
  if (n == 1) return 1;
  const Factorization f = factorize(n);
  const u64 rad = radical(f);
  if (rad > budget_or(kDefaultRadicalBudget))
    throw BudgetError("jacobsthal: radical " + std::to_string(rad) +
                      " exceeds the period budget");
  std::vector<i64> primes, shifts;
  for (u64 p : f.distinct_primes()) {
    primes.push_back(static_cast<i64>(p));
    shifts.push_back(0);
  }
  return scan_period(primes, shifts, static_cast<i64>(rad));
}

i64 jacobsthal_general(const ShiftConstraintSet& constraints) {
  const auto& primes = constraints.primes;
  const auto& shifts = constraints.shifts;
  if (primes.empty() || primes.size() != shifts.size())
    throw std::invalid_argument("constraint lists must be nonempty and aligned");
  u64 period = 1;
  const u64 limit = budget_or(kDefaultRadicalBudget);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const i64 p = primes[i];
    if (p < 2 || !is_prime(static_cast<u64>(p)))
      throw std::invalid_argument("constraint moduli must be prime");
    if (shifts[i] < 0 || shifts[i] >= p)
      throw std::invalid_argument("shift out of range [0, p)");
    for (std::size_t j = 0; j < i; ++j)
      if (primes[j] == p) throw std::invalid_argument("primes must be distinct");
    if (period > limit / static_cast<u64>(p))
      throw BudgetError("jacobsthal_general: period exceeds the budget");
    period *= static_cast<u64>(p);
  }
  return scan_period(primes, shifts, static_cast<i64>(period));
}

i64 certified_cutoff(const CoprimePair& pair) {
  const BigInt a1a2(pair.product());
  // primorial(k)/(2^k + 1) is strictly increasing, so the qualifying k form
  // an initial segment; keep the last qualifying B_k.
  static const std::vector<u64> kPrimes = primes_upto(400);  // 78 primes, plenty
  BigInt primorial = 1;  // primorial(k) for the current k
  BigInt best = 0;
  std::size_t k = 0;
  while (true) {
    const BigInt b = a1a2 * ((BigInt(1) << k) + 1);
    if (primorial <= b) {
      best = b;
    } else {
      break;
    }
    if (k >= kPrimes.size()) break;  // unreachable: primorial outgrows 2^k fast
    primorial *= kPrimes[k];
    ++k;
  }
  if (best > std::numeric_limits<i64>::max())
    throw BudgetError("certified_cutoff: cutoff exceeds 2^63-1");
  return static_cast<i64>(best);
}

}  // namespace frob

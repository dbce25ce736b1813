#include "frob/prime_powers.hpp"

#include "frob/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace frob {

namespace {

// floor(x^(1/k)) with correction loops around the floating-point seed.
i64 integer_kth_root(i64 x, i64 k) {
  if (x < 1) return 0;
  if (k == 1) return x;
  i64 r = static_cast<i64>(std::llround(
      std::pow(static_cast<double>(x), 1.0 / static_cast<double>(k))));
  auto pow_le = [&](i64 base) {  // base^k <= x without overflow
    i64 acc = 1;
    for (i64 i = 0; i < k; ++i) {
      if (base != 0 && acc > x / base) return false;
      acc *= base;
    }
    return acc <= x;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

i64 pow_i64(i64 base, i64 exp) {
  i64 out = 1;
  for (i64 i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// Witness primes using a precomputed prime list covering [2, limit].
std::vector<i64> witnesses_from(i64 k, const CoprimePair& pair,
                                const std::vector<u64>& primes) {
  std::vector<i64> out;
  const i64 g_f = sylvester_frobenius(pair);
  if (g_f < 2) return out;
  const i64 limit = integer_kth_root(g_f, k);
  for (u64 p : primes) {
    if (static_cast<i64>(p) > limit) break;
    const i64 pk = pow_i64(static_cast<i64>(p), k);
    if (count_reps(pk, pair) > 0) out.push_back(static_cast<i64>(p));
  }
  return out;
}

}  // namespace

PrimePowerCount count_prime_power_reps(i64 k, const CoprimePair& pair) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const i64 limit = integer_kth_root(sylvester_frobenius(pair), k);
  PrimePowerCount out{k, pair, 0,
                      witnesses_from(k, pair, primes_upto(static_cast<u64>(std::max<i64>(limit, 0))))};
  out.count = static_cast<i64>(out.witnesses.size());
  return out;
}

bool verify_zero_families(i64 g_max, std::string* counterexample) {
  if (g_max < 0) throw std::invalid_argument("g_max must be >= 0");
  static constexpr i64 kFamilyA[4] = {6, 8, 12, 24};
  const i64 max_gf = 24 * (24 * g_max + 23);  // loose bound on every g_F
  const std::vector<u64> primes =
      primes_upto(static_cast<u64>(integer_kth_root(max_gf, 2)));
  for (i64 g = 0; g <= g_max; ++g) {
    for (i64 a : kFamilyA) {
      const i64 b = a * g + a - 1;  // 6g+5, 8g+7, 12g+11, 24g+23
      // g = 0 members have b < a; representability is symmetric in the pair
      const CoprimePair pair(std::min(a, b), std::max(a, b));
      const std::vector<i64> hits = witnesses_from(2, pair, primes);
      if (!hits.empty()) {
        if (counterexample != nullptr)
          *counterexample = "pi_2(" + std::to_string(a) + "," + std::to_string(b) +
                            ") counts p=" + std::to_string(hits.front());
        return false;
      }
      // the obstruction behind the zero families: squares of primes >= 5
      // are 1 mod 24
      const i64 limit = integer_kth_root(sylvester_frobenius(pair), 2);
      for (u64 p : primes) {
        if (static_cast<i64>(p) > limit) break;
        if (p >= 5 && static_cast<i64>(p * p) % 24 != 1) {
          if (counterexample != nullptr)
            *counterexample = "p^2 mod 24 != 1 for p=" + std::to_string(p);
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<CoprimePair> scan_zero_pairs(i64 k, i64 a1_max, i64 a2_max) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (a1_max < 3 || a2_max < 3) throw std::invalid_argument("bounds must be >= 3");
  const i64 max_gf = checked_mul(a1_max, a2_max);
  const std::vector<u64> primes =
      primes_upto(static_cast<u64>(integer_kth_root(max_gf, k)));
  std::vector<CoprimePair> out;
  for (i64 a1 = 2; a1 <= a1_max; ++a1) {
    for (i64 a2 = a1 + 1; a2 <= a2_max; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      const CoprimePair pair(a1, a2);
      if (witnesses_from(k, pair, primes).empty()) out.push_back(pair);
    }
  }
  return out;
}

}  // namespace frob

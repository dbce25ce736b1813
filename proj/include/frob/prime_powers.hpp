#pragma once

#include "frob/denumerant.hpp"
#include "frob/ints.hpp"

#include <string>
#include <vector>

namespace frob {

// pi_{k,a1,a2}: prime powers p^k <= g_{a1,a2} representable as a1*x + a2*y.
struct PrimePowerCount {
  i64 k = 0;
  CoprimePair pair;
  i64 count = 0;
  std::vector<i64> witnesses;  // the primes p, increasing
};

PrimePowerCount count_prime_power_reps(i64 k, const CoprimePair& pair);

// pi_2 = 0 for the four families (6,6g+5), (8,8g+7), (12,12g+11),
// (24,24g+23) for 0 <= g <= g_max, plus the p^2 = 1 (mod 24) obstruction for
// every scanned prime p >= 5. On failure *counterexample names the family
// member and prime.
bool verify_zero_families(i64 g_max, std::string* counterexample = nullptr);

// All coprime pairs 1 < a1 <= a1_max, a1 < a2 <= a2_max with pi_k = 0,
// lexicographic.
std::vector<CoprimePair> scan_zero_pairs(i64 k, i64 a1_max, i64 a2_max);

}  // namespace frob

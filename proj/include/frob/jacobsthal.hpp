#pragma once

#include "frob/denumerant.hpp"
#include "frob/ints.hpp"

#include <vector>

namespace frob {

// One forbidden residue c_p per prime p; primes distinct, c_p in [0, p).
struct ShiftConstraintSet {
  std::vector<i64> primes;
  std::vector<i64> shifts;
};

// Minimal m such that every window of m consecutive integers contains one
// coprime to n; computed by a circular scan over one period rad(n).
i64 jacobsthal(u64 n);

// Minimal m such that every window of m consecutive integers contains an
// integer avoiding c_p mod p for every constrained prime; scans one full
// period (product of the primes).
i64 jacobsthal_general(const ShiftConstraintSet& constraints);

// U such that every n > U has a coprime representation by the pair:
// the largest B_k = a1*a2*(2^k + 1) with primorial(k) <= B_k. Any larger n
// with omega(n) = k satisfies floor(n/(a1*a2)) > 2^k, which dominates the
// generalized Jacobsthal value of the forbidden-residue set of n.
i64 certified_cutoff(const CoprimePair& pair);

}  // namespace frob

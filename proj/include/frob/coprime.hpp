#pragma once

#include "frob/denumerant.hpp"
#include "frob/ints.hpp"

#include <vector>

namespace frob {

// Exact E(n) with f(n) = phi(n)/(a1*a2) + E(n) and |E(n)| < 2^omega(n).
struct ErrorTermValue {
  i64 n = 0;
  BigRat value;
};

// Result of a coprime-Frobenius search. When certified is true the search
// itself witnessed f(n) > 0 for every n in (value, cutoff_used].
struct GResult {
  Basis basis;
  i64 value = 0;
  bool certified = false;
  i64 cutoff_used = 0;
};

struct GapReport {
  CoprimePair pair;
  i64 ell = 0;  // longest non-representable run in [0, g_F]; equals a1 - 1
  i64 L = 0;    // longest zero-f run in [1, G]
};

// f(n): representations a1*x + a2*y = n with gcd(x, y) = 1, by the Mobius
// divisor sum f(n) = sum_{d|n} mu(d) g(n/d).
i64 count_coprime_reps(i64 n, const CoprimePair& pair);

// Independent brute-force count over all representations with a gcd test;
// k = 2 enumerates the solution family, k >= 3 enumerates tuples. n = 0
// returns 0 (the all-zero tuple is excluded). Guarded by the enumeration
// budget.
u64 count_coprime_reps_oracle(i64 n, const Basis& basis);

// True iff some representation of n by the basis has coordinate gcd 1
// (early-exit form of the oracle).
bool has_coprime_rep(i64 n, const Basis& basis);

ErrorTermValue error_term(i64 n, const CoprimePair& pair);

// Certified search: scans 1..certified_cutoff(pair) for the largest n with
// f(n) = 0. Throws BudgetError when the cutoff exceeds the search ceiling.
GResult coprime_frobenius(const CoprimePair& pair, int workers = 1);

// k >= 3 heuristic search: largest zero of f_k followed by a clean stability
// window; certified is always false.
GResult coprime_frobenius_k(const Basis& basis, i64 stability_window);

GapReport gap_report(const CoprimePair& pair);

namespace detail {

// Search result with the longest zero-f run, which the scan driver reuses
// so CSV rows need no second pass over [1, G].
struct GSearch {
  GResult result;
  i64 longest_zero_run = 0;
};

GSearch coprime_frobenius_search(const CoprimePair& pair, int workers);

// f(n) = 0 test by enumerating the solution family with gcd checks.
bool coprime_count_is_zero(i64 n, i64 a1, i64 a2, i64 inv_a2_mod_a1);

}  // namespace detail

}  // namespace frob

#pragma once

#include "frob/denumerant.hpp"
#include "frob/ints.hpp"

#include <iosfwd>
#include <vector>

namespace frob {

struct PartialSumSeries {
  struct Checkpoint {
    i64 N = 0;
    BigRat S;                // exact sum of E(n) over n <= N
    double normalized = 0;   // |S| / (a1*a2*sqrt(N))
  };
  CoprimePair pair;
  std::vector<Checkpoint> checkpoints;
};

enum class MeanValueMethod {
  // Count, per n, the shift indices in [0, g(n)) avoiding every prime's
  // forbidden residue (inclusion-exclusion over the primes of n).
  kResidueCount,
  // Walk the solution family testing gcd(x, y) = 1 per member. Exact but
  // O(N^2/(a1*a2)) gcd evaluations; kept for cross-checking.
  kGcdEnumeration,
};

// S(N) = sum_{n<=N} E(n) at each checkpoint, exactly, with E(n) taken as
// f(n) - phi(n)/(a1*a2); phi and the factorizations come from one sieve
// pass. Chunks combine by exact rational addition, so worker count never
// changes the result.
PartialSumSeries error_partial_sums(const CoprimePair& pair, i64 n_max,
                                    const std::vector<i64>& checkpoints,
                                    int workers = 1,
                                    MeanValueMethod method = MeanValueMethod::kResidueCount);

struct TwoOmegaPoint {
  i64 N = 0;
  u64 sum = 0;        // sum of 2^omega(n), n <= N
  double normalized;  // sum / (N * ln N)
};

std::vector<TwoOmegaPoint> two_omega_partial_sums(i64 n_max,
                                                  const std::vector<i64>& checkpoints);

// CSV schema: N,S_num,S_den,normalized (S as an exact fraction).
void write_meanvalue_csv(std::ostream& out, const PartialSumSeries& series);

}  // namespace frob

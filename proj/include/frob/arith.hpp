#pragma once

#include "frob/ints.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace frob {

// n as a product of prime powers, primes strictly increasing; n = 1 keeps an
// empty list.
struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, int>> factors;  // (prime, exponent)

  std::vector<u64> distinct_primes() const;
};

// Smallest-prime-factor sieve shared by everything that factors in bulk.
// Built once, read-only afterwards; safe for concurrent readers.
class SpfSieve {
 public:
  explicit SpfSieve(u64 bound);

  u64 bound() const { return bound_; }
  u64 spf(u64 n) const { return spf_[n]; }  // n in [2, bound]

  Factorization factorize(u64 n) const;  // n in [1, bound]

 private:
  u64 bound_;
  std::vector<std::uint32_t> spf_;
};

// Process-wide sieve (default bound 10^7), built lazily on first use.
const SpfSieve& default_sieve();

// Full factorization for n in [1, 2^63): sieve below the sieve bound, wheel
// trial division beyond, with a deterministic Miller-Rabin shortcut for
// primes.
Factorization factorize(u64 n);

bool is_prime(u64 n);

std::vector<u64> primes_upto(u64 limit);

int mobius(u64 n);             // in {-1, 0, 1}
u64 euler_phi(u64 n);
int omega(u64 n);              // number of distinct prime factors
u64 radical(u64 n);

int mobius(const Factorization& f);
u64 euler_phi(const Factorization& f);
inline int omega(const Factorization& f) { return static_cast<int>(f.factors.size()); }
u64 radical(const Factorization& f);

// Visits every (d, mu(d)) with d a squarefree divisor of f.n.
void for_each_squarefree_divisor(const Factorization& f,
                                 const std::function<void(u64, int)>& fn);

std::vector<u64> divisors(const Factorization& f);  // unsorted

// gcd over a nonempty list, gcd(x, 0) = x; all-zero input is rejected.
u64 gcd_all(const std::vector<u64>& values);

// Residue constraints x = residue (mod modulus); moduli must be pairwise
// coprime at solve time.
struct CongruenceSystem {
  struct Constraint {
    i64 modulus;  // >= 2
    i64 residue;  // in [0, modulus)
  };
  std::vector<Constraint> constraints;
};

struct CrtSolution {
  BigInt residue;  // in [0, modulus)
  BigInt modulus;  // product of the input moduli
};

CrtSolution crt_solve(const CongruenceSystem& system);

}  // namespace frob

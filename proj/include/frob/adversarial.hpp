#pragma once

#include "frob/ints.hpp"

#include <vector>

namespace frob {

// Constructive witness that n = q*a1*a2 + 1 has no coprime representation:
// every one of the q solutions (x_l, y_l) of a1*x + a2*y = n shares the
// prime p_l.
struct AdversarialWitness {
  i64 a1 = 0;
  i64 q = 0;      // prime, q > a1, q != -1 (mod a1)
  BigInt a2;      // least admissible solution of the congruence system
  BigInt n;       // q*a1*a2 + 1

  struct Assignment {
    i64 ell = 0;  // in [1, q]
    BigInt x;     // (a2+1)/a1 + (q-ell)*a2
    i64 y = 0;    // ell*a1 - 1
    i64 p = 0;    // prime dividing both x and y
  };
  std::vector<Assignment> assignments;  // one per ell = 1..q
};

// Builds a2 by iterated CRT so that gcd(x_l, y_l) > 1 for every l; every
// divisibility claim is re-verified numerically before returning.
AdversarialWitness construct_adversarial(i64 a1, i64 q);

// True iff the q nonnegative solutions of a1*x + a2*y = n, enumerated
// independently through the denumerant closed form, all have gcd > 1.
bool verify_adversarial(const AdversarialWitness& witness);

}  // namespace frob

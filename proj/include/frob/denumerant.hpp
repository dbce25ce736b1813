#pragma once

#include "frob/ints.hpp"

#include <vector>

namespace frob {

// Validated pair 1 < a1 < a2, gcd(a1, a2) = 1.
class CoprimePair {
 public:
  CoprimePair(i64 a1, i64 a2);

  i64 a1() const { return a1_; }
  i64 a2() const { return a2_; }
  i64 product() const { return a1_ * a2_; }

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;

 private:
  i64 a1_;
  i64 a2_;
};

// Validated k-tuple of positive integers with overall gcd 1, stored sorted
// ascending (duplicates permitted).
class Basis {
 public:
  explicit Basis(std::vector<i64> coefficients);

  const std::vector<i64>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

 private:
  std::vector<i64> coeffs_;
};

// The nonnegative solutions of a1*x + a2*y = n form the progression
// (x0 - k*a2, y0 + k*a1), k = 0..count-1. count equals g(n).
template <class I>
struct BasicSolutionFamily {
  I n{};
  I x0{};      // largest-x solution when count > 0
  i64 y0 = 0;  // in [0, a1)
  I count{};

  template <class Fn>  // fn(x, y) for each member
  void for_each(i64 a1, i64 a2, Fn&& fn) const {
    I x = x0;
    I y = I(y0);
    for (I k = 0; k < count; ++k, x -= a2, y += a1) fn(x, y);
  }
};

using SolutionFamily = BasicSolutionFamily<i64>;

// Unique r in [0, a1) with a2*r = n (mod a1).
i64 residue_r(i64 n, const CoprimePair& pair);
i64 residue_r(const BigInt& n, const CoprimePair& pair);

// g(n): number of nonnegative (x, y) with a1*x + a2*y = n, via the closed
// form floor((n - a2*r_n)/(a1*a2)) + 1 (floor toward -inf). n >= 1.
i64 count_reps(i64 n, const CoprimePair& pair);
BigInt count_reps(const BigInt& n, const CoprimePair& pair);

SolutionFamily solutions(i64 n, const CoprimePair& pair);
BasicSolutionFamily<BigInt> solutions(const BigInt& n, const CoprimePair& pair);

// Number of nonnegative tuples with sum a_i*x_i = n, exact coin-style DP;
// count_reps_k(0) = 1 (the empty representation).
u64 count_reps_k(i64 n, const Basis& basis);

// Classical two-variable Frobenius number a1*a2 - a1 - a2.
i64 sylvester_frobenius(const CoprimePair& pair);

}  // namespace frob

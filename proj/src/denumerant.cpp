#include "frob/denumerant.hpp"

#include "frob/budget.hpp"

#include <algorithm>
#include <numeric>

namespace frob {

CoprimePair::CoprimePair(i64 a1, i64 a2) : a1_(a1), a2_(a2) {
  if (a1 <= 1) throw std::invalid_argument("a1 must be > 1");
  if (a2 <= a1) throw std::invalid_argument("a2 must be > a1");
  if (std::gcd(a1, a2) != 1) throw std::invalid_argument("gcd(a1,a2) must be 1");
  checked_mul(a1, a2);  // every formula below multiplies them
}

Basis::Basis(std::vector<i64> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() < 2) throw std::invalid_argument("basis needs k >= 2 coefficients");
  i64 g = 0;
  for (i64 c : coeffs_) {
    if (c < 1) throw std::invalid_argument("basis coefficients must be positive");
    g = std::gcd(g, c);
  }
  if (g != 1) throw std::invalid_argument("gcd of basis coefficients must be 1");
  std::sort(coeffs_.begin(), coeffs_.end());
}

namespace {

template <class I>
i64 residue_r_impl(const I& n, const CoprimePair& pair) {
  const i64 a1 = pair.a1();
  const i64 n_mod = static_cast<i64>(n % a1);
  const i64 inv = mod_inverse(pair.a2() % a1, a1);
  return static_cast<i64>(static_cast<unsigned __int128>(n_mod) *
                          static_cast<u64>(inv) % static_cast<u64>(a1));
}

template <class I>
BasicSolutionFamily<I> solutions_impl(const I& n, const CoprimePair& pair) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  BasicSolutionFamily<I> fam;
  fam.n = n;
  fam.y0 = residue_r_impl(n, pair);
  const I num = n - I(pair.a2()) * fam.y0;
  if (num < 0) {
    fam.count = 0;
    return fam;
  }
  fam.x0 = num / pair.a1();
  fam.count = fam.x0 / pair.a2() + 1;
  return fam;
}

}  // namespace

i64 residue_r(i64 n, const CoprimePair& pair) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return residue_r_impl(n, pair);
}

i64 residue_r(const BigInt& n, const CoprimePair& pair) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return residue_r_impl(n, pair);
}

i64 count_reps(i64 n, const CoprimePair& pair) {
  return solutions_impl(n, pair).count;
}

BigInt count_reps(const BigInt& n, const CoprimePair& pair) {
  return solutions_impl(n, pair).count;
}

SolutionFamily solutions(i64 n, const CoprimePair& pair) {
  return solutions_impl(n, pair);
}

BasicSolutionFamily<BigInt> solutions(const BigInt& n, const CoprimePair& pair) {
  return solutions_impl(n, pair);
}

u64 count_reps_k(i64 n, const Basis& basis) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) return 1;
  // the DP table holds n+1 u64 entries
  const u64 table_limit = std::min<u64>(budget_or(kDefaultEnumBudget), 100'000'000);
  if (static_cast<u64>(n) + 1 > table_limit)
    throw BudgetError("count_reps_k: n exceeds the enumeration budget");
  std::vector<u64> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (i64 c : basis.coefficients()) {
    for (i64 v = c; v <= n; ++v) ways[v] += ways[v - c];
  }
  return ways[static_cast<std::size_t>(n)];
}

i64 sylvester_frobenius(const CoprimePair& pair) {
  return pair.product() - pair.a1() - pair.a2();
}

}  // namespace frob

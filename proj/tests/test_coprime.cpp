#include "frob/coprime.hpp"

#include "frob/arith.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace frob;

TEST_CASE("count_coprime_reps examples") {
  const CoprimePair pair(3, 5);
  CHECK(count_coprime_reps(8, pair) == 1);
  CHECK(count_coprime_reps(15, pair) == 0);
  CHECK(count_coprime_reps(1, pair) == 0);
}

TEST_CASE("closed form equals oracle on a pair sample") {
  for (const auto& [a1, a2] : std::vector<std::pair<i64, i64>>{
           {2, 3}, {3, 5}, {4, 9}, {7, 10}, {11, 13}, {5, 28}}) {
    const CoprimePair pair(a1, a2);
    for (i64 n = 1; n <= 1500; ++n) {
      const i64 fast = count_coprime_reps(n, pair);
      const i64 slow = oracles::count_coprime2(n, a1, a2);
      if (fast != slow) {
        CAPTURE(a1);
        CAPTURE(a2);
        CAPTURE(n);
        REQUIRE(fast == slow);
      }
    }
  }
  CHECK(true);
}

TEST_CASE("mobius consistency: sum of f over divisors gives g") {
  const CoprimePair pair(4, 7);
  for (i64 n = 1; n <= 2000; ++n) {
    i64 total = 0;
    for (u64 d : divisors(factorize(static_cast<u64>(n))))
      total += count_coprime_reps(static_cast<i64>(d), pair);
    CHECK(total == count_reps(n, pair));
  }
}

TEST_CASE("oracle handles bases and edge cases") {
  CHECK(count_coprime_reps_oracle(8, Basis({3, 5})) == 1);
  CHECK(count_coprime_reps_oracle(0, Basis({2, 3})) == 0);
  CHECK(count_coprime_reps_oracle(10, Basis({2, 3, 5})) == 1);  // only (1,1,1)
  CHECK(count_coprime_reps_oracle(10, Basis({2, 3, 5})) ==
        oracles::count_coprime_k(10, {2, 3, 5}));
  for (i64 n = 0; n <= 120; ++n)
    CHECK(count_coprime_reps_oracle(n, Basis({2, 3, 5})) ==
          oracles::count_coprime_k(n, {2, 3, 5}));
}

TEST_CASE("oracle refuses oversized enumerations") {
  CHECK_THROWS_AS(count_coprime_reps_oracle(10'000'000, Basis({2, 3, 5})),
                  BudgetError);
}

TEST_CASE("error_term examples are exact rationals") {
  const CoprimePair pair(3, 5);
  CHECK(error_term(8, pair).value == BigRat(11, 15));
  CHECK(error_term(1, pair).value == BigRat(-1, 15));
  CHECK(error_term(15, pair).value == BigRat(-8, 15));
}

TEST_CASE("error_term identity and strict bound over five pairs") {
  for (const auto& [a1, a2] : std::vector<std::pair<i64, i64>>{
           {3, 5}, {7, 9}, {23, 29}, {4, 25}, {11, 60}}) {
    const CoprimePair pair(a1, a2);
    for (i64 n = 1; n <= 100'000; ++n) {
      const Factorization fact = factorize(static_cast<u64>(n));
      const BigRat e = error_term(n, pair).value;
      const BigRat f_exact = BigRat(count_coprime_reps(n, pair));
      const BigRat phi_term(BigInt(euler_phi(fact)), BigInt(pair.product()));
      if (e + phi_term != f_exact) {
        CAPTURE(a1);
        CAPTURE(a2);
        CAPTURE(n);
        REQUIRE(e + phi_term == f_exact);
      }
      const BigRat bound(BigInt(1) << omega(fact));
      CHECK(abs(e) < bound);
    }
  }
  CHECK(true);
}

TEST_CASE("coprime_frobenius certified searches") {
  const GResult g23 = coprime_frobenius(CoprimePair(2, 3));
  CHECK(g23.value == 10);
  CHECK(g23.certified);
  CHECK(g23.cutoff_used == 54);

  CHECK(coprime_frobenius(CoprimePair(4, 13)).value == 231);
  CHECK(coprime_frobenius(CoprimePair(3, 5)).value == 42);

  // Theorem-style regression on the (2, a) family, small a
  for (i64 a = 3; a <= 25; a += 2)
    CHECK(coprime_frobenius(CoprimePair(2, a)).value == 4 * a - 2);
}

TEST_CASE("search is worker-count independent") {
  const CoprimePair pair(5, 7);
  const auto seq = detail::coprime_frobenius_search(pair, 1);
  const auto par = detail::coprime_frobenius_search(pair, 4);
  CHECK(seq.result.value == par.result.value);
  CHECK(seq.longest_zero_run == par.longest_zero_run);
}

TEST_CASE("lower bound f(a1*a2) = 0 and recertification sample") {
  std::mt19937_64 rng(5);
  for (const auto& [a1, a2] : std::vector<std::pair<i64, i64>>{{2, 3}, {3, 8}, {5, 6}, {4, 13}}) {
    const CoprimePair pair(a1, a2);
    CHECK(count_coprime_reps(pair.product(), pair) == 0);
    const GResult res = coprime_frobenius(pair);
    CHECK(res.value >= pair.product());
    REQUIRE(res.certified);
    std::uniform_int_distribution<i64> sample(res.value + 1, res.cutoff_used);
    const Basis basis({a1, a2});
    for (int i = 0; i < 100; ++i) CHECK(has_coprime_rep(sample(rng), basis));
  }
}

TEST_CASE("budget ceiling raises BudgetError") {
  // (199, 200) needs a cutoff near 10^7; squeeze the ceiling below it
  setenv("COPRIME_FROBENIUS_BUDGET", "1000", 1);
  CHECK_THROWS_AS(coprime_frobenius(CoprimePair(3, 89)), BudgetError);
  unsetenv("COPRIME_FROBENIUS_BUDGET");
  CHECK(coprime_frobenius(CoprimePair(3, 89)).value == 1870);
}

TEST_CASE("coprime_frobenius_k") {
  CHECK_THROWS_WITH_AS(coprime_frobenius_k(Basis({2, 3}), 100),
                       "use coprime_frobenius for k=2", std::invalid_argument);

  const GResult g235 = coprime_frobenius_k(Basis({2, 3, 5}), 10'000);
  CHECK(g235.value == 6);
  CHECK_FALSE(g235.certified);

  const GResult g123 = coprime_frobenius_k(Basis({1, 2, 3}), 1'000);
  CHECK(g123.value == 0);  // every n >= 1 has a coprime representation
  CHECK_FALSE(g123.certified);

  CHECK(coprime_frobenius_k(Basis({3, 4, 5}), 5'000).value == 6);
  CHECK(coprime_frobenius_k(Basis({5, 6, 7}), 5'000).value == 15);
}

TEST_CASE("gap_report examples") {
  const GapReport g35 = gap_report(CoprimePair(3, 5));
  CHECK(g35.ell == 2);
  CHECK(g35.L == 2);

  const GapReport g23 = gap_report(CoprimePair(2, 3));
  CHECK(g23.ell == 1);
  CHECK(g23.L == 1);  // zero-f set {1,4,6,10}, all isolated

  CHECK(gap_report(CoprimePair(2, 5)).ell == 1);
  CHECK(gap_report(CoprimePair(4, 13)).L == 8);
}

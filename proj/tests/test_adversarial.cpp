#include "frob/adversarial.hpp"

#include "frob/coprime.hpp"
#include "frob/denumerant.hpp"

#include <doctest.h>

#include <numeric>

using namespace frob;

TEST_CASE("construct_adversarial(3, 7) matches the worked construction") {
  const AdversarialWitness w = construct_adversarial(3, 7);
  CHECK(w.a2 == 89);
  CHECK(w.n == 1870);
  REQUIRE(w.assignments.size() == 7);

  const std::vector<std::pair<i64, i64>> expected{
      {564, 2}, {475, 5}, {386, 8}, {297, 11}, {208, 14}, {119, 17}, {30, 20}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& a = w.assignments[i];
    CHECK(a.ell == static_cast<i64>(i) + 1);
    CHECK(a.x == expected[i].first);
    CHECK(a.y == expected[i].second);
    CHECK(a.x % a.p == 0);
    CHECK(a.y % a.p == 0);
    CHECK(a.p > 1);
  }
  CHECK(verify_adversarial(w));
  CHECK(count_coprime_reps(1870, CoprimePair(3, 89)) == 0);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_WITH_AS(construct_adversarial(2, 5), "a1 > 2 required",
                       std::invalid_argument);
  CHECK_THROWS_AS(construct_adversarial(3, 5), std::invalid_argument);  // 5 = -1 mod 3
  CHECK_THROWS_AS(construct_adversarial(3, 8), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(construct_adversarial(7, 5), std::invalid_argument);  // q <= a1
}

TEST_CASE("perturbed witnesses fail verification") {
  AdversarialWitness w = construct_adversarial(3, 7);
  AdversarialWitness bad_a2 = w;
  bad_a2.a2 = 91;
  bad_a2.n = BigInt(7) * 3 * 91 + 1;
  CHECK_FALSE(verify_adversarial(bad_a2));

  AdversarialWitness bad_n = w;
  bad_n.n += 3;
  CHECK_FALSE(verify_adversarial(bad_n));
}

TEST_CASE("every admissible instance with a1 in {3,4,5}, q <= 23 verifies") {
  int instances = 0;
  for (i64 a1 : {3, 4, 5}) {
    for (i64 q : {5, 7, 11, 13, 17, 19, 23}) {
      if (q <= a1 || (q + 1) % a1 == 0) continue;
      const AdversarialWitness w = construct_adversarial(a1, q);
      CHECK(verify_adversarial(w));
      CHECK(w.n == BigInt(q) * a1 * w.a2 + 1);
      CHECK(gcd(BigInt(a1), w.a2) == 1);
      ++instances;
    }
  }
  CHECK(instances == 11);
}

TEST_CASE("constructed pair bounds the coprime Frobenius number") {
  const AdversarialWitness w = construct_adversarial(3, 7);
  const GResult res = coprime_frobenius(CoprimePair(3, 89));
  REQUIRE(res.certified);
  CHECK(BigInt(res.value) >= w.n);
}

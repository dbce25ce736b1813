#include "frob/adversarial.hpp"

#include "frob/arith.hpp"
#include "frob/denumerant.hpp"

#include <algorithm>
#include <string>

namespace frob {

namespace {

// Smallest prime factor of y not equal to excluded (0 = none); 0 if absent.
i64 smallest_prime_factor_except(i64 y, i64 excluded) {
  for (const auto& [p, e] : factorize(static_cast<u64>(y)).factors)
    if (static_cast<i64>(p) != excluded) return static_cast<i64>(p);
  return 0;
}

}  // namespace

AdversarialWitness construct_adversarial(i64 a1, i64 q) {
  if (a1 <= 2) throw std::invalid_argument("a1 > 2 required");
  if (q <= a1) throw std::invalid_argument("q > a1 required");
  if (!is_prime(static_cast<u64>(q))) throw std::invalid_argument("q must be prime");
  if ((q + 1) % a1 == 0)
    throw std::invalid_argument("q = -1 (mod a1) is excluded: pick q with q mod a1 != a1-1");

  // The unique l0 in [1, q] with q | l0*a1 - 1.
  const i64 l0 = mod_inverse(a1 % q, q);
  for (i64 l = 1; l <= q; ++l) {
    const bool divides = (l * a1 - 1) % q == 0;
    if (divides != (l == l0))
      throw std::logic_error("l0 uniqueness check failed");
  }
  const i64 y_l0 = l0 * a1 - 1;
  if (y_l0 == q) throw std::logic_error("y_l0 == q cannot happen for admissible q");
  const i64 p0 = smallest_prime_factor_except(y_l0, q);
  if (p0 == 0 || p0 % q == 0 || std::gcd(p0, q * a1) != 1)
    throw std::logic_error("p0 must exist and be coprime to q*a1");

  CongruenceSystem system;
  system.constraints.push_back({a1, a1 - 1});  // a2 = -1 (mod a1)

  std::vector<i64> used;  // primes with an installed congruence, in order
  std::vector<i64> prime_for(static_cast<std::size_t>(q) + 1, 0);

  // Installs a2*(1 + (q-l)*a1) = -1 (mod p), which forces p | x_l.
  auto install = [&](i64 p, i64 l) {
    const i64 coeff = floor_mod(1 + (q - l) * a1, p);
    if (coeff == 0) throw std::logic_error("coefficient divisible by p");
    const i64 residue = floor_mod(-mod_inverse(coeff, p), p);
    system.constraints.push_back({p, residue});
    used.push_back(p);
  };

  install(p0, l0);
  prime_for[static_cast<std::size_t>(l0)] = p0;

  for (i64 l = 1; l <= q; ++l) {
    if (l == l0) continue;
    const i64 y = l * a1 - 1;
    i64 reused = 0;
    for (i64 p : used) {
      if (y % p == 0) {
        reused = p;
        break;
      }
    }
    if (reused != 0) {
      prime_for[static_cast<std::size_t>(l)] = reused;  // no new constraint
    } else {
      const i64 p = smallest_prime_factor_except(y, 0);
      if (p == q) throw std::logic_error("q divides y_l for l != l0");
      install(p, l);
      prime_for[static_cast<std::size_t>(l)] = p;
    }
  }

  const CrtSolution crt = crt_solve(system);
  BigInt a2 = crt.residue;
  while (a2 <= a1) a2 += crt.modulus;

  AdversarialWitness w;
  w.a1 = a1;
  w.q = q;
  w.a2 = a2;
  w.n = BigInt(q) * a1 * a2 + 1;

  // Re-verify every divisibility claim numerically.
  if (floor_mod(a2 + 1, BigInt(a1)) != 0)
    throw std::logic_error("a2 != -1 (mod a1)");
  const BigInt x_base = (a2 + 1) / a1;
  for (i64 l = 1; l <= q; ++l) {
    AdversarialWitness::Assignment asg;
    asg.ell = l;
    asg.y = l * a1 - 1;
    asg.x = x_base + BigInt(q - l) * a2;
    asg.p = prime_for[static_cast<std::size_t>(l)];
    if (BigInt(a1) * asg.x + BigInt(asg.y) * a2 != w.n)
      throw std::logic_error("solution identity failed");
    if (asg.y % asg.p != 0 || asg.x % asg.p != 0)
      throw std::logic_error("p_l does not divide both coordinates");
    w.assignments.push_back(std::move(asg));
  }
  return w;
}

bool verify_adversarial(const AdversarialWitness& witness) {
  if (witness.a1 <= 2 || witness.q <= witness.a1 || witness.a2 <= witness.a1)
    return false;
  if (gcd(BigInt(witness.a1), witness.a2) != 1) return false;
  if (witness.n < 1) return false;

  // Enumerate the solution family of n independently via the closed form.
  // The pair arithmetic needs only a1 and a2 mod a1, so BigInt a2 is handled
  // through the generic family walk.
  const i64 a1 = witness.a1;
  const BigInt& a2 = witness.a2;
  const i64 y0 = static_cast<i64>(
      floor_mod(BigInt(mod_inverse(static_cast<i64>(a2 % a1), a1)) * (witness.n % a1),
                BigInt(a1)));
  const BigInt num = witness.n - a2 * y0;
  if (num < 0) return false;  // no representation at all: count mismatch
  const BigInt x0 = num / a1;
  const BigInt count = x0 / a2 + 1;
  if (count != witness.q) return false;  // the construction yields exactly q

  BigInt x = x0;
  BigInt y = y0;
  for (BigInt k = 0; k < count; ++k, x -= a2, y += a1) {
    if (gcd(x, y) == 1) return false;
  }
  return true;
}

}  // namespace frob

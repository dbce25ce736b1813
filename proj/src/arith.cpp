#include "frob/arith.hpp"

#include "frob/budget.hpp"

#include <algorithm>
#include <numeric>

namespace frob {

namespace {

constexpr u64 kDefaultSieveBound = 10'000'000;

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
  u64 out = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) out = mulmod_u64(out, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return out;
}

}  // namespace

std::vector<u64> Factorization::distinct_primes() const {
  std::vector<u64> out;
  out.reserve(factors.size());
  for (const auto& [p, e] : factors) out.push_back(p);
  return out;
}

SpfSieve::SpfSieve(u64 bound) : bound_(bound), spf_(bound + 1, 0) {
  std::vector<std::uint32_t> primes;
  for (u64 i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > bound) break;
      spf_[i * p] = p;
    }
  }
}

Factorization SpfSieve::factorize(u64 n) const {
  if (n < 1 || n > bound_) throw std::invalid_argument("SpfSieve::factorize: n out of range");
  Factorization out;
  out.n = n;
  while (n > 1) {
    u64 p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.emplace_back(p, e);
  }
  return out;
}

const SpfSieve& default_sieve() {
  static const SpfSieve sieve(kDefaultSieveBound);
  return sieve;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin base set for 64-bit inputs
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  const SpfSieve& sieve = default_sieve();
  if (n <= sieve.bound()) return sieve.factorize(n);

  Factorization out;
  out.n = n;
  u64 m = n;
  auto strip = [&](u64 p) {
    if (m % p != 0) return;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.factors.emplace_back(p, e);
  };
  for (u64 p : {2ull, 3ull, 5ull}) strip(p);
  if (m > 1 && !is_prime(m)) {
    // wheel mod 30 over candidates 7, 11, 13, ...
    static constexpr u64 kStep[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 d = 7;
    int wi = 0;
    while (d * d <= m) {
      if (m % d == 0) {
        strip(d);
        if (m == 1 || is_prime(m)) break;
      }
      d += kStep[wi];
      wi = (wi + 1) & 7;
    }
  }
  if (m > 1) out.factors.emplace_back(m, 1);
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::vector<u64> primes_upto(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

int mobius(const Factorization& f) {
  for (const auto& [p, e] : f.factors)
    if (e > 1) return 0;
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

u64 euler_phi(const Factorization& f) {
  u64 out = 1;
  for (const auto& [p, e] : f.factors) {
    out *= p - 1;
    for (int i = 1; i < e; ++i) out *= p;
  }
  return out;
}

u64 radical(const Factorization& f) {
  u64 out = 1;
  for (const auto& [p, e] : f.factors) out *= p;
  return out;
}

int mobius(u64 n) { return mobius(factorize(n)); }
u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }
int omega(u64 n) { return omega(factorize(n)); }
u64 radical(u64 n) { return radical(factorize(n)); }

void for_each_squarefree_divisor(const Factorization& f,
                                 const std::function<void(u64, int)>& fn) {
  const std::size_t m = f.factors.size();
  if (m >= 32) throw std::invalid_argument("too many prime factors");
  for (u64 mask = 0; mask < (u64{1} << m); ++mask) {
    u64 d = 1;
    int mu = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (u64{1} << i)) {
        d *= f.factors[i].first;
        mu = -mu;
      }
    }
    fn(d, mu);
  }
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    u64 pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
    }
  }
  return out;
}

u64 gcd_all(const std::vector<u64>& values) {
  if (values.empty()) throw std::invalid_argument("gcd_all: empty input");
  u64 g = 0;
  for (u64 v : values) g = std::gcd(g, v);
  if (g == 0) throw std::invalid_argument("gcd_all: all-zero input");
  return g;
}

CrtSolution crt_solve(const CongruenceSystem& system) {
  if (system.constraints.empty())
    throw std::invalid_argument("crt_solve: empty system");
  BigInt residue = 0;
  BigInt modulus = 1;
  for (const auto& c : system.constraints) {
    if (c.modulus < 2) throw std::invalid_argument("crt_solve: modulus must be >= 2");
    if (c.residue < 0 || c.residue >= c.modulus)
      throw std::invalid_argument("crt_solve: residue out of range");
    const BigInt m(c.modulus);
    if (gcd(modulus, m) != 1)
      throw std::invalid_argument("moduli not pairwise coprime");
    // residue + modulus*t = c.residue (mod m)
    const i64 mod_small = static_cast<i64>(modulus % m);
    const i64 res_small = static_cast<i64>(residue % m);
    const i64 delta = floor_mod(c.residue - res_small, c.modulus);
    const i64 inv = mod_inverse(mod_small, c.modulus);
    const i64 step = static_cast<i64>(
        static_cast<unsigned __int128>(delta) * static_cast<u64>(inv) %
        static_cast<u64>(c.modulus));
    residue += modulus * step;
    modulus *= m;
  }
  return {residue, modulus};
}

}  // namespace frob

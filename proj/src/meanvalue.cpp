#include "frob/meanvalue.hpp"

#include "frob/arith.hpp"
#include "frob/budget.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <thread>

namespace frob {

namespace {

struct PairContext {
  i64 a1, a2, a1a2;
  i64 inv_a2_mod_a1;
};

// phi(n) and the distinct primes of n from one sieve walk.
struct NData {
  u64 phi;
  i64 primes[12];  // omega(n) <= 9 for n <= the 10^9 hard cap
  int num_primes;
};

NData n_data(const SpfSieve& sieve, i64 n) {
  NData d{1, {}, 0};
  u64 m = static_cast<u64>(n);
  while (m > 1) {
    const u64 p = sieve.spf(m);
    u64 pe = 1;
    while (m % p == 0) {
      m /= p;
      pe *= p;
    }
    d.phi *= pe / p * (p - 1);
    d.primes[d.num_primes++] = static_cast<i64>(p);
  }
  return d;
}

// Good-k count in [0, K): inclusion-exclusion over the forbidden residue of
// each prime, combining moduli incrementally by CRT.
struct AvoidCounter {
  i64 K;
  const i64* primes;
  const i64* bad;
  int m;
  i64 total = 0;

  void walk(int i, i64 M, i64 C, int sign) {
    if (i == m) {
      total += sign * (C >= K ? 0 : (K - 1 - C) / M + 1);
      return;
    }
    walk(i + 1, M, C, sign);  // exclude primes[i]
    const i64 p = primes[i];
    // combine C (mod M) with bad[i] (mod p)
    const i64 t = static_cast<i64>(
        static_cast<unsigned __int128>(floor_mod(bad[i] - C, p)) *
        static_cast<u64>(mod_inverse(M % p, p)) % static_cast<u64>(p));
    walk(i + 1, M * p, C + M * t, -sign);
  }
};

i64 count_avoiding(i64 K, const i64* primes, const i64* bad, int m) {
  AvoidCounter counter{K, primes, bad, m};
  counter.walk(0, 1, 0, 1);
  return counter.total;
}

i64 f_by_residue_count(const PairContext& ctx, i64 n, const NData& nd) {
  const i64 y0 = static_cast<i64>(static_cast<unsigned __int128>(n % ctx.a1) *
                                  static_cast<u64>(ctx.inv_a2_mod_a1) %
                                  static_cast<u64>(ctx.a1));
  const i64 num = n - ctx.a2 * y0;
  if (num < 0) return 0;
  const i64 x0 = num / ctx.a1;
  const i64 K = x0 / ctx.a2 + 1;
  i64 bad[12];
  for (int i = 0; i < nd.num_primes; ++i) {
    const i64 p = nd.primes[i];
    if (ctx.a2 % p != 0) {
      bad[i] = static_cast<i64>(static_cast<unsigned __int128>(x0 % p) *
                                static_cast<u64>(mod_inverse(ctx.a2 % p, p)) %
                                static_cast<u64>(p));
    } else {
      bad[i] = floor_mod(-static_cast<i64>(
                             static_cast<unsigned __int128>(y0 % p) *
                             static_cast<u64>(mod_inverse(ctx.a1 % p, p)) %
                             static_cast<u64>(p)),
                         p);
    }
  }
  return count_avoiding(K, nd.primes, bad, nd.num_primes);
}

i64 f_by_gcd_enumeration(const PairContext& ctx, i64 n) {
  const i64 y0 = static_cast<i64>(static_cast<unsigned __int128>(n % ctx.a1) *
                                  static_cast<u64>(ctx.inv_a2_mod_a1) %
                                  static_cast<u64>(ctx.a1));
  const i64 num = n - ctx.a2 * y0;
  if (num < 0) return 0;
  i64 x = num / ctx.a1;
  i64 y = y0;
  const i64 count = x / ctx.a2 + 1;
  i64 f = 0;
  for (i64 k = 0; k < count; ++k, x -= ctx.a2, y += ctx.a1)
    if (std::gcd(x, y) == 1) ++f;
  return f;
}

// Sum of f(n)*a1a2 - phi(n) over [lo, hi].
__int128 sum_range(const PairContext& ctx, const SpfSieve& sieve, i64 lo, i64 hi,
                   MeanValueMethod method) {
  __int128 acc = 0;
  for (i64 n = lo; n <= hi; ++n) {
    const NData nd = n_data(sieve, n);
    const i64 f = method == MeanValueMethod::kResidueCount
                      ? f_by_residue_count(ctx, n, nd)
                      : f_by_gcd_enumeration(ctx, n);
    acc += static_cast<__int128>(f) * ctx.a1a2 - static_cast<__int128>(nd.phi);
  }
  return acc;
}

BigInt to_bigint(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<u64>(mag >> 64);
  out <<= 64;
  out += static_cast<u64>(mag);
  return neg ? -out : out;
}

}  // namespace

PartialSumSeries error_partial_sums(const CoprimePair& pair, i64 n_max,
                                    const std::vector<i64>& checkpoints,
                                    int workers, MeanValueMethod method) {
  if (n_max < 1) throw std::invalid_argument("N_max must be positive");
  // hard cap keeps the sieve in uint32 range and omega(n) within the arrays
  if (static_cast<u64>(n_max) >
      std::min<u64>(budget_or(kDefaultMeanValueBudget), 1'000'000'000))
    throw BudgetError("N_max exceeds the mean-value budget (set COPRIME_FROBENIUS_BUDGET)");
  std::vector<i64> points(checkpoints);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (!points.empty() && (points.front() < 1 || points.back() > n_max))
    throw std::invalid_argument("checkpoints must lie in [1, N_max]");

  PartialSumSeries series{pair, {}};
  if (points.empty()) return series;

  const SpfSieve sieve(static_cast<u64>(points.back()));
  const PairContext ctx{pair.a1(), pair.a2(), pair.product(),
                        mod_inverse(pair.a2() % pair.a1(), pair.a1())};
  workers = std::max(1, workers);

  BigInt numerator = 0;  // running sum of f*a1a2 - phi, denominator a1a2
  i64 done = 0;
  for (i64 point : points) {
    const i64 lo = done + 1, hi = point;
    if (hi >= lo) {
      const i64 span = hi - lo + 1;
      if (workers == 1 || span < 1024) {
        numerator += to_bigint(sum_range(ctx, sieve, lo, hi, method));
      } else {
        std::vector<__int128> parts(static_cast<std::size_t>(workers), 0);
        std::vector<std::thread> pool;
        const i64 chunk = (span + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
          const i64 clo = lo + chunk * w;
          const i64 chi = std::min(hi, clo + chunk - 1);
          if (clo > chi) break;
          pool.emplace_back([&, w, clo, chi] {
            parts[static_cast<std::size_t>(w)] = sum_range(ctx, sieve, clo, chi, method);
          });
        }
        for (auto& t : pool) t.join();
        for (__int128 part : parts) numerator += to_bigint(part);
      }
    }
    done = point;
    PartialSumSeries::Checkpoint cp;
    cp.N = point;
    cp.S = BigRat(numerator, BigInt(ctx.a1a2));
    const double s_abs = std::abs(cp.S.convert_to<double>());
    cp.normalized = s_abs / (static_cast<double>(ctx.a1a2) *
                             std::sqrt(static_cast<double>(point)));
    series.checkpoints.push_back(std::move(cp));
  }
  return series;
}

std::vector<TwoOmegaPoint> two_omega_partial_sums(i64 n_max,
                                                  const std::vector<i64>& checkpoints) {
  if (n_max < 1) throw std::invalid_argument("N_max must be positive");
  // hard cap keeps the sieve in uint32 range and omega(n) within the arrays
  if (static_cast<u64>(n_max) >
      std::min<u64>(budget_or(kDefaultMeanValueBudget), 1'000'000'000))
    throw BudgetError("N_max exceeds the mean-value budget (set COPRIME_FROBENIUS_BUDGET)");
  std::vector<i64> points(checkpoints);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (!points.empty() && (points.front() < 1 || points.back() > n_max))
    throw std::invalid_argument("checkpoints must lie in [1, N_max]");

  std::vector<TwoOmegaPoint> out;
  if (points.empty()) return out;
  const SpfSieve sieve(static_cast<u64>(points.back()));
  u64 sum = 0;
  std::size_t next = 0;
  for (i64 n = 1; n <= points.back(); ++n) {
    if (n > 1) {
      u64 m = static_cast<u64>(n);
      int w = 0;
      while (m > 1) {
        const u64 p = sieve.spf(m);
        while (m % p == 0) m /= p;
        ++w;
      }
      sum += u64{1} << w;
    } else {
      sum += 1;  // omega(1) = 0
    }
    if (n == points[next]) {
      const double denom = static_cast<double>(n) * std::log(static_cast<double>(n));
      out.push_back({n, sum, n == 1 ? 0.0 : static_cast<double>(sum) / denom});
      ++next;
    }
  }
  return out;
}

void write_meanvalue_csv(std::ostream& out, const PartialSumSeries& series) {
  out << "N,S_num,S_den,normalized\n";
  for (const auto& cp : series.checkpoints) {
    out << cp.N << ',' << numerator(cp.S) << ',' << denominator(cp.S) << ','
        << cp.normalized << '\n';
  }
}

}  // namespace frob

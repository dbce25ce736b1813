#include "frob/scan.hpp"

#include "frob/coprime.hpp"
#include "frob/denumerant.hpp"

#include <atomic>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace frob {

namespace {

struct CacheEntry {
  i64 G;
  bool certified;
};

using CacheMap = std::map<std::pair<i64, i64>, CacheEntry>;

CacheMap load_cache(const std::string& path) {
  CacheMap cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  if (!std::getline(in, line) || line != kCacheVersionLine)
    return cache;  // stale or foreign version: invalidate
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string field;
    i64 vals[3] = {0, 0, 0};
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      ok = static_cast<bool>(std::getline(row, field, ','));
      if (ok) {
        try {
          vals[i] = parse_i64(field);
        } catch (const std::invalid_argument&) {
          ok = false;
        }
      }
    }
    std::string cert;
    ok = ok && static_cast<bool>(std::getline(row, cert));
    if (!ok || (cert != "true" && cert != "false")) continue;
    cache[{vals[0], vals[1]}] = CacheEntry{vals[2], cert == "true"};
  }
  return cache;
}

void store_cache(const std::string& path, const CacheMap& known,
                 const std::vector<ScanRecord>& fresh) {
  const bool rewrite = known.empty();
  std::ofstream out(path, rewrite ? std::ios::trunc : std::ios::app);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  if (rewrite) out << kCacheVersionLine << '\n';
  for (const ScanRecord& r : fresh) {
    if (known.count({r.a1, r.a2}) != 0) continue;
    out << r.a1 << ',' << r.a2 << ',' << r.G << ','
        << (r.G_certified ? "true" : "false") << '\n';
  }
}

// ell by a direct non-representable-run scan over [0, g_F].
i64 ell_scan(const CoprimePair& pair) {
  const i64 g_f = sylvester_frobenius(pair);
  i64 best = 0, run = 0;
  for (i64 n = 0; n <= g_f; ++n) {
    const bool representable = (n == 0) || count_reps(n, pair) > 0;
    if (!representable) {
      ++run;
      best = std::max(best, run);
    } else {
      run = 0;
    }
  }
  return best;
}

// L by a direct zero-f-run scan over [1, G] (used for cache hits, where the
// search pass is skipped).
i64 zero_run_scan(const CoprimePair& pair, i64 G) {
  const i64 inv = mod_inverse(pair.a2() % pair.a1(), pair.a1());
  i64 best = 0, run = 0;
  for (i64 n = 1; n <= G; ++n) {
    if (detail::coprime_count_is_zero(n, pair.a1(), pair.a2(), inv)) {
      ++run;
      best = std::max(best, run);
    } else {
      run = 0;
    }
  }
  return best;
}

ScanRecord make_record(const CoprimePair& pair, i64 G, bool certified, i64 L) {
  ScanRecord r;
  r.a1 = pair.a1();
  r.a2 = pair.a2();
  r.g_frobenius = sylvester_frobenius(pair);
  r.G = G;
  r.G_certified = certified;
  r.parity = (G % 2 == 0) ? "even" : "odd";
  r.ell = ell_scan(pair);
  r.L = L;
  return r;
}

}  // namespace

std::vector<ScanRecord> run_scan(i64 a1_max, i64 a2_max, const ScanOptions& options) {
  if (a1_max < 2 || a1_max >= a2_max)
    throw std::invalid_argument("scan needs 2 <= a1_max < a2_max");

  CacheMap cache;
  if (options.cache_path) cache = load_cache(*options.cache_path);

  std::vector<CoprimePair> pairs;
  for (i64 a1 = 2; a1 <= a1_max; ++a1)
    for (i64 a2 = a1 + 1; a2 <= a2_max; ++a2)
      if (std::gcd(a1, a2) == 1) pairs.emplace_back(a1, a2);

  std::vector<ScanRecord> rows(pairs.size(), ScanRecord{});
  std::atomic<std::size_t> cursor{0};
  auto worker_loop = [&] {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= pairs.size()) break;
      const CoprimePair& pair = pairs[i];
      const auto hit = cache.find({pair.a1(), pair.a2()});
      if (hit != cache.end()) {
        rows[i] = make_record(pair, hit->second.G, hit->second.certified,
                              zero_run_scan(pair, hit->second.G));
      } else {
        const detail::GSearch search = detail::coprime_frobenius_search(pair, 1);
        rows[i] = make_record(pair, search.result.value, search.result.certified,
                              search.longest_zero_run);
      }
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_loop);
    for (auto& t : pool) t.join();
  }
  // rows are already in (a1, a2) order because pairs was built that way

  if (options.cache_path) store_cache(*options.cache_path, cache, rows);
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& rows) {
  out << kScanCsvHeader << '\n';
  for (const ScanRecord& r : rows) {
    out << r.a1 << ',' << r.a2 << ',' << r.g_frobenius << ',' << r.G << ','
        << (r.G_certified ? "true" : "false") << ',' << r.parity << ','
        << r.ell << ',' << r.L << '\n';
  }
}

std::vector<ScanRecord> parse_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kScanCsvHeader)
    throw std::invalid_argument("bad scan CSV header");
  std::vector<ScanRecord> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string f[8];
    for (int i = 0; i < 8; ++i)
      if (!std::getline(row, f[i], ','))
        throw std::invalid_argument("bad scan CSV row: " + line);
    ScanRecord r;
    r.a1 = parse_i64(f[0]);
    r.a2 = parse_i64(f[1]);
    r.g_frobenius = parse_i64(f[2]);
    r.G = parse_i64(f[3]);
    if (f[4] != "true" && f[4] != "false")
      throw std::invalid_argument("bad boolean in scan CSV");
    r.G_certified = f[4] == "true";
    if (f[5] != "even" && f[5] != "odd")
      throw std::invalid_argument("bad parity in scan CSV");
    r.parity = f[5];
    r.ell = parse_i64(f[6]);
    r.L = parse_i64(f[7]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace frob

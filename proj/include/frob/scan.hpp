#pragma once

#include "frob/ints.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace frob {

// One CSV row of the pair scan.
struct ScanRecord {
  i64 a1 = 0;
  i64 a2 = 0;
  i64 g_frobenius = 0;  // a1*a2 - a1 - a2
  i64 G = 0;
  bool G_certified = false;
  std::string parity;   // "even" / "odd"
  i64 ell = 0;          // a1 - 1
  i64 L = 0;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

inline constexpr const char* kScanCsvHeader =
    "a1,a2,g_frobenius,G,G_certified,parity,ell,L";
inline constexpr const char* kCacheVersionLine = "# coprime-frobenius-cache v1";

struct ScanOptions {
  std::optional<std::string> cache_path;
  int workers = 1;
};

// One row per coprime pair with 1 < a1 <= a1_max, a1 < a2 <= a2_max, ordered
// by (a1, a2); deterministic regardless of worker count.
std::vector<ScanRecord> run_scan(i64 a1_max, i64 a2_max,
                                 const ScanOptions& options = {});

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& rows);
std::vector<ScanRecord> parse_scan_csv(std::istream& in);

}  // namespace frob

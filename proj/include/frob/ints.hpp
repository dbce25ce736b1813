#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace frob {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Raised when an operation would exceed the configured n-range/memory budget
// (exit code 2 at the CLI); domain errors use std::invalid_argument (exit 1).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Division rounding toward -inf; the Lemma-2.1-style counting formulas need
// floor semantics for negative numerators, not truncation toward zero.
constexpr i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr i64 floor_mod(i64 a, i64 b) { return a - floor_div(a, b) * b; }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor_mod(const BigInt& a, const BigInt& b) {
  return a - floor_div(a, b) * b;
}

// Inverse of a modulo m (m >= 1, gcd(a, m) == 1).
i64 mod_inverse(i64 a, i64 m);

// a*b as i64, throwing std::overflow_error when it does not fit.
i64 checked_mul(i64 a, i64 b);

i64 parse_i64(const std::string& text);  // strict decimal parse

}  // namespace frob

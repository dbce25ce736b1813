#include "frob/ints.hpp"

#include <charconv>

namespace frob {

i64 mod_inverse(i64 a, i64 m) {
  if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  a = floor_mod(a, m);
  i64 t = 0, nt = 1, r = m, nr = a;
  while (nr != 0) {
    i64 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return t < 0 ? t + m : t;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer product exceeds 2^63-1");
  return out;
}

i64 parse_i64(const std::string& text) {
  i64 value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("not an integer: '" + text + "'");
  return value;
}

}  // namespace frob

#include "frob/budget.hpp"

#include <cstdlib>
#include <string>

namespace frob {

u64 budget_or(u64 default_value) {
  const char* env = std::getenv("COPRIME_FROBENIUS_BUDGET");
  if (env == nullptr || *env == '\0') return default_value;
  try {
    i64 parsed = parse_i64(env);
    if (parsed > 0) return static_cast<u64>(parsed);
  } catch (const std::invalid_argument&) {
  }
  return default_value;  // malformed values fall back silently
}

}  // namespace frob

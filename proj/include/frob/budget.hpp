#pragma once

#include "frob/ints.hpp"

namespace frob {

// Global n-range/memory budget. Every guard derives its limit from
// budget_or(<module default>): the COPRIME_FROBENIUS_BUDGET environment
// variable, when set, replaces the caller's default.
u64 budget_or(u64 default_value);

// Defaults used across the modules.
inline constexpr u64 kDefaultSearchCeiling = 2'000'000'000;  // G-search cutoff
inline constexpr u64 kDefaultEnumBudget = 2'000'000'000;     // oracle tuples
inline constexpr u64 kDefaultRadicalBudget = 30'000'000;     // jacobsthal period
inline constexpr u64 kDefaultMeanValueBudget = 1'000'000;    // partial-sum N

}  // namespace frob

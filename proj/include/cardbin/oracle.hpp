#pragma once

#include <cstdint>

#include "cardbin/core.hpp"

namespace cardbin {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct OptResult {
  Certificate certificate;  // claim optimal iff exact
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// Exact minimum bin count by depth-first branch and bound. Items are taken
/// in non-increasing size order (ties by arrival index); among existing bins
/// only the first bin of each (level, count) class is tried, the new bin
/// last. When the node budget runs out the best packing found so far is
/// returned with claim feasible-upper-bound.
OptResult exact_opt(const Instance& instance, std::uint64_t node_budget = kDefaultNodeBudget);

/// First Fit Decreasing under the cardinality bound.
Certificate best_known_upper(const Instance& instance);

}  // namespace cardbin

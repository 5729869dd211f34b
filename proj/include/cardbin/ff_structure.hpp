#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cardbin/algorithms.hpp"
#include "cardbin/core.hpp"

namespace cardbin {

/// Throws InconsistentInput unless First Fit on `instance` produces exactly
/// the bins of `ff_packing` (same order, same members).
void require_ff_output(const Instance& instance, const Packing& ff_packing);

/// Checks the First Fit rule from a trace alone: when item i lands in bin b,
/// every earlier bin was full (k items) or had level > 1 - s_i, and b could
/// take the item. Empty when the trace is a valid FF trace.
std::vector<std::string> check_ff_minimality(const Instance& instance, const PlacementTrace& trace);

struct ReorderedInput {
  Instance instance;
  std::vector<std::size_t> order;  // order[new index] = original index
};

/// Items of FF k-bins first, then items of 2+-bins, then items of 1-bins,
/// each group in original arrival order. FF on the result has all k-bins
/// first, all 1-bins last, and the same bin count.
ReorderedInput reorder_for_ff(const Instance& instance, const Packing& ff_packing);

struct StructureReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// (a) every certificate bin holds at most one item from an FF 1-bin;
/// (b) for each j in 1..k-1, at most one FF j-bin and at most one FF j+-bin
///     (count in [j, k-1]) has level <= j/(j+1).
StructureReport check_ff_structure(const Instance& instance, const Packing& ff_packing,
                                   const Packing& certificate);

}  // namespace cardbin

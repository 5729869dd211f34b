#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cardbin/core.hpp"

namespace cardbin {

// Instance file:
//   BPCC v1
//   k <integer>
//   item <num>/<den> [x<count>]     one line per item (or run), arrival order
// Packing file:
//   PACKING v1
//   bins <m>
//   bin <j>: <0-based item indices>  for j = 0..m-1
// Trace file: one `place <item> -> <bin>` line per item.
// Lines starting with '#' and blank lines are ignored everywhere.

Instance read_instance(std::string_view text);
std::string write_instance(const Instance& instance);

std::vector<std::vector<std::size_t>> read_packing_groups(std::string_view text);
Packing read_packing(std::string_view text, const Instance& instance);
std::string write_packing(const Packing& packing);

/// trace[i] is the bin index item i was placed into.
std::vector<std::size_t> read_trace(std::string_view text);
std::string write_trace(const std::vector<std::size_t>& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace cardbin

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cardbin/errors.hpp"
#include "cardbin/rational.hpp"

namespace cardbin {

/// Cardinality bound k plus arrival-ordered item sizes. Item identity is the
/// arrival index; equal sizes are distinct items.
class Instance {
 public:
  /// Throws ParameterError unless k >= 2 and every size is in (0, 1].
  Instance(int k, std::vector<Rational> sizes);

  int k() const { return k_; }
  std::size_t size() const { return sizes_.size(); }
  bool empty() const { return sizes_.empty(); }
  const std::vector<Rational>& sizes() const { return sizes_; }
  const Rational& operator[](std::size_t i) const { return sizes_[i]; }

  Rational total_size() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int k_;
  std::vector<Rational> sizes_;
};

struct Bin {
  std::vector<std::size_t> items;  // arrival indices, in insertion order
  Rational level;

  std::size_t count() const { return items.size(); }
  friend bool operator==(const Bin&, const Bin&) = default;
};

/// Bins ordered by creation time. Levels are maintained incrementally; use
/// validate_packing to check feasibility against an instance.
class Packing {
 public:
  Packing() = default;

  /// Builds bins from index groups; throws MalformedPacking if an index is
  /// outside the instance. Feasibility is not checked here.
  static Packing from_groups(const Instance& instance,
                             const std::vector<std::vector<std::size_t>>& groups);

  std::size_t open_bin();
  void add(std::size_t bin, std::size_t item, const Rational& size);

  const std::vector<Bin>& bins() const { return bins_; }
  const Bin& operator[](std::size_t b) const { return bins_[b]; }
  std::size_t bin_count() const { return bins_.size(); }

  std::vector<std::vector<std::size_t>> groups() const;

  /// Same bins in the same order, ignoring the order of items inside a bin.
  bool same_bins(const Packing& other) const;

  friend bool operator==(const Packing&, const Packing&) = default;

 private:
  std::vector<Bin> bins_;
};

enum class Claim { optimal, feasible_upper_bound };

const char* to_string(Claim claim);

/// A feasible packing standing as proof of an upper bound on OPT.
struct Certificate {
  Packing packing;
  Claim claim = Claim::feasible_upper_bound;
  std::size_t claimed_count = 0;
};

/// Validates feasibility and wraps the packing; throws InconsistentInput if
/// the packing is infeasible for the instance.
Certificate make_certificate(const Instance& instance, Packing packing, Claim claim);

struct Violation {
  std::size_t bin;  // bin index, or SIZE_MAX for partition-level problems
  std::string rule;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Level <= 1, count <= k, and the bins partition {0..n-1}. Recomputes levels
/// from the instance rather than trusting the stored ones. Throws
/// MalformedPacking for out-of-range indices.
ValidationReport validate_packing(const Instance& instance, const Packing& packing);

/// max(ceil(sum of sizes), ceil(n / k)); 0 for an empty list.
std::int64_t trivial_lower_bound(std::span<const Rational> sizes, int k);
std::int64_t trivial_lower_bound(const Instance& instance);

}  // namespace cardbin

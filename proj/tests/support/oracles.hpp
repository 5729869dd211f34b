#pragma once

// Reference implementations used only by the tests. They work on integer
// numerators over a common denominator and share no code with the library's
// search or placement logic.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cardbin/core.hpp"

namespace cardbin::testing {

struct IntegerInstance {
  int k = 0;
  std::int64_t capacity = 0;        // common denominator
  std::vector<std::int64_t> sizes;  // numerators over `capacity`
};

inline IntegerInstance to_integers(const Instance& instance) {
  mpz_class denominator = 1;
  for (const auto& s : instance.sizes()) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), s.denominator().get_mpz_t());
  if (!denominator.fits_slong_p()) throw std::runtime_error("common denominator too large for the integer oracle");
  IntegerInstance out;
  out.k = instance.k();
  out.capacity = denominator.get_si();
  for (const auto& s : instance.sizes()) {
    mpz_class scaled = s.numerator() * (denominator / s.denominator());
    out.sizes.push_back(scaled.get_si());
  }
  return out;
}

/// Minimum number of blocks over all set partitions whose blocks respect
/// capacity and cardinality, enumerated as restricted growth strings in
/// arrival order. Only infeasible partial partitions are cut.
class ExhaustivePartitionOracle {
 public:
  explicit ExhaustivePartitionOracle(const Instance& instance) : in_(to_integers(instance)) {}

  std::size_t solve() {
    best_ = in_.sizes.size();
    load_.clear();
    count_.clear();
    visit(0);
    return best_;
  }

  std::uint64_t leaves() const { return leaves_; }

 private:
  void visit(std::size_t i) {
    if (i == in_.sizes.size()) {
      ++leaves_;
      if (load_.size() < best_) best_ = load_.size();
      return;
    }
    const std::int64_t s = in_.sizes[i];
    for (std::size_t b = 0; b < load_.size(); ++b) {
      if (load_[b] + s > in_.capacity || count_[b] >= in_.k) continue;
      load_[b] += s;
      ++count_[b];
      visit(i + 1);
      load_[b] -= s;
      --count_[b];
    }
    load_.push_back(s);
    count_.push_back(1);
    visit(i + 1);
    load_.pop_back();
    count_.pop_back();
  }

  IntegerInstance in_;
  std::vector<std::int64_t> load_;
  std::vector<int> count_;
  std::size_t best_ = 0;
  std::uint64_t leaves_ = 0;
};

inline std::size_t exhaustive_opt(const Instance& instance) { return ExhaustivePartitionOracle(instance).solve(); }

/// First Fit by linear scan over all bins.
inline std::vector<std::size_t> naive_first_fit(const Instance& instance) {
  const IntegerInstance in = to_integers(instance);
  std::vector<std::int64_t> load;
  std::vector<int> count;
  std::vector<std::size_t> trace;
  for (std::int64_t s : in.sizes) {
    std::size_t b = 0;
    while (b < load.size() && (load[b] + s > in.capacity || count[b] >= in.k)) ++b;
    if (b == load.size()) {
      load.push_back(0);
      count.push_back(0);
    }
    load[b] += s;
    ++count[b];
    trace.push_back(b);
  }
  return trace;
}

}  // namespace cardbin::testing

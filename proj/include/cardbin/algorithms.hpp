#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cardbin/core.hpp"

namespace cardbin {

/// trace[i] = bin that item i was placed into.
using PlacementTrace = std::vector<std::size_t>;

/// Irrevocable online placement. Items arrive one at a time; `place` returns
/// the chosen bin, either an existing index or the next fresh one.
class OnlineAlgorithm {
 public:
  explicit OnlineAlgorithm(int k);
  virtual ~OnlineAlgorithm() = default;

  OnlineAlgorithm(const OnlineAlgorithm&) = delete;
  OnlineAlgorithm& operator=(const OnlineAlgorithm&) = delete;

  virtual std::string_view name() const = 0;

  /// Throws ParameterError unless 0 < size <= 1. Throws std::logic_error if a
  /// subclass picks an infeasible bin.
  std::size_t place(const Rational& size);

  int k() const { return k_; }
  const Packing& packing() const { return packing_; }
  const PlacementTrace& trace() const { return trace_; }

 protected:
  /// Chooses a bin for the next item without mutating the packing.
  virtual std::size_t choose(const Rational& size) = 0;
  /// Called after the item has been added to `bin`.
  virtual void placed(std::size_t /*bin*/, const Rational& /*size*/) {}

  bool fits(std::size_t bin, const Rational& size) const;
  const Rational& residual(std::size_t bin) const { return residual_[bin]; }
  std::size_t count(std::size_t bin) const { return packing_[bin].count(); }
  std::size_t next_bin() const { return packing_.bin_count(); }

 private:
  int k_;
  Packing packing_;
  std::vector<Rational> residual_;  // 1 - level, kept for allocation-free fit tests
  PlacementTrace trace_;
};

/// Minimum-index bin with count <= k-1 and level <= 1 - size.
class FirstFit final : public OnlineAlgorithm {
 public:
  explicit FirstFit(int k) : OnlineAlgorithm(k) {}
  std::string_view name() const override { return "ff"; }

 protected:
  std::size_t choose(const Rational& size) override;
  void placed(std::size_t bin, const Rational& size) override;

 private:
  std::vector<std::size_t> open_;  // bins with fewer than k items, ascending
};

/// Cardinality-constrained Harmonic: class l = min(floor(1/size), k), one open
/// bin per class, a class-l bin closes on its l-th item.
class Harmonic final : public OnlineAlgorithm {
 public:
  explicit Harmonic(int k);
  std::string_view name() const override { return "harmonic"; }

  static int size_class(const Rational& size, int k);

 protected:
  std::size_t choose(const Rational& size) override;
  void placed(std::size_t bin, const Rational& size) override;

 private:
  std::vector<std::optional<std::size_t>> open_;  // indexed by class 1..k
  int pending_class_ = 0;
};

/// Bin states of Thin-and-Fat.
struct TFState {
  std::vector<std::pair<std::size_t, std::size_t>> paired;
  std::set<std::size_t> fat;   // exactly k-1 items
  std::set<std::size_t> thin;  // 1..k-2 items
};

/// Thin-and-Fat. Ties (several qualifying fat or thin bins) go to the
/// minimum index.
class ThinAndFat final : public OnlineAlgorithm {
 public:
  explicit ThinAndFat(int k) : OnlineAlgorithm(k) {}
  std::string_view name() const override { return "tf"; }

  const TFState& state() const { return state_; }
  /// Step (1..5) that packed the most recent item.
  int last_step() const { return last_step_; }

 protected:
  std::size_t choose(const Rational& size) override;
  void placed(std::size_t bin, const Rational& size) override;

 private:
  void pair_bins(std::size_t a, std::size_t b);
  void classify_unpaired(std::size_t bin);

  TFState state_;
  std::vector<bool> is_paired_;
  int last_step_ = 0;
  std::optional<std::size_t> pending_partner_;
};

/// First Fit variant for k = 5 that only adds a fifth item to a bin if the
/// bin's level ends up at least 1/2.
class Alg5 final : public OnlineAlgorithm {
 public:
  explicit Alg5(int k);
  std::string_view name() const override { return "alg5"; }

 protected:
  std::size_t choose(const Rational& size) override;
  void placed(std::size_t bin, const Rational& size) override;

 private:
  std::vector<std::size_t> open_;
};

/// Name tokens: ff, harmonic, tf, alg5. Throws ParameterError for unknown names.
std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view name, int k);

const std::vector<std::string>& algorithm_names();

struct RunResult {
  Packing packing;
  PlacementTrace trace;
};

RunResult run_online(OnlineAlgorithm& algorithm, const Instance& instance);
RunResult run_algorithm(std::string_view name, const Instance& instance);

/// Thin-and-Fat state invariants; empty when all hold.
std::vector<std::string> check_tf_invariants(const ThinAndFat& tf);

/// Alg5 invariants: every 5-bin has level >= 1/2 and at most one bin with
/// 2 or 3 items has level <= 2/3. Empty when all hold.
std::vector<std::string> check_alg5_invariants(const Packing& packing);

}  // namespace cardbin

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cardbin/algorithms.hpp"
#include "cardbin/core.hpp"

namespace cardbin {

/// An item-issuing strategy that watches the public packing of an online
/// algorithm. `next` gets the packing of everything issued so far and returns
/// the next size, or nullopt to stop. After stopping, `certificate_groups`
/// packs exactly the issued items.
class AdaptiveAdversary {
 public:
  explicit AdaptiveAdversary(int k) : k_(k) {}
  virtual ~AdaptiveAdversary() = default;

  virtual std::string_view name() const = 0;
  virtual std::optional<Rational> next(const Packing& packing) = 0;
  virtual std::vector<std::vector<std::size_t>> certificate_groups() const = 0;
  /// Ratio the strategy is designed to force.
  virtual Rational target_ratio() const = 0;

  int k() const { return k_; }
  const std::vector<Rational>& issued() const { return issued_; }
  bool stopped() const { return stopped_; }

 protected:
  std::optional<Rational> issue(const Rational& size);
  std::optional<Rational> stop();
  /// Number of distinct bins holding the given issued items.
  static std::size_t distinct_bins(const Packing& packing, const std::vector<std::size_t>& items);

  std::vector<Rational> issued_;

 private:
  int k_;
  bool stopped_ = false;
};

/// k >= 4: k tiny items, two of 1/3+eps, then either one 2/3 item or two
/// 1/2+eps items depending on whether the 1/3+eps items were separated.
class AbsK4Plus final : public AdaptiveAdversary {
 public:
  /// Requires 0 < eps < 1/(3k) and (ceil(k/2)+2)*eps <= 1/6; the second
  /// condition keeps the two-bin certificate of the "together" branch feasible.
  AbsK4Plus(int k, Rational eps);

  std::string_view name() const override { return "abs-k4plus"; }
  std::optional<Rational> next(const Packing& packing) override;
  std::vector<std::vector<std::size_t>> certificate_groups() const override;
  Rational target_ratio() const override { return Rational(2); }

  static bool valid_eps(int k, const Rational& eps);
  static Rational default_eps(int k);

 private:
  enum class Branch { pending, split_tiny, separated, together };
  Rational eps_;
  Branch branch_ = Branch::pending;
};

/// k = 3: the branching strategy forcing 7/4 (or 2 on the side branches).
class AbsK3 final : public AdaptiveAdversary {
 public:
  /// Requires 0 < eps < 1/24.
  explicit AbsK3(Rational eps);

  std::string_view name() const override { return "abs-k3"; }
  std::optional<Rational> next(const Packing& packing) override;
  std::vector<std::vector<std::size_t>> certificate_groups() const override;
  Rational target_ratio() const override { return Rational(7, 4); }

  static bool valid_eps(const Rational& eps);
  static Rational default_eps() { return Rational(1, 100); }

 private:
  enum class Branch { pending, split_tiny, separated, second_separated, all_together };
  Rational eps_;
  Branch branch_ = Branch::pending;
};

struct DuelResult {
  std::string adversary;
  std::string algorithm;
  Instance instance;
  Packing algorithm_packing;
  Certificate certificate;
  Rational ratio;  // algorithm bins / certificate bins
};

/// Plays the adversary against the algorithm until the adversary stops.
DuelResult run_duel(AdaptiveAdversary& adversary, OnlineAlgorithm& algorithm);

struct BatchStop {
  int stop = 0;
  std::size_t algorithm_bins = 0;
  std::size_t certificate_bins = 0;
  Rational ratio;
};

struct BatchDuelResult {
  std::string algorithm;
  int k = 0;
  long n = 0;
  std::vector<BatchStop> stops;  // one per prefix L_1..L_4
  Rational max_ratio;
};

/// Feeds the full four-batch input to the algorithm and reads off its bin
/// count after each batch. Since the algorithm is online, the count after
/// batch i is what it would use on the prefix alone. The max over stop
/// points is a lower bound on this algorithm's ratio; it may be below
/// lb_value(k).
BatchDuelResult run_batch_duel(std::string_view algorithm, int k, long n, const Rational& delta);

}  // namespace cardbin

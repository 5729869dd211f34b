#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cardbin/core.hpp"

namespace cardbin {

/// alpha: item of an FF k-bin. For k <= 8 every other item is additional.
/// For k >= 9 the others are split by their certificate bin: with one or
/// two non-alpha items the larger is gamma1 and the other gamma2; with three
/// or more they are all phi.
enum class ItemRole { alpha, additional, gamma1, gamma2, phi };

const char* to_string(ItemRole role);

/// Weight of one item under the regime for k. Sizes are compared exactly
/// against the half-open class intervals. k = 3 weights depend on FF bin
/// counts rather than sizes and are only available via verify_k3_case1, so
/// k = 3 throws UnsupportedVerification. Throws ParameterError for sizes
/// outside (0, 1] or a role the regime does not use.
Rational item_weight(int k, ItemRole role, const Rational& size);

/// Bonus of an item of size a in (0, 1/2]: additional items for k in 6..8,
/// phi items for k >= 9.
Rational bonus(int k, const Rational& size);

/// Upper bound on the weight of one certificate bin.
Rational opt_bin_bound(int k);

/// Total weight is at least FF bins minus this.
Rational ff_total_slack(int k);

/// Asymptotic ratio of FF: 5/2-2/k (k <= 4), 8/3-8/(3k) (4..10), 27/10-3/k (k >= 10).
Rational ff_asymptote(int k);

/// Throws InconsistentInput unless both packings are feasible packings of
/// the instance.
std::vector<ItemRole> assign_roles(const Instance& instance, const Packing& ff_packing, const Packing& certificate);

struct BinWeight {
  std::size_t bin = 0;
  Rational weight;
};

struct OptBinsReport {
  Rational bound;
  Rational max_weight;
  Rational total_weight;
  std::vector<BinWeight> violations;
  bool ok() const { return violations.empty(); }
};

/// Every certificate bin must weigh at most opt_bin_bound(k).
OptBinsReport verify_opt_bins(const Instance& instance, const Packing& certificate, const std::vector<ItemRole>& roles);

struct FfTotalReport {
  std::size_t ff_bins = 0;
  Rational slack;
  Rational total_weight;
  bool ok = false;
};

/// Replays FF (InconsistentInput on mismatch), then checks
/// total weight >= FF bins - ff_total_slack(k).
FfTotalReport verify_ff_total(const Instance& instance, const Packing& ff_packing, const std::vector<ItemRole>& roles);

enum class CheckStatus { pass, fail, not_applicable };

const char* to_string(CheckStatus status);

struct K3Report {
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<BinWeight> violations;
};

/// k = 3 with as many FF 1-bins as certificate bins: an item of an FF i-bin
/// weighs 1/i and every certificate bin must weigh at most 11/6. Other
/// inputs are reported not-applicable.
K3Report verify_k3_case1(const Instance& instance, const Packing& ff_packing, const Packing& certificate);

struct RatioRow {
  int k = 0;
  std::string family;
  long ell = 0;
  std::size_t ff_bins = 0;
  std::size_t certificate_bins = 0;
  Rational ratio;
  Rational asymptote;
};

/// One row per k: FF on the killer family for k, against its certificate.
/// With `ell`, each k uses the smallest valid l >= ell.
std::vector<RatioRow> ratio_table(int k_from, int k_to, std::optional<long> ell = std::nullopt);

}  // namespace cardbin

#include "cardbin/analysis.hpp"

#include <utility>

#include "cardbin/algorithms.hpp"
#include "cardbin/ff_structure.hpp"
#include "cardbin/generators.hpp"

namespace cardbin {

namespace {

const Rational kHalf(1, 2);

Rational gamma2_weight(int k) {
  if (k == 9) return Rational(16, 27);
  if (k <= 19) return Rational(7, 10) - Rational(1, k);
  return Rational(13, 20);
}

void require_regime_role(int k, ItemRole role) {
  const bool split_regime = k >= 9;
  const bool split_role = role == ItemRole::gamma1 || role == ItemRole::gamma2 || role == ItemRole::phi;
  if (role != ItemRole::alpha && split_regime != split_role) {
    throw ParameterError(std::string("role ") + to_string(role) + " is not used when k = " + std::to_string(k));
  }
}

void require_feasible(const Instance& instance, const Packing& packing, const char* what) {
  const auto report = validate_packing(instance, packing);
  if (!report.ok) {
    throw InconsistentInput(std::string(what) + " is not a feasible packing of the instance: " +
                            report.violations.front().message);
  }
}

std::vector<std::size_t> ff_bin_count_per_item(const Instance& instance, const Packing& ff_packing) {
  std::vector<std::size_t> out(instance.size(), 0);
  for (const auto& bin : ff_packing.bins()) {
    for (std::size_t item : bin.items) out[item] = bin.count();
  }
  return out;
}

}  // namespace

const char* to_string(ItemRole role) {
  switch (role) {
    case ItemRole::alpha:
      return "alpha";
    case ItemRole::additional:
      return "additional";
    case ItemRole::gamma1:
      return "gamma1";
    case ItemRole::gamma2:
      return "gamma2";
    case ItemRole::phi:
      return "phi";
  }
  return "?";
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not-applicable";
  }
  return "?";
}

Rational bonus(int k, const Rational& a) {
  if (a.sign() <= 0 || a > kHalf) throw ParameterError("bonus is defined on (0, 1/2], got " + a.str());
  if (a <= Rational(1, 6)) return Rational(0);
  if (k >= 6 && k <= 8) {
    const Rational slope(2L * (2 * k - 11), 3L * k);
    if (a <= Rational(1, 4)) return slope * a + Rational(7 - k, 3L * k);
    if (a <= Rational(1, 3)) return slope * a + Rational(10 - k, 3L * k);
    return Rational(2, k);
  }
  if (k == 9) {
    if (a <= Rational(1, 5)) return Rational(32, 27) * a - Rational(5, 27);
    if (a <= Rational(1, 4)) return Rational(-28, 27) * a + Rational(7, 27);
    if (a <= Rational(3, 10)) return Rational(-28, 27) * a + Rational(10, 27);
    if (a <= Rational(1, 3)) return Rational(32, 27) * a - Rational(8, 27);
    return Rational(1, 9);
  }
  if (k >= 20) {
    if (a <= Rational(1, 3)) return Rational(3, 5) * a - Rational(1, 10);
    return Rational(1, 10);
  }
  if (k >= 10) {
    const Rational slope = Rational(8, 5) - Rational(20, k);
    if (a <= Rational(1, 5)) return Rational(3, 5) * a - Rational(1, 10);
    if (a <= Rational(1, 4)) return slope * a - Rational(3, 10) + Rational(4, k);
    if (a <= Rational(3, 10)) return slope * a - Rational(2, 5) + Rational(6, k);
    if (a <= Rational(1, 3)) return Rational(3, 5) * a - Rational(1, 10);
    return Rational(1, 10);
  }
  throw ParameterError("no bonus function for k = " + std::to_string(k));
}

Rational item_weight(int k, ItemRole role, const Rational& a) {
  if (a.sign() <= 0 || a > Rational(1)) throw ParameterError("item size must be in (0, 1], got " + a.str());
  if (k < 2) throw ParameterError("k must be >= 2");
  if (k == 3) throw UnsupportedVerification("k = 3 weights depend on the FF packing; use verify_k3_case1");
  require_regime_role(k, role);

  if (k == 2) return role == ItemRole::alpha ? kHalf : Rational(1);
  if (k == 4) {
    if (a > kHalf) return Rational(1);
    if (a > Rational(1, 4)) return kHalf;
    return Rational(1, 4);
  }
  if (role == ItemRole::alpha) return Rational(1, k);
  if (k == 5) {
    if (a <= Rational(1, 6)) return Rational(1, 5);
    if (a <= Rational(1, 4)) return Rational(4, 15);
    if (a <= Rational(1, 3)) return Rational(7, 15);
    if (a <= kHalf) return Rational(8, 15);
    return Rational(1);
  }
  if (k <= 8) {
    if (a > kHalf) return Rational(1);
    return Rational(1, k) + Rational(2L * (2 * k - 11), 3L * k) * a + bonus(k, a);
  }
  switch (role) {
    case ItemRole::gamma1:
      return Rational(1);
    case ItemRole::gamma2:
      return gamma2_weight(k);
    default:
      break;
  }
  if (a > kHalf) return Rational(1);
  const Rational scale = k == 9 ? Rational(32, 27) : Rational(6, 5);
  return scale * a + bonus(k, a);
}

Rational opt_bin_bound(int k) {
  if (k < 2) throw ParameterError("k must be >= 2");
  switch (k) {
    case 2:
      return Rational(3, 2);
    case 3:
      return Rational(11, 6);
    case 4:
      return Rational(2);
    case 5:
      return Rational(32, 15);
    case 9:
      return Rational(64, 27);
    default:
      break;
  }
  if (k <= 8) return Rational(8L * (k - 1), 3L * k);
  return Rational(27L * k - 30, 10L * k);
}

Rational ff_total_slack(int k) {
  if (k < 2) throw ParameterError("k must be >= 2");
  if (k <= 3) return Rational(0);
  if (k == 4) return Rational(3, 4);
  if (k == 5) return Rational(4);
  if (k <= 8) return Rational(8);
  if (k == 9) return Rational(7);
  return Rational(5);
}

Rational ff_asymptote(int k) {
  if (k < 2) throw ParameterError("k must be >= 2");
  if (k <= 4) return Rational(5, 2) - Rational(2, k);
  if (k <= 10) return Rational(8L * (k - 1), 3L * k);
  return Rational(27, 10) - Rational(3, k);
}

std::vector<ItemRole> assign_roles(const Instance& instance, const Packing& ff_packing, const Packing& certificate) {
  require_feasible(instance, ff_packing, "FF packing");
  require_feasible(instance, certificate, "certificate");
  const int k = instance.k();
  const auto counts = ff_bin_count_per_item(instance, ff_packing);

  std::vector<ItemRole> roles(instance.size(), ItemRole::additional);
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (counts[i] == static_cast<std::size_t>(k)) roles[i] = ItemRole::alpha;
  }
  if (k < 9) return roles;

  for (const auto& bin : certificate.bins()) {
    std::vector<std::size_t> extra;
    for (std::size_t item : bin.items) {
      if (roles[item] != ItemRole::alpha) extra.push_back(item);
    }
    if (extra.size() >= 3) {
      for (std::size_t item : extra) roles[item] = ItemRole::phi;
    } else if (extra.size() == 1) {
      roles[extra[0]] = ItemRole::gamma1;
    } else if (extra.size() == 2) {
      auto [x, y] = std::pair(extra[0], extra[1]);
      // larger first; equal sizes go to the earlier arrival
      if (instance[y] > instance[x] || (instance[y] == instance[x] && y < x)) std::swap(x, y);
      roles[x] = ItemRole::gamma1;
      roles[y] = ItemRole::gamma2;
    }
  }
  return roles;
}

OptBinsReport verify_opt_bins(const Instance& instance, const Packing& certificate, const std::vector<ItemRole>& roles) {
  const int k = instance.k();
  if (k == 3) throw UnsupportedVerification("k = 3 outside Case 1 is not instance-checkable; use verify_k3_case1");
  if (roles.size() != instance.size()) throw InconsistentInput("one role per item is required");
  require_feasible(instance, certificate, "certificate");

  OptBinsReport report;
  report.bound = opt_bin_bound(k);
  for (std::size_t b = 0; b < certificate.bin_count(); ++b) {
    Rational weight;
    for (std::size_t item : certificate[b].items) weight += item_weight(k, roles[item], instance[item]);
    if (weight > report.max_weight) report.max_weight = weight;
    report.total_weight += weight;
    if (weight > report.bound) report.violations.push_back({b, weight});
  }
  return report;
}

FfTotalReport verify_ff_total(const Instance& instance, const Packing& ff_packing, const std::vector<ItemRole>& roles) {
  const int k = instance.k();
  if (k == 3) throw UnsupportedVerification("k = 3 weights are only defined for Case 1; use verify_k3_case1");
  if (roles.size() != instance.size()) throw InconsistentInput("one role per item is required");
  require_ff_output(instance, ff_packing);

  FfTotalReport report;
  report.ff_bins = ff_packing.bin_count();
  report.slack = ff_total_slack(k);
  for (std::size_t i = 0; i < instance.size(); ++i) report.total_weight += item_weight(k, roles[i], instance[i]);
  report.ok = report.total_weight >= Rational(static_cast<long>(report.ff_bins)) - report.slack;
  return report;
}

K3Report verify_k3_case1(const Instance& instance, const Packing& ff_packing, const Packing& certificate) {
  if (instance.k() != 3) throw ParameterError("verify_k3_case1 needs k = 3");
  require_ff_output(instance, ff_packing);
  require_feasible(instance, certificate, "certificate");

  K3Report report;
  std::size_t one_bins = 0;
  for (const auto& bin : ff_packing.bins()) one_bins += bin.count() == 1 ? 1 : 0;
  if (one_bins != certificate.bin_count()) return report;

  const auto counts = ff_bin_count_per_item(instance, ff_packing);
  const Rational bound(11, 6);
  for (std::size_t b = 0; b < certificate.bin_count(); ++b) {
    Rational weight;
    for (std::size_t item : certificate[b].items) weight += Rational(1, static_cast<long>(counts[item]));
    if (weight > bound) report.violations.push_back({b, weight});
  }
  report.status = report.violations.empty() ? CheckStatus::pass : CheckStatus::fail;
  return report;
}

std::vector<RatioRow> ratio_table(int k_from, int k_to, std::optional<long> ell) {
  if (k_from < 2 || k_to < k_from) throw ParameterError("table needs 2 <= k-from <= k-to");
  std::vector<RatioRow> rows;
  for (int k = k_from; k <= k_to; ++k) {
    RatioRow row;
    row.k = k;
    row.family = killer_family_for(k);
    row.ell = killer_ell(k, ell);
    const GeneratedFamily family = gen_ff_killer(k, row.ell);
    FirstFit ff(k);
    row.ff_bins = run_online(ff, family.instance).packing.bin_count();
    row.certificate_bins = family.certificate.claimed_count;
    row.ratio = Rational(static_cast<long>(row.ff_bins), static_cast<long>(row.certificate_bins));
    row.asymptote = ff_asymptote(k);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cardbin

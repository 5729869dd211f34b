#include "cardbin/core.hpp"

#include <algorithm>
#include <limits>

namespace cardbin {

Instance::Instance(int k, std::vector<Rational> sizes) : k_(k), sizes_(std::move(sizes)) {
  if (k_ < 2) throw ParameterError("cardinality bound k must be >= 2, got " + std::to_string(k_));
  const Rational one(1);
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i].sign() <= 0) {
      throw ParameterError("item " + std::to_string(i) + " has non-positive size " + sizes_[i].str());
    }
    if (sizes_[i] > one) {
      throw ParameterError("item " + std::to_string(i) + " has size " + sizes_[i].str() + " > 1");
    }
  }
}

Rational Instance::total_size() const {
  Rational total;
  for (const auto& s : sizes_) total += s;
  return total;
}

Packing Packing::from_groups(const Instance& instance,
                             const std::vector<std::vector<std::size_t>>& groups) {
  Packing packing;
  for (const auto& group : groups) {
    const std::size_t b = packing.open_bin();
    for (std::size_t item : group) {
      if (item >= instance.size()) {
        throw MalformedPacking("bin " + std::to_string(b) + " references item " +
                               std::to_string(item) + " but the instance has " +
                               std::to_string(instance.size()) + " items");
      }
      packing.add(b, item, instance[item]);
    }
  }
  return packing;
}

std::size_t Packing::open_bin() {
  bins_.emplace_back();
  return bins_.size() - 1;
}

void Packing::add(std::size_t bin, std::size_t item, const Rational& size) {
  Bin& target = bins_.at(bin);
  target.items.push_back(item);
  target.level += size;
}

std::vector<std::vector<std::size_t>> Packing::groups() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(bins_.size());
  for (const auto& bin : bins_) out.push_back(bin.items);
  return out;
}

bool Packing::same_bins(const Packing& other) const {
  if (bins_.size() != other.bins_.size()) return false;
  for (std::size_t b = 0; b < bins_.size(); ++b) {
    auto lhs = bins_[b].items;
    auto rhs = other.bins_[b].items;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return false;
  }
  return true;
}

const char* to_string(Claim claim) {
  return claim == Claim::optimal ? "optimal" : "feasible-upper-bound";
}

Certificate make_certificate(const Instance& instance, Packing packing, Claim claim) {
  const auto report = validate_packing(instance, packing);
  if (!report.ok) {
    throw InconsistentInput("certificate packing is infeasible: " + report.violations.front().message);
  }
  Certificate cert;
  cert.claimed_count = packing.bin_count();
  cert.packing = std::move(packing);
  cert.claim = claim;
  return cert;
}

ValidationReport validate_packing(const Instance& instance, const Packing& packing) {
  constexpr std::size_t kNoBin = std::numeric_limits<std::size_t>::max();
  ValidationReport report;
  std::vector<int> seen(instance.size(), 0);
  const Rational one(1);
  const auto k = static_cast<std::size_t>(instance.k());

  for (std::size_t b = 0; b < packing.bin_count(); ++b) {
    const Bin& bin = packing[b];
    Rational level;
    for (std::size_t item : bin.items) {
      if (item >= instance.size()) {
        throw MalformedPacking("bin " + std::to_string(b) + " references item " +
                               std::to_string(item) + " but the instance has " +
                               std::to_string(instance.size()) + " items");
      }
      level += instance[item];
      ++seen[item];
    }
    if (bin.items.empty()) {
      report.violations.push_back({b, "empty", "bin " + std::to_string(b) + ": empty bin"});
    }
    if (bin.count() > k) {
      report.violations.push_back({b, "cardinality",
                                   "bin " + std::to_string(b) + ": count " + std::to_string(bin.count()) +
                                       " > k=" + std::to_string(k)});
    }
    if (level > one) {
      report.violations.push_back({b, "size", "bin " + std::to_string(b) + ": level " + level.str() + " > 1"});
    }
    if (level != bin.level) {
      report.violations.push_back({b, "bookkeeping",
                                   "bin " + std::to_string(b) + ": stored level " + bin.level.str() +
                                       " != member sum " + level.str()});
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] == 0) {
      report.violations.push_back({kNoBin, "partition", "item " + std::to_string(i) + " is not packed"});
    } else if (seen[i] > 1) {
      report.violations.push_back({kNoBin, "partition",
                                   "item " + std::to_string(i) + " is packed " + std::to_string(seen[i]) + " times"});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

std::int64_t trivial_lower_bound(std::span<const Rational> sizes, int k) {
  if (sizes.empty()) return 0;
  Rational total;
  for (const auto& s : sizes) total += s;
  const auto n = static_cast<std::int64_t>(sizes.size());
  const std::int64_t by_count = (n + k - 1) / k;
  return std::max(ceil_to_int(total), by_count);
}

std::int64_t trivial_lower_bound(const Instance& instance) {
  return trivial_lower_bound(std::span<const Rational>(instance.sizes()), instance.k());
}

}  // namespace cardbin

#include "cardbin/ff_structure.hpp"

namespace cardbin {

void require_ff_output(const Instance& instance, const Packing& ff_packing) {
  FirstFit ff(instance.k());
  const auto replay = run_online(ff, instance);
  if (!replay.packing.same_bins(ff_packing)) {
    throw InconsistentInput("packing is not the First Fit output for this instance");
  }
}

std::vector<std::string> check_ff_minimality(const Instance& instance, const PlacementTrace& trace) {
  std::vector<std::string> out;
  if (trace.size() != instance.size()) {
    out.push_back("trace covers " + std::to_string(trace.size()) + " of " + std::to_string(instance.size()) + " items");
    return out;
  }
  const auto k = static_cast<std::size_t>(instance.k());
  const Rational one(1);
  std::vector<Rational> level;
  std::vector<std::size_t> count;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Rational& s = instance[i];
    const std::size_t b = trace[i];
    if (b > level.size()) {
      out.push_back("item " + std::to_string(i) + " placed into bin " + std::to_string(b) + " which does not exist yet");
      return out;
    }
    for (std::size_t earlier = 0; earlier < b; ++earlier) {
      if (count[earlier] < k && level[earlier] + s <= one) {
        out.push_back("item " + std::to_string(i) + " placed into bin " + std::to_string(b) +
                      " but fits into earlier bin " + std::to_string(earlier));
        break;
      }
    }
    if (b == level.size()) {
      level.emplace_back();
      count.push_back(0);
    } else if (count[b] >= k || level[b] + s > one) {
      out.push_back("item " + std::to_string(i) + " does not fit into bin " + std::to_string(b));
    }
    level[b] += s;
    ++count[b];
  }
  return out;
}

ReorderedInput reorder_for_ff(const Instance& instance, const Packing& ff_packing) {
  require_ff_output(instance, ff_packing);
  const auto k = static_cast<std::size_t>(instance.k());
  std::vector<std::size_t> bin_count_of(instance.size(), 0);
  for (const auto& bin : ff_packing.bins()) {
    for (std::size_t item : bin.items) bin_count_of[item] = bin.count();
  }
  ReorderedInput out{instance, {}};
  out.order.reserve(instance.size());
  auto take = [&](auto&& pred) {
    for (std::size_t i = 0; i < instance.size(); ++i) {
      if (pred(bin_count_of[i])) out.order.push_back(i);
    }
  };
  take([&](std::size_t c) { return c == k; });
  take([&](std::size_t c) { return c >= 2 && c < k; });
  take([&](std::size_t c) { return c == 1; });

  std::vector<Rational> sizes;
  sizes.reserve(instance.size());
  for (std::size_t i : out.order) sizes.push_back(instance[i]);
  out.instance = Instance(instance.k(), std::move(sizes));
  return out;
}

StructureReport check_ff_structure(const Instance& instance, const Packing& ff_packing,
                                   const Packing& certificate) {
  require_ff_output(instance, ff_packing);
  const auto cert_report = validate_packing(instance, certificate);
  if (!cert_report.ok) throw InconsistentInput("certificate is infeasible: " + cert_report.violations.front().message);

  StructureReport report;
  const auto k = static_cast<std::size_t>(instance.k());
  std::vector<bool> in_one_bin(instance.size(), false);
  for (const auto& bin : ff_packing.bins()) {
    if (bin.count() == 1) in_one_bin[bin.items.front()] = true;
  }
  for (std::size_t b = 0; b < certificate.bin_count(); ++b) {
    std::size_t ones = 0;
    for (std::size_t item : certificate[b].items) ones += in_one_bin[item] ? 1 : 0;
    if (ones > 1) {
      report.violations.push_back("certificate bin " + std::to_string(b) + " holds " + std::to_string(ones) +
                                  " items from FF 1-bins");
    }
  }
  for (std::size_t j = 1; j < k; ++j) {
    const Rational threshold(static_cast<long>(j), static_cast<long>(j + 1));
    std::size_t low_exact = 0;
    std::size_t low_plus = 0;
    for (const auto& bin : ff_packing.bins()) {
      if (bin.level > threshold) continue;
      if (bin.count() == j) ++low_exact;
      if (bin.count() >= j && bin.count() < k) ++low_plus;
    }
    if (low_exact > 1) {
      report.violations.push_back(std::to_string(low_exact) + " FF " + std::to_string(j) + "-bins have level <= " +
                                  threshold.str());
    }
    if (low_plus > 1) {
      report.violations.push_back(std::to_string(low_plus) + " FF " + std::to_string(j) + "+-bins have level <= " +
                                  threshold.str());
    }
  }
  return report;
}

}  // namespace cardbin

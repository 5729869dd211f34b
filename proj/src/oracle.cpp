#include "cardbin/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "cardbin/algorithms.hpp"

namespace cardbin {

namespace {

std::vector<std::size_t> decreasing_order(const Instance& instance) {
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return instance[a] > instance[b]; });
  return order;
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, std::uint64_t budget)
      : instance_(instance),
        k_(static_cast<std::size_t>(instance.k())),
        budget_(budget),
        order_(decreasing_order(instance)),
        suffix_size_(instance.size() + 1),
        placement_(instance.size(), 0) {
    for (std::size_t pos = instance.size(); pos-- > 0;) {
      suffix_size_[pos] = suffix_size_[pos + 1] + instance[order_[pos]];
    }
  }

  OptResult solve() {
    Certificate upper = best_known_upper(instance_);
    best_count_ = upper.packing.bin_count();
    global_lower_ = static_cast<std::size_t>(trivial_lower_bound(instance_));
    if (best_count_ > global_lower_) search(0);

    OptResult result;
    result.nodes = nodes_;
    result.exact = !aborted_;
    if (best_assignment_.empty()) {
      result.certificate = std::move(upper);
    } else {
      std::vector<std::vector<std::size_t>> groups(best_count_);
      for (std::size_t pos = 0; pos < order_.size(); ++pos) groups[best_assignment_[pos]].push_back(order_[pos]);
      for (auto& g : groups) std::sort(g.begin(), g.end());
      result.certificate = make_certificate(instance_, Packing::from_groups(instance_, groups), Claim::feasible_upper_bound);
    }
    if (result.exact) result.certificate.claim = Claim::optimal;
    return result;
  }

 private:
  struct SearchBin {
    Rational residual;
    std::size_t count = 0;
  };

  bool lower_bound_reaches_incumbent(std::size_t pos) const {
    const std::size_t used = bins_.size();
    if (std::max(used, global_lower_) >= best_count_) return true;
    Rational free_space;
    std::size_t free_slots = 0;
    for (const auto& bin : bins_) {
      if (bin.count < k_) {
        free_space += bin.residual;
        free_slots += k_ - bin.count;
      }
    }
    const std::size_t remaining = order_.size() - pos;
    std::size_t by_count = used;
    if (remaining > free_slots) by_count += (remaining - free_slots + k_ - 1) / k_;
    std::size_t by_size = used;
    const Rational overflow = suffix_size_[pos] - free_space;
    if (overflow.sign() > 0) by_size += static_cast<std::size_t>(ceil_to_int(overflow));
    return std::max(by_count, by_size) >= best_count_;
  }

  void search(std::size_t pos) {
    if (aborted_ || best_count_ == global_lower_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (pos == order_.size()) {
      best_count_ = bins_.size();
      best_assignment_ = placement_;
      return;
    }
    if (lower_bound_reaches_incumbent(pos)) return;

    const Rational& size = instance_[order_[pos]];
    // identical consecutive items go to non-decreasing bin indices
    std::size_t first = 0;
    if (pos > 0 && instance_[order_[pos - 1]] == size) first = placement_[pos - 1];

    for (std::size_t b = first; b < bins_.size(); ++b) {
      // indexed access throughout: deeper levels may grow bins_
      if (bins_[b].count >= k_ || size > bins_[b].residual) continue;
      bool duplicate = false;
      for (std::size_t e = first; e < b && !duplicate; ++e) {
        duplicate = bins_[e].count == bins_[b].count && bins_[e].residual == bins_[b].residual;
      }
      if (duplicate) continue;
      bins_[b].residual -= size;
      ++bins_[b].count;
      placement_[pos] = b;
      search(pos + 1);
      bins_[b].residual += size;
      --bins_[b].count;
      if (aborted_ || best_count_ == global_lower_) return;
    }
    if (bins_.size() + 1 < best_count_) {
      bins_.push_back({Rational(1) - size, 1});
      placement_[pos] = bins_.size() - 1;
      search(pos + 1);
      bins_.pop_back();
    }
  }

  const Instance& instance_;
  std::size_t k_;
  std::uint64_t budget_;
  std::vector<std::size_t> order_;
  std::vector<Rational> suffix_size_;
  std::vector<std::size_t> placement_;
  std::vector<SearchBin> bins_;
  std::vector<std::size_t> best_assignment_;
  std::size_t best_count_ = 0;
  std::size_t global_lower_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

OptResult exact_opt(const Instance& instance, std::uint64_t node_budget) {
  if (instance.empty()) throw ParameterError("exact_opt needs at least one item");
  return BranchAndBound(instance, node_budget).solve();
}

Certificate best_known_upper(const Instance& instance) {
  const auto order = decreasing_order(instance);
  FirstFit ff(instance.k());
  for (std::size_t i : order) ff.place(instance[i]);
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& bin : ff.packing().bins()) {
    auto& group = groups.emplace_back();
    for (std::size_t pos : bin.items) group.push_back(order[pos]);
  }
  return make_certificate(instance, Packing::from_groups(instance, groups), Claim::feasible_upper_bound);
}

}  // namespace cardbin

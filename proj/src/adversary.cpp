#include "cardbin/adversary.hpp"

#include <set>

#include "cardbin/generators.hpp"

namespace cardbin {

std::optional<Rational> AdaptiveAdversary::issue(const Rational& size) {
  issued_.push_back(size);
  return size;
}

std::optional<Rational> AdaptiveAdversary::stop() {
  stopped_ = true;
  return std::nullopt;
}

std::size_t AdaptiveAdversary::distinct_bins(const Packing& packing, const std::vector<std::size_t>& items) {
  std::set<std::size_t> wanted(items.begin(), items.end());
  std::size_t found = 0;
  for (const auto& bin : packing.bins()) {
    for (std::size_t item : bin.items) {
      if (wanted.count(item) != 0) {
        ++found;
        break;
      }
    }
  }
  return found;
}

// ---------------------------------------------------------------- k >= 4

bool AbsK4Plus::valid_eps(int k, const Rational& eps) {
  if (k < 4 || eps.sign() <= 0 || eps >= Rational(1, 3L * k)) return false;
  return Rational((k + 1) / 2 + 2) * eps <= Rational(1, 6);
}

Rational AbsK4Plus::default_eps(int k) {
  const Rational preferred(1, 100);
  if (valid_eps(k, preferred)) return preferred;
  return Rational(1, 6L * k + 36);
}

AbsK4Plus::AbsK4Plus(int k, Rational eps) : AdaptiveAdversary(k), eps_(std::move(eps)) {
  if (k < 4) throw ParameterError("abs-k4plus needs k >= 4, got k = " + std::to_string(k));
  if (!valid_eps(k, eps_)) {
    throw ParameterError("abs-k4plus needs 0 < eps < 1/(3k) and (ceil(k/2)+2)*eps <= 1/6, got eps = " + eps_.str());
  }
}

std::optional<Rational> AbsK4Plus::next(const Packing& packing) {
  if (stopped()) return std::nullopt;
  const auto k = static_cast<std::size_t>(this->k());
  const std::size_t n = issued_.size();
  if (n < k) return issue(eps_);
  if (n == k) {
    if (packing.bin_count() >= 2) {
      branch_ = Branch::split_tiny;
      return stop();
    }
    return issue(Rational(1, 3) + eps_);
  }
  if (n == k + 1) return issue(Rational(1, 3) + eps_);
  if (n == k + 2) {
    if (distinct_bins(packing, {k, k + 1}) == 2) {
      branch_ = Branch::separated;
      return issue(Rational(2, 3));
    }
    branch_ = Branch::together;
    return issue(Rational(1, 2) + eps_);
  }
  if (n == k + 3 && branch_ == Branch::together) return issue(Rational(1, 2) + eps_);
  return stop();
}

std::vector<std::vector<std::size_t>> AbsK4Plus::certificate_groups() const {
  const auto k = static_cast<std::size_t>(this->k());
  std::vector<std::vector<std::size_t>> groups;
  switch (branch_) {
    case Branch::pending:
      throw std::logic_error("abs-k4plus: certificate requested before the game ended");
    case Branch::split_tiny: {
      auto& g = groups.emplace_back();
      for (std::size_t i = 0; i < k; ++i) g.push_back(i);
      break;
    }
    case Branch::separated: {
      auto& big = groups.emplace_back(std::vector<std::size_t>{k + 2});
      for (std::size_t i = 0; i + 1 < k; ++i) big.push_back(i);
      groups.push_back({k, k + 1, k - 1});
      break;
    }
    case Branch::together: {
      const std::size_t half = k / 2;
      auto& first = groups.emplace_back(std::vector<std::size_t>{k + 2, k});
      for (std::size_t i = 0; i < half; ++i) first.push_back(i);
      auto& second = groups.emplace_back(std::vector<std::size_t>{k + 3, k + 1});
      for (std::size_t i = half; i < k; ++i) second.push_back(i);
      break;
    }
  }
  return groups;
}

// ---------------------------------------------------------------- k = 3

bool AbsK3::valid_eps(const Rational& eps) { return eps.sign() > 0 && eps < Rational(1, 24); }

AbsK3::AbsK3(Rational eps) : AdaptiveAdversary(3), eps_(std::move(eps)) {
  if (!valid_eps(eps_)) throw ParameterError("abs-k3 needs 0 < eps < 1/24, got eps = " + eps_.str());
}

std::optional<Rational> AbsK3::next(const Packing& packing) {
  if (stopped()) return std::nullopt;
  const std::size_t n = issued_.size();
  if (n < 3) return issue(eps_);
  if (n == 3) {
    if (packing.bin_count() >= 2) {
      branch_ = Branch::split_tiny;
      return stop();
    }
    return issue(Rational(1, 3) + eps_);
  }
  if (n == 4) return issue(Rational(1, 3) + eps_);
  if (n == 5) {
    if (distinct_bins(packing, {3, 4}) == 2) {
      branch_ = Branch::separated;
      return issue(Rational(2, 3));
    }
    return issue(Rational(1, 3) + Rational(3) * eps_);
  }
  if (branch_ == Branch::separated) return stop();
  if (n == 6) return issue(Rational(1, 3) + Rational(3) * eps_);
  if (n == 7) {
    if (distinct_bins(packing, {5, 6}) == 2) {
      branch_ = Branch::second_separated;
      return issue(Rational(2, 3) - Rational(2) * eps_);
    }
    branch_ = Branch::all_together;
    return issue(Rational(2, 3) - Rational(4) * eps_);
  }
  if (branch_ == Branch::second_separated && n == 8) return issue(Rational(2, 3) - Rational(2) * eps_);
  if (branch_ == Branch::all_together && n < 11) return issue(Rational(2, 3) - Rational(4) * eps_);
  return stop();
}

std::vector<std::vector<std::size_t>> AbsK3::certificate_groups() const {
  switch (branch_) {
    case Branch::pending:
      break;
    case Branch::split_tiny:
      return {{0, 1, 2}};
    case Branch::separated:
      return {{5, 0, 1}, {3, 4, 2}};
    case Branch::second_separated:
      return {{7, 3, 0}, {8, 4, 1}, {2, 5, 6}};
    case Branch::all_together:
      return {{7, 3, 0}, {8, 4, 1}, {9, 5, 2}, {10, 6}};
  }
  throw std::logic_error("abs-k3: certificate requested before the game ended");
}

// ---------------------------------------------------------------- duel

DuelResult run_duel(AdaptiveAdversary& adversary, OnlineAlgorithm& algorithm) {
  if (adversary.k() != algorithm.k()) {
    throw InconsistentInput("adversary plays k=" + std::to_string(adversary.k()) + " but algorithm has k=" +
                            std::to_string(algorithm.k()));
  }
  if (algorithm.packing().bin_count() != 0 || !adversary.issued().empty()) {
    throw InconsistentInput("a duel needs a fresh adversary and a fresh algorithm");
  }
  while (auto size = adversary.next(algorithm.packing())) algorithm.place(*size);

  Instance instance(adversary.k(), adversary.issued());
  Packing cert_packing = Packing::from_groups(instance, adversary.certificate_groups());
  const bool meets_lower_bound =
      static_cast<std::int64_t>(cert_packing.bin_count()) == trivial_lower_bound(instance);
  Certificate certificate = make_certificate(instance, std::move(cert_packing),
                                             meets_lower_bound ? Claim::optimal : Claim::feasible_upper_bound);
  Rational ratio(static_cast<long>(algorithm.packing().bin_count()), static_cast<long>(certificate.claimed_count));
  return {std::string(adversary.name()), std::string(algorithm.name()), std::move(instance), algorithm.packing(),
          std::move(certificate), std::move(ratio)};
}

BatchDuelResult run_batch_duel(std::string_view algorithm_name, int k, long n, const Rational& delta) {
  const GeneratedFamily full = gen_batches(k, n, delta, 4);
  auto algorithm = make_algorithm(algorithm_name, k);
  const std::size_t batch_one = static_cast<std::size_t>(batch_one_count(k, n));
  const std::size_t ends[4] = {batch_one, batch_one + static_cast<std::size_t>(n),
                               batch_one + 2 * static_cast<std::size_t>(n), batch_one + 3 * static_cast<std::size_t>(n)};

  BatchDuelResult result{std::string(algorithm->name()), k, n, {}, Rational(0)};
  std::size_t placed = 0;
  for (int stop = 1; stop <= 4; ++stop) {
    for (; placed < ends[stop - 1]; ++placed) algorithm->place(full.instance[placed]);
    BatchStop entry;
    entry.stop = stop;
    entry.algorithm_bins = algorithm->packing().bin_count();
    entry.certificate_bins = static_cast<std::size_t>(batch_certificate_count(k, n, stop));
    entry.ratio = Rational(static_cast<long>(entry.algorithm_bins), static_cast<long>(entry.certificate_bins));
    if (entry.ratio > result.max_ratio) result.max_ratio = entry.ratio;
    result.stops.push_back(std::move(entry));
  }
  return result;
}

}  // namespace cardbin

#include "cardbin/algorithms.hpp"

#include <algorithm>
#include <stdexcept>

namespace cardbin {

OnlineAlgorithm::OnlineAlgorithm(int k) : k_(k) {
  if (k < 2) throw ParameterError("cardinality bound k must be >= 2, got " + std::to_string(k));
}

bool OnlineAlgorithm::fits(std::size_t bin, const Rational& size) const {
  return count(bin) < static_cast<std::size_t>(k_) && size <= residual_[bin];
}

std::size_t OnlineAlgorithm::place(const Rational& size) {
  if (size.sign() <= 0 || size > Rational(1)) {
    throw ParameterError("item size must be in (0, 1], got " + size.str());
  }
  const std::size_t bin = choose(size);
  if (bin == packing_.bin_count()) {
    packing_.open_bin();
    residual_.emplace_back(1);
  } else if (bin > packing_.bin_count() || !fits(bin, size)) {
    throw std::logic_error(std::string(name()) + " chose bin " + std::to_string(bin) + " which cannot take the item");
  }
  packing_.add(bin, trace_.size(), size);
  residual_[bin] -= size;
  trace_.push_back(bin);
  placed(bin, size);
  return bin;
}

// ---------------------------------------------------------------- FirstFit

std::size_t FirstFit::choose(const Rational& size) {
  for (std::size_t b : open_) {
    if (size <= residual(b)) return b;
  }
  return next_bin();
}

void FirstFit::placed(std::size_t bin, const Rational& /*size*/) {
  if (bin == next_bin() - 1 && (open_.empty() || open_.back() < bin)) {
    if (count(bin) < static_cast<std::size_t>(k())) open_.push_back(bin);
    return;
  }
  if (count(bin) == static_cast<std::size_t>(k())) {
    open_.erase(std::lower_bound(open_.begin(), open_.end(), bin));
  }
}

// ---------------------------------------------------------------- Harmonic

Harmonic::Harmonic(int k) : OnlineAlgorithm(k), open_(static_cast<std::size_t>(k) + 1) {}

int Harmonic::size_class(const Rational& size, int k) {
  // size in (1/(l+1), 1/l]  <=>  floor(1/size) = l
  const mpz_class inverse_floor = floor(Rational(1) / size);
  if (inverse_floor >= k) return k;
  return static_cast<int>(inverse_floor.get_si());
}

std::size_t Harmonic::choose(const Rational& size) {
  pending_class_ = size_class(size, k());
  const auto& slot = open_[static_cast<std::size_t>(pending_class_)];
  return slot ? *slot : next_bin();
}

void Harmonic::placed(std::size_t bin, const Rational& /*size*/) {
  auto& slot = open_[static_cast<std::size_t>(pending_class_)];
  slot = bin;
  if (count(bin) == static_cast<std::size_t>(pending_class_)) slot.reset();
}

// ---------------------------------------------------------------- ThinAndFat

std::size_t ThinAndFat::choose(const Rational& size) {
  pending_partner_.reset();
  for (std::size_t b : state_.fat) {
    if (size > residual(b)) {
      last_step_ = 1;
      pending_partner_ = b;
      return next_bin();
    }
  }
  if (state_.thin.empty()) {
    last_step_ = 2;
    return next_bin();
  }
  for (std::size_t b : state_.thin) {
    if (size <= residual(b)) {
      last_step_ = 3;
      return b;
    }
  }
  if (state_.fat.empty()) {
    last_step_ = 4;
    return next_bin();
  }
  last_step_ = 5;
  pending_partner_ = *state_.thin.begin();
  return *state_.fat.begin();
}

void ThinAndFat::pair_bins(std::size_t a, std::size_t b) {
  state_.fat.erase(a);
  state_.thin.erase(a);
  state_.fat.erase(b);
  state_.thin.erase(b);
  state_.paired.emplace_back(std::min(a, b), std::max(a, b));
  is_paired_[a] = true;
  is_paired_[b] = true;
}

void ThinAndFat::classify_unpaired(std::size_t bin) {
  if (count(bin) == static_cast<std::size_t>(k() - 1)) {
    state_.fat.insert(bin);
  } else {
    state_.thin.insert(bin);
  }
}

void ThinAndFat::placed(std::size_t bin, const Rational& /*size*/) {
  if (is_paired_.size() < next_bin()) is_paired_.resize(next_bin(), false);
  switch (last_step_) {
    case 1:
      pair_bins(*pending_partner_, bin);
      break;
    case 2:
    case 4:
      classify_unpaired(bin);
      break;
    case 3:
      if (count(bin) == static_cast<std::size_t>(k() - 1)) {
        state_.thin.erase(bin);
        if (!state_.thin.empty()) {
          pair_bins(bin, *state_.thin.begin());
        } else {
          state_.fat.insert(bin);
        }
      }
      break;
    case 5:
      pair_bins(bin, *pending_partner_);
      break;
    default:
      throw std::logic_error("tf: unknown step");
  }
}

std::vector<std::string> check_tf_invariants(const ThinAndFat& tf) {
  std::vector<std::string> out;
  const Packing& packing = tf.packing();
  const TFState& st = tf.state();
  const auto k = static_cast<std::size_t>(tf.k());
  const Rational one(1);
  std::vector<int> membership(packing.bin_count(), 0);

  for (const auto& [a, b] : st.paired) {
    ++membership[a];
    ++membership[b];
    if (packing[a].level + packing[b].level <= one) {
      out.push_back("pair (" + std::to_string(a) + "," + std::to_string(b) + ") has combined level <= 1");
    }
    if (packing[a].count() + packing[b].count() < k) {
      out.push_back("pair (" + std::to_string(a) + "," + std::to_string(b) + ") has fewer than k items");
    }
  }
  for (std::size_t b : st.fat) {
    ++membership[b];
    if (packing[b].count() != k - 1) out.push_back("fat bin " + std::to_string(b) + " does not hold k-1 items");
  }
  for (std::size_t b : st.thin) {
    ++membership[b];
    if (packing[b].count() == 0 || packing[b].count() + 2 > k) {
      out.push_back("thin bin " + std::to_string(b) + " does not hold 1..k-2 items");
    }
  }
  for (std::size_t b = 0; b < membership.size(); ++b) {
    if (membership[b] != 1) out.push_back("bin " + std::to_string(b) + " is in " + std::to_string(membership[b]) + " state sets");
  }
  if (!st.fat.empty() && st.thin.size() > 1) out.push_back("a fat bin coexists with several thin bins");
  for (auto i = st.thin.begin(); i != st.thin.end(); ++i) {
    for (auto j = std::next(i); j != st.thin.end(); ++j) {
      if (packing[*i].level + packing[*j].level <= one) {
        out.push_back("thin bins " + std::to_string(*i) + "," + std::to_string(*j) + " have combined level <= 1");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- Alg5

Alg5::Alg5(int k) : OnlineAlgorithm(k) {
  if (k != 5) throw UnsupportedParameter("alg5 is defined only for k = 5, got k = " + std::to_string(k));
}

std::size_t Alg5::choose(const Rational& size) {
  const Rational half(1, 2);
  for (std::size_t b : open_) {
    if (size > residual(b)) continue;
    // level + size >= 1/2  <=>  residual - size <= 1/2
    if (count(b) == 4 && residual(b) - size > half) continue;
    return b;
  }
  return next_bin();
}

void Alg5::placed(std::size_t bin, const Rational& /*size*/) {
  if (count(bin) == 1 && (open_.empty() || open_.back() < bin)) {
    open_.push_back(bin);
    return;
  }
  if (count(bin) == 5) open_.erase(std::lower_bound(open_.begin(), open_.end(), bin));
}

std::vector<std::string> check_alg5_invariants(const Packing& packing) {
  std::vector<std::string> out;
  const Rational half(1, 2);
  const Rational two_thirds(2, 3);
  std::size_t low_regular = 0;
  for (std::size_t b = 0; b < packing.bin_count(); ++b) {
    const Bin& bin = packing[b];
    if (bin.count() == 5 && bin.level < half) out.push_back("5-bin " + std::to_string(b) + " has level below 1/2");
    if ((bin.count() == 2 || bin.count() == 3) && bin.level <= two_thirds) ++low_regular;
  }
  if (low_regular > 1) out.push_back(std::to_string(low_regular) + " regular bins have level <= 2/3");
  return out;
}

// ---------------------------------------------------------------- factory

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {"ff", "harmonic", "tf", "alg5"};
  return names;
}

std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view name, int k) {
  if (name == "ff") return std::make_unique<FirstFit>(k);
  if (name == "harmonic") return std::make_unique<Harmonic>(k);
  if (name == "tf") return std::make_unique<ThinAndFat>(k);
  if (name == "alg5") return std::make_unique<Alg5>(k);
  throw ParameterError("unknown algorithm '" + std::string(name) + "' (expected ff, harmonic, tf or alg5)");
}

RunResult run_online(OnlineAlgorithm& algorithm, const Instance& instance) {
  if (algorithm.k() != instance.k()) {
    throw InconsistentInput("algorithm built for k=" + std::to_string(algorithm.k()) +
                            " but instance has k=" + std::to_string(instance.k()));
  }
  for (const auto& size : instance.sizes()) algorithm.place(size);
  return {algorithm.packing(), algorithm.trace()};
}

RunResult run_algorithm(std::string_view name, const Instance& instance) {
  auto algorithm = make_algorithm(name, instance.k());
  return run_online(*algorithm, instance);
}

}  // namespace cardbin

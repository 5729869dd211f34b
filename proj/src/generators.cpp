#include "cardbin/generators.hpp"

#include <algorithm>
#include <numeric>

namespace cardbin {

namespace {

Rational third_power(const Rational& eps, long p) {
  return eps / Rational(pow3(static_cast<unsigned>(p)), mpz_class(1));
}

// Beyond the trivial bound: items above 1/2 need separate bins and at most
// two items above 1/3 share a bin.
std::int64_t counting_lower_bound(const Instance& instance) {
  std::int64_t over_half = 0;
  std::int64_t over_third = 0;
  for (const auto& s : instance.sizes()) {
    if (s > Rational(1, 2)) ++over_half;
    if (s > Rational(1, 3)) ++over_third;
  }
  return std::max({trivial_lower_bound(instance), over_half, (over_third + 1) / 2});
}

Certificate certify(const Instance& instance, const std::vector<std::vector<std::size_t>>& groups) {
  Packing packing = Packing::from_groups(instance, groups);
  const bool tight = static_cast<std::int64_t>(packing.bin_count()) == counting_lower_bound(instance);
  return make_certificate(instance, std::move(packing), tight ? Claim::optimal : Claim::feasible_upper_bound);
}

// Collects sizes and hands out consecutive indices.
class Builder {
 public:
  std::size_t add(const Rational& size) {
    sizes_.push_back(size);
    return sizes_.size() - 1;
  }
  std::vector<std::size_t> add_many(const Rational& size, long count) {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(add(size));
    return out;
  }
  std::vector<Rational> take() { return std::move(sizes_); }

 private:
  std::vector<Rational> sizes_;
};

// Pops `count` indices from the front of `pool`.
void take_from(std::vector<std::size_t>& group, const std::vector<std::size_t>& pool, std::size_t& cursor,
               std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) group.push_back(pool.at(cursor++));
}

void check_eps_delta(const char* family, long ell, const Rational& eps, const Rational& delta) {
  if (eps.sign() <= 0 || eps >= Rational(1, 120)) {
    throw ParameterError(std::string(family) + " needs 0 < eps < 1/120, got " + eps.str());
  }
  if (delta.sign() <= 0 || delta >= third_power(eps, ell + 4)) {
    throw ParameterError(std::string(family) + " needs 0 < delta < eps/3^(l+4), got " + delta.str());
  }
}

}  // namespace

// ---------------------------------------------------------------- batches

long batch_one_count(int k, long n) { return k == 5 ? n / 2 : (k - 6) * n / 6; }

long batch_certificate_count(int k, long n, int stop) {
  switch (stop) {
    case 1:
      return batch_one_count(k, n) / k;
    case 2:
      return k == 5 ? 3 * n / 10 : n / 6;
    case 3:
      return n / 2;
    case 4:
      return n;
    default:
      throw ParameterError("batch stop must be 1..4, got " + std::to_string(stop));
  }
}

Rational default_batch_delta() { return Rational(1, 4000); }

GeneratedFamily gen_batches(int k, long n, const Rational& delta, int stop) {
  if (k == 6 || k == 12) {
    throw ParameterError("batch inputs give no improvement over the known bound for k = " + std::to_string(k));
  }
  if (k != 5 && (k < 7 || k > 11)) throw ParameterError("batch inputs need k in {5, 7, 8, 9, 10, 11}");
  if (n <= 0 || n % (6L * k) != 0) throw ParameterError("batch inputs need N > 0 divisible by 6k = " + std::to_string(6 * k));
  if (delta.sign() <= 0 || delta >= Rational(1, 2000)) {
    throw ParameterError("batch inputs need 0 < delta < 1/2000, got " + delta.str());
  }
  if (stop < 1 || stop > 4) throw ParameterError("batch stop must be 1..4, got " + std::to_string(stop));

  Builder items;
  const auto b1 = items.add_many(Rational(1, 42) - Rational(3) * delta, batch_one_count(k, n));
  std::vector<std::size_t> b2, b3, b4;
  if (stop >= 2) b2 = items.add_many(Rational(1, 7) + delta, n);
  if (stop >= 3) b3 = items.add_many(Rational(1, 3) + delta, n);
  if (stop >= 4) b4 = items.add_many(Rational(1, 2) + delta, n);
  Instance instance(k, items.take());

  const auto un = static_cast<std::size_t>(n);
  const auto uk = static_cast<std::size_t>(k);
  std::vector<std::vector<std::size_t>> groups;
  std::size_t c1 = 0;
  if (stop == 1 || (stop == 2 && k == 5)) {
    // k items per bin, arrival order
    std::vector<std::size_t> all = b1;
    all.insert(all.end(), b2.begin(), b2.end());
    for (std::size_t i = 0; i < all.size(); i += uk) groups.emplace_back(all.begin() + i, all.begin() + i + uk);
  } else if (stop == 2) {
    for (std::size_t j = 0; j < un / 6; ++j) {
      auto& g = groups.emplace_back();
      std::size_t c2 = 6 * j;
      take_from(g, b2, c2, 6);
      take_from(g, b1, c1, uk - 6);
    }
  } else if (stop == 3) {
    // two of batch 3, two of batch 2, then batch-one items (one per bin for
    // k = 5, up to two otherwise) until used up
    const std::size_t quota = k == 5 ? 1 : 2;
    for (std::size_t j = 0; j < un / 2; ++j) {
      auto& g = groups.emplace_back(std::vector<std::size_t>{b3[2 * j], b3[2 * j + 1], b2[2 * j], b2[2 * j + 1]});
      take_from(g, b1, c1, std::min(quota, b1.size() - c1));
    }
  } else {
    for (std::size_t j = 0; j < un; ++j) {
      auto& g = groups.emplace_back(std::vector<std::size_t>{b4[j], b3[j], b2[j]});
      if (c1 < b1.size()) g.push_back(b1[c1++]);
    }
  }

  GeneratedFamily family{"batch", {}, instance, certify(instance, groups), std::nullopt};
  family.params.k = k;
  family.params.n = n;
  family.params.stop = stop;
  family.params.delta = delta;
  return family;
}

Rational lb_value(int k) {
  const long kk = k;
  switch (k) {
    case 5:
      return Rational(3, 2);
    case 7:
    case 8:
      return Rational(kk * kk + 24 * kk, kk * kk + 10 * kk + 24);
    case 9:
      return Rational(189, 124);
    case 10:
    case 11:
      return Rational(kk * kk + 84 * kk, kk * kk + 48 * kk + 36);
    default:
      throw ParameterError("lb_value is defined for k in {5, 7, 8, 9, 10, 11}, got k = " + std::to_string(k));
  }
}

Rational previous_lower_bound(int k) {
  switch (k) {
    case 5:
      return Rational(147058, 100000);
    case 7:
    case 8:
    case 9:
      return Rational(3, 2);
    case 10:
      return Rational(150943, 100000);
    case 11:
      return Rational(151724, 100000);
    default:
      throw ParameterError("no previous bound recorded for k = " + std::to_string(k));
  }
}

// ---------------------------------------------------------------- FF killers

GeneratedFamily gen_ff_killer_small(int k, long ell, const std::optional<Rational>& eps_opt) {
  if (k < 2 || k > 4) throw ParameterError("ff-small needs k in {2, 3, 4}, got k = " + std::to_string(k));
  if (ell < 1) throw ParameterError("ff-small needs l >= 1");
  const Rational eps = eps_opt.value_or(Rational(1, 18L * k));
  if (eps.sign() <= 0 || eps >= Rational(1, 9L * k)) {
    throw ParameterError("ff-small needs 0 < eps < 1/(9k), got " + eps.str());
  }

  Builder items;
  const auto smallest = items.add_many(eps, 2L * k * (k - 2) * ell);
  const auto medium = items.add_many(Rational(1, 2) - Rational(k) * eps, 2L * k * ell);
  const auto largest = items.add_many(Rational(1, 2) + eps, 2L * k * ell);
  Instance instance(k, items.take());

  std::vector<std::vector<std::size_t>> groups;
  std::size_t cursor = 0;
  for (std::size_t j = 0; j < largest.size(); ++j) {
    auto& g = groups.emplace_back(std::vector<std::size_t>{largest[j], medium[j]});
    take_from(g, smallest, cursor, static_cast<std::size_t>(k - 2));
  }

  GeneratedFamily family{"ff-small", {}, instance, certify(instance, groups),
                         static_cast<std::size_t>(5L * k * ell - 4 * ell)};
  family.params.k = k;
  family.params.ell = ell;
  family.params.eps = eps;
  return family;
}

GeneratedFamily gen_ff_killer_mid(int k, long ell, const std::optional<Rational>& eps_opt,
                                  const std::optional<Rational>& delta_opt) {
  if (k < 5 || k > 10) throw ParameterError("ff-mid needs k in 5..10, got k = " + std::to_string(k));
  if (ell < 1 || ell % k != 0) throw ParameterError("ff-mid needs l >= 1 divisible by k");
  const Rational eps = eps_opt.value_or(Rational(1, 121));
  const Rational delta = delta_opt.value_or(third_power(eps, ell + 5));
  check_eps_delta("ff-mid", ell, eps, delta);

  const auto L = static_cast<std::size_t>(ell);
  Builder items;
  const auto tiny = items.add_many(delta, (3L * k - 8) * ell);
  // upper[p] = 1/4 + eps/3^p, lower[p] = 1/4 - eps/3^p - 10 delta; both for the third bin group's bin p
  std::vector<std::size_t> upper(L + 1), lower(L + 1), quarter_minus;
  for (long p = 1; p <= ell - 1; ++p) {
    upper[p] = items.add(Rational(1, 4) + third_power(eps, p));
    lower[p + 1] = items.add(Rational(1, 4) - Rational(10) * delta - third_power(eps, p + 1));
    quarter_minus.push_back(items.add(Rational(1, 4) - Rational(30) * delta));
  }
  std::vector<std::size_t> half_minus, quarter_plus;
  for (long j = 0; j < ell; ++j) {
    half_minus.push_back(items.add(Rational(1, 2) - Rational(10) * delta));
    quarter_plus.push_back(items.add(Rational(1, 4) + Rational(20) * delta));
  }
  const auto big = items.add_many(Rational(1, 2) + delta, 3 * ell);
  Instance instance(k, items.take());

  const auto uk = static_cast<std::size_t>(k);
  std::vector<std::vector<std::size_t>> groups;
  std::size_t cursor = 0;
  for (std::size_t j = 0; j < L; ++j) {
    auto& g = groups.emplace_back(std::vector<std::size_t>{big[j], half_minus[j]});
    take_from(g, tiny, cursor, uk - 2);
  }
  for (std::size_t j = 0; j < L; ++j) {
    auto& g = groups.emplace_back(std::vector<std::size_t>{big[L + j], quarter_plus[j]});
    if (j + 1 < L) g.push_back(quarter_minus[j]);
    take_from(g, tiny, cursor, uk - 3);
  }
  for (std::size_t p = 1; p <= L; ++p) {
    auto& g = groups.emplace_back(std::vector<std::size_t>{big[2 * L + p - 1]});
    if (p + 1 <= L) g.push_back(upper[p]);
    if (p >= 2) g.push_back(lower[p]);
    take_from(g, tiny, cursor, uk - 3);
  }

  GeneratedFamily family{"ff-mid", {}, instance, certify(instance, groups),
                         static_cast<std::size_t>((8L * k - 8) * ell / k - 1)};
  family.params.k = k;
  family.params.ell = ell;
  family.params.eps = eps;
  family.params.delta = delta;
  return family;
}

GeneratedFamily gen_ff_killer_large(int k, long ell, const std::optional<Rational>& eps_opt,
                                    const std::optional<Rational>& delta_opt) {
  if (k < 10) throw ParameterError("ff-large needs k >= 10, got k = " + std::to_string(k));
  if (ell < 2 || (ell - 1) % k != 0 || (ell - 1) % (k - 3) != 0) {
    throw ParameterError("ff-large needs l >= 2 with l-1 divisible by k and by k-3");
  }
  const Rational eps = eps_opt.value_or(Rational(1, 121));
  const Rational delta = delta_opt.value_or(third_power(eps, ell + 5));
  check_eps_delta("ff-large", ell, eps, delta);

  const auto L = static_cast<std::size_t>(ell);
  Builder items;
  const auto tiny = items.add_many(delta / Rational(k), 10L * (k - 3) * (ell - 1));

  // a[i][p], b[i][p] with 1-based i and p; c[j] 1-based
  std::vector<std::vector<std::size_t>> a(11, std::vector<std::size_t>(L + 1));
  std::vector<std::vector<std::size_t>> b(11, std::vector<std::size_t>(L + 1));
  const Rational sixth(1, 6);
  const Rational third(1, 3);
  auto a_size = [&](int i, long p) {
    if (i <= 3) return sixth + third_power(eps, p) - delta;
    if (i <= 5) return sixth + third_power(eps, p) - Rational(2) * delta;
    if (i <= 7) return sixth - third_power(eps, p + 1) - delta;
    return sixth - third_power(eps, p + 1) - Rational(2) * delta;
  };
  for (long p = 1; p <= ell; ++p) {
    for (int i : {1, 2, 3, 6, 7, 4, 5, 8, 9, 10}) a[i][p] = items.add(a_size(i, p));
  }
  for (long p = 1; p <= ell; ++p) {
    for (int j = 1; j <= 5; ++j) {
      b[j][p] = items.add(third + third_power(eps, p - 1) - Rational(j) * delta);
      b[j + 5][p] = items.add(third - third_power(eps, p) - Rational(j) * delta);
    }
  }
  std::vector<std::size_t> c(10 * L + 1);
  for (std::size_t j = 1; j <= 10 * L; ++j) c[j] = items.add(Rational(1, 2) + delta / Rational(2));
  Instance instance(k, items.take());

  const auto extra = static_cast<std::size_t>(k - 3);
  std::vector<std::vector<std::size_t>> groups;
  std::size_t cursor = 0;
  for (std::size_t p = 1; p <= L; ++p) {
    for (std::size_t i = 1; i <= 5; ++i) {
      auto& g = groups.emplace_back(std::vector<std::size_t>{a[i][p], b[5 + i][p], c[5 * (p - 1) + i]});
      take_from(g, tiny, cursor, extra);
    }
  }
  for (std::size_t p = 3; p <= L; ++p) {
    for (std::size_t i = 1; i <= 5; ++i) {
      auto& g = groups.emplace_back(std::vector<std::size_t>{a[5 + i][p - 2], b[i][p], c[5 * (p + L - 3) + i]});
      take_from(g, tiny, cursor, extra);
    }
  }
  for (std::size_t i = 1; i <= 5; ++i) groups.push_back({c[10 * (L - 1) + i], b[i][1]});
  for (std::size_t i = 1; i <= 5; ++i) groups.push_back({c[10 * (L - 1) + 5 + i], b[i][2]});
  groups.push_back({a[6][L], a[7][L], a[8][L], a[9][L], a[10][L]});
  groups.push_back({a[6][L - 1], a[7][L - 1], a[8][L - 1], a[9][L - 1], a[10][L - 1]});

  GeneratedFamily family{"ff-large", {}, instance, certify(instance, groups),
                         static_cast<std::size_t>(10L * (k - 3) * (ell - 1) / k + 17 * ell)};
  family.params.k = k;
  family.params.ell = ell;
  family.params.eps = eps;
  family.params.delta = delta;
  return family;
}

std::string killer_family_for(int k) {
  if (k < 2) throw ParameterError("k must be >= 2");
  if (k <= 4) return "ff-small";
  if (k <= 9) return "ff-mid";
  return "ff-large";
}

long killer_ell(int k, std::optional<long> at_least) {
  const std::string family = killer_family_for(k);
  const long floor_ell = std::max(1L, at_least.value_or(1));
  if (family == "ff-small") return floor_ell;
  if (family == "ff-mid") {
    if (!at_least) return k;
    return std::max<long>(k, (floor_ell + k - 1) / k * k);
  }
  const long step = std::lcm<long>(k, k - 3);
  if (!at_least || floor_ell <= step + 1) return step + 1;
  return 1 + (floor_ell - 1 + step - 1) / step * step;
}

GeneratedFamily gen_ff_killer(int k, long ell) {
  const std::string family = killer_family_for(k);
  if (family == "ff-small") return gen_ff_killer_small(k, ell);
  if (family == "ff-mid") return gen_ff_killer_mid(k, ell);
  return gen_ff_killer_large(k, ell);
}

// ---------------------------------------------------------------- random

Instance random_grid_instance(int k, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> numerator(1, 60);
  std::vector<Rational> sizes;
  sizes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) sizes.emplace_back(numerator(rng), 60);
  return Instance(k, std::move(sizes));
}

std::vector<Instance> random_grid_sweep(int k, std::size_t count, std::uint64_t seed, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, max_n);
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = length(rng);
    out.push_back(random_grid_instance(k, n, rng));
  }
  return out;
}

}  // namespace cardbin

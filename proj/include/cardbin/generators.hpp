#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cardbin/core.hpp"

namespace cardbin {

struct FamilyParams {
  int k = 0;
  std::optional<long> ell;
  std::optional<long> n;     // batch families: N
  std::optional<int> stop;   // batch families: 1..4
  std::optional<Rational> eps;
  std::optional<Rational> delta;
};

struct GeneratedFamily {
  std::string name;  // ff-small, ff-mid, ff-large, batch
  FamilyParams params;
  Instance instance;
  Certificate certificate;
  std::optional<std::size_t> predicted_ff;  // closed-form FF bin count
};

// ---------------------------------------------------------------- batches

/// Four batches of sizes 1/42-3d, 1/7+d, 1/3+d, 1/2+d, truncated after batch
/// `stop`. k in {5, 7, 8, 9, 10, 11}; N divisible by 6k; 0 < d < 1/2000.
GeneratedFamily gen_batches(int k, long n, const Rational& delta, int stop);

/// Number of items in batch one.
long batch_one_count(int k, long n);

/// Certificate bin count for the prefix ending at batch `stop`.
long batch_certificate_count(int k, long n, int stop);

/// The corollary value of the four-batch argument.
Rational lb_value(int k);

/// Previously known lower bound for the same k (first column of the bounds
/// table), for comparison against lb_value.
Rational previous_lower_bound(int k);

Rational default_batch_delta();

// ---------------------------------------------------------------- FF killers

/// k in {2,3,4}; l >= 1; 0 < eps < 1/(9k). Default eps = 1/(18k).
GeneratedFamily gen_ff_killer_small(int k, long ell, const std::optional<Rational>& eps = std::nullopt);

/// k in 5..10; l divisible by k; 0 < eps < 1/120; 0 < delta < eps/3^(l+4).
/// Defaults eps = 1/121, delta = eps/3^(l+5).
GeneratedFamily gen_ff_killer_mid(int k, long ell, const std::optional<Rational>& eps = std::nullopt,
                                  const std::optional<Rational>& delta = std::nullopt);

/// k >= 10; l-1 divisible by k and by k-3; same eps/delta ranges and
/// defaults as the mid family.
GeneratedFamily gen_ff_killer_large(int k, long ell, const std::optional<Rational>& eps = std::nullopt,
                                    const std::optional<Rational>& delta = std::nullopt);

/// The killer family used for a given k: small for k <= 4, mid for 5..9,
/// large for k >= 10.
std::string killer_family_for(int k);

/// Smallest valid l >= at_least for the family chosen by killer_family_for;
/// without a floor, the default l (1, k, or lcm(k, k-3)+1).
long killer_ell(int k, std::optional<long> at_least = std::nullopt);

GeneratedFamily gen_ff_killer(int k, long ell);

// ---------------------------------------------------------------- random

/// Sizes drawn uniformly from {1/60, 2/60, ..., 60/60}.
Instance random_grid_instance(int k, std::size_t n, std::mt19937_64& rng);

/// `count` grid instances with n uniform in 1..max_n, reproducible from seed.
std::vector<Instance> random_grid_sweep(int k, std::size_t count, std::uint64_t seed, std::size_t max_n = 12);

}  // namespace cardbin

#include <doctest.h>

#include "cardbin/generators.hpp"
#include "cardbin/oracle.hpp"
#include "support/oracles.hpp"

using namespace cardbin;

TEST_SUITE("oracle") {

TEST_CASE("exact_opt examples") {
  const Instance a(3, {Rational(3, 5), Rational(1, 2), Rational(2, 5), Rational(3, 10)});
  const auto ra = exact_opt(a);
  CHECK(ra.exact);
  CHECK(ra.certificate.claim == Claim::optimal);
  CHECK(ra.certificate.claimed_count == 2);
  CHECK(validate_packing(a, ra.certificate.packing).ok);

  const Instance b(2, std::vector<Rational>(4, Rational(1, 4)));
  CHECK(exact_opt(b).certificate.claimed_count == 2);

  CHECK_THROWS_AS(exact_opt(Instance(2, {})), ParameterError);
}

TEST_CASE("exact_opt agrees with exhaustive enumeration") {
  for (int k : {2, 3, 4, 5, 6, 8}) {
    for (const auto& in : random_grid_sweep(k, 80, 500 + k, 10)) {
      const auto r = exact_opt(in);
      REQUIRE(r.exact);
      CHECK(r.certificate.claimed_count == testing::exhaustive_opt(in));
      CHECK(validate_packing(in, r.certificate.packing).ok);
    }
  }
}

TEST_CASE("exact_opt sits between the trivial bound and FFD") {
  for (int k = 2; k <= 10; ++k) {
    for (const auto& in : random_grid_sweep(k, 60, 600 + k, 12)) {
      const auto r = exact_opt(in);
      REQUIRE(r.exact);
      const auto upper = best_known_upper(in);
      CHECK(validate_packing(in, upper.packing).ok);
      CHECK(upper.claim == Claim::feasible_upper_bound);
      CHECK(static_cast<std::int64_t>(r.certificate.claimed_count) >= trivial_lower_bound(in));
      CHECK(r.certificate.claimed_count <= upper.claimed_count);
    }
  }
}

TEST_CASE("an exhausted budget returns the incumbent") {
  // any instance where FFD misses the trivial bound forces a search
  std::size_t found = 0;
  for (const auto& in : random_grid_sweep(3, 400, 77, 12)) {
    const auto limited = exact_opt(in, 1);
    if (limited.exact) continue;
    ++found;
    CHECK(limited.certificate.claim == Claim::feasible_upper_bound);
    CHECK(validate_packing(in, limited.certificate.packing).ok);
    const auto full = exact_opt(in);
    CHECK(full.exact);
    CHECK(full.certificate.claimed_count <= limited.certificate.claimed_count);
    CHECK(full.nodes > 1);
  }
  CHECK(found > 0);
}

TEST_CASE("small FF family: FFD within one bin, optimum 8") {
  const auto family = gen_ff_killer_small(4, 1);
  CHECK(best_known_upper(family.instance).claimed_count <= 9);
  const auto r = exact_opt(family.instance);
  CHECK(r.exact);
  CHECK(r.certificate.claimed_count == 8);
  CHECK(r.certificate.claimed_count <= family.certificate.claimed_count);
}

TEST_CASE("batch optima meet the trivial bound") {
  for (int stop = 1; stop <= 4; ++stop) {
    const auto family = gen_batches(7, 42, default_batch_delta(), stop);
    const auto r = exact_opt(family.instance);
    CHECK(r.exact);
    CHECK(static_cast<std::int64_t>(r.certificate.claimed_count) == trivial_lower_bound(family.instance));
    CHECK(r.certificate.claimed_count <= family.certificate.claimed_count);
  }
}

}  // TEST_SUITE

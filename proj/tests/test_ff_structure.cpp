#include <doctest.h>

#include <random>

#include "cardbin/algorithms.hpp"
#include "cardbin/ff_structure.hpp"
#include "cardbin/generators.hpp"
#include "cardbin/oracle.hpp"

using namespace cardbin;

namespace {

Packing ff_packing(const Instance& in) { return run_algorithm("ff", in).packing; }

}  // namespace

TEST_SUITE("ff_structure") {

TEST_CASE("minimality accepts FF traces and rejects others") {
  for (const auto& in : random_grid_sweep(4, 100, 7, 20)) {
    const auto ff = run_algorithm("ff", in);
    CHECK(check_ff_minimality(in, ff.trace).empty());
    const auto tf = run_algorithm("tf", in);
    if (tf.packing.groups() != ff.packing.groups()) CHECK_FALSE(check_ff_minimality(in, tf.trace).empty());
  }
  const Instance halves(2, {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(check_ff_minimality(halves, {0, 0, 1}).empty());
  CHECK_FALSE(check_ff_minimality(halves, {0, 1, 0}).empty());
  CHECK_FALSE(check_ff_minimality(halves, {0, 0, 0}).empty());
  CHECK_FALSE(check_ff_minimality(halves, {0, 0, 2}).empty());
}

TEST_CASE("require_ff_output") {
  const Instance halves(2, {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK_NOTHROW(require_ff_output(halves, Packing::from_groups(halves, {{0, 1}, {2}})));
  CHECK_THROWS_AS(require_ff_output(halves, Packing::from_groups(halves, {{0}, {1, 2}})), InconsistentInput);
}

TEST_CASE("reorder examples") {
  const Instance halves(2, {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  const auto r = reorder_for_ff(halves, ff_packing(halves));
  CHECK(r.instance == halves);
  CHECK(r.order == std::vector<std::size_t>{0, 1, 2});
  CHECK(ff_packing(r.instance).bin_count() == 2);

  // two 2-bins for k = 3: nothing to move
  const Instance mid(3, {Rational(3, 5), Rational(3, 10), Rational(3, 5), Rational(3, 10)});
  CHECK(reorder_for_ff(mid, ff_packing(mid)).instance == mid);

  CHECK_THROWS_AS(reorder_for_ff(halves, Packing::from_groups(halves, {{0}, {1, 2}})), InconsistentInput);
}

TEST_CASE("reorder preserves the FF bin count and groups bins by count") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const int k = 2 + t % 7;
    const Instance in = random_grid_instance(k, 1 + (rng() % 30), rng);
    const Packing before = ff_packing(in);
    const auto r = reorder_for_ff(in, before);
    const Packing after = ff_packing(r.instance);
    CHECK(after.bin_count() == before.bin_count());
    for (std::size_t i = 0; i < r.order.size(); ++i) CHECK(r.instance[i] == in[r.order[i]]);
    // k-bins first, 1-bins last
    bool seen_non_full = false;
    bool seen_single = false;
    for (const auto& bin : after.bins()) {
      const bool full = bin.count() == static_cast<std::size_t>(k);
      const bool single = bin.count() == 1 && k > 1;
      if (full) CHECK_FALSE(seen_non_full);
      if (!full) seen_non_full = true;
      if (!single) CHECK_FALSE(seen_single);
      if (single) seen_single = true;
    }
  }
}

TEST_CASE("structure checks on small hand cases") {
  const Instance big(2, {Rational(3, 5), Rational(3, 5)});
  const Packing cert = Packing::from_groups(big, {{0}, {1}});
  CHECK(check_ff_structure(big, ff_packing(big), cert).ok());

  // the FF 1-bin item may share a certificate bin with items of larger FF bins
  const Instance pair(3, {Rational(3, 5), Rational(1, 2), Rational(1, 5)});
  const Packing ff = ff_packing(pair);
  REQUIRE(ff.groups() == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
  CHECK(check_ff_structure(pair, ff, Packing::from_groups(pair, {{0}, {1, 2}})).ok());

  CHECK_THROWS_AS(check_ff_structure(big, Packing::from_groups(big, {{0, 1}}), cert), InconsistentInput);
}

TEST_CASE("structure checks hold against optimal certificates") {
  for (int k = 2; k <= 8; ++k) {
    for (const auto& in : random_grid_sweep(k, 60, 900 + k, 12)) {
      const auto opt = exact_opt(in);
      REQUIRE(opt.exact);
      const auto report = check_ff_structure(in, ff_packing(in), opt.certificate.packing);
      CHECK_MESSAGE(report.ok(), (report.ok() ? "" : report.violations.front()));
    }
  }
}

TEST_CASE("small family medium 2-bins sit above 2/3") {
  const Rational eps(1, 72);
  const auto family = gen_ff_killer_small(4, 1, eps);
  const Packing ff = ff_packing(family.instance);
  const Rational medium = Rational(1, 2) - Rational(4) * eps;
  std::size_t medium_pairs = 0;
  for (const auto& bin : ff.bins()) {
    if (bin.count() == 2 && family.instance[bin.items[0]] == medium) {
      ++medium_pairs;
      CHECK(bin.level == Rational(1) - Rational(8) * eps);
      CHECK(bin.level > Rational(2, 3));
    }
  }
  CHECK(medium_pairs == 4);
  CHECK(check_ff_structure(family.instance, ff, family.certificate.packing).ok());
}

}  // TEST_SUITE

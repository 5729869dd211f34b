#include <doctest.h>

#include <random>

#include "cardbin/core.hpp"
#include "cardbin/generators.hpp"

using namespace cardbin;

namespace {

Instance halves3() { return Instance(2, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}); }

bool has_rule(const ValidationReport& report, const std::string& text) {
  for (const auto& v : report.violations) {
    if (v.message.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("instance rejects sizes outside (0, 1] and k < 2") {
  CHECK_THROWS_AS(Instance(2, {Rational(0)}), ParameterError);
  CHECK_THROWS_AS(Instance(2, {Rational(-1, 2)}), ParameterError);
  CHECK_THROWS_AS(Instance(2, {Rational(3, 2)}), ParameterError);
  CHECK_THROWS_AS(Instance(1, {Rational(1, 2)}), ParameterError);
  CHECK_NOTHROW(Instance(2, {Rational(1)}));
}

TEST_CASE("validate_packing") {
  const Instance in = halves3();
  SUBCASE("feasible") {
    const auto report = validate_packing(in, Packing::from_groups(in, {{0, 1}, {2}}));
    CHECK(report.ok);
    CHECK(report.violations.empty());
  }
  SUBCASE("cardinality breach") {
    const auto report = validate_packing(in, Packing::from_groups(in, {{0, 1, 2}}));
    CHECK_FALSE(report.ok);
    CHECK(has_rule(report, "count 3 > k=2"));
  }
  SUBCASE("size breach") {
    const Instance big(3, {Rational(3, 5), Rational(3, 5)});
    const auto report = validate_packing(big, Packing::from_groups(big, {{0, 1}}));
    CHECK_FALSE(report.ok);
    CHECK(has_rule(report, "level 6/5 > 1"));
  }
  SUBCASE("missing and repeated items") {
    CHECK_FALSE(validate_packing(in, Packing::from_groups(in, {{0, 1}})).ok);
    CHECK_FALSE(validate_packing(in, Packing::from_groups(in, {{0, 1}, {1, 2}})).ok);
  }
  SUBCASE("out of range index") {
    CHECK_THROWS_AS(Packing::from_groups(in, {{0, 1}, {3}}), MalformedPacking);
  }
}

TEST_CASE("make_certificate refuses infeasible packings") {
  const Instance in = halves3();
  const auto cert = make_certificate(in, Packing::from_groups(in, {{0, 1}, {2}}), Claim::optimal);
  CHECK(cert.claimed_count == 2);
  CHECK_THROWS_AS(make_certificate(in, Packing::from_groups(in, {{0, 1, 2}}), Claim::optimal), InconsistentInput);
}

TEST_CASE("trivial_lower_bound") {
  // seven sizes summing to 11/5
  const Instance a(3, {Rational(1, 5), Rational(1, 5), Rational(1, 5), Rational(2, 5), Rational(2, 5),
                       Rational(2, 5), Rational(2, 5)});
  CHECK(a.total_size() == Rational(11, 5));
  CHECK(trivial_lower_bound(a) == 3);
  const Instance b(5, std::vector<Rational>(10, Rational(1, 100)));
  CHECK(trivial_lower_bound(b) == 2);
  CHECK(trivial_lower_bound(std::vector<Rational>{}, 3) == 0);

  const auto small = gen_ff_killer_small(4, 1);
  CHECK(small.instance.size() == 32);
  Rational total;
  for (const auto& s : small.instance.sizes()) total += s;
  CHECK(total > Rational(7));
  CHECK(trivial_lower_bound(small.instance) == ceil_to_int(total));
  CHECK(trivial_lower_bound(small.instance) >= 8);
}

TEST_CASE("packing levels are conserved") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Instance in = random_grid_instance(3, 12, rng);
    std::vector<std::vector<std::size_t>> groups(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) groups[i] = {i};
    const Packing p = Packing::from_groups(in, groups);
    Rational sum;
    for (const auto& bin : p.bins()) sum += bin.level;
    CHECK(sum == in.total_size());
    CHECK(p.same_bins(Packing::from_groups(in, p.groups())));
  }
}

}  // TEST_SUITE

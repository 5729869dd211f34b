#include <doctest.h>

#include <algorithm>

#include "cardbin/adversary.hpp"
#include "cardbin/generators.hpp"
#include "support/oracles.hpp"

using namespace cardbin;

namespace {

// Places item i into script[i] (an existing bin, or the next fresh one).
// Items past the end of the script go to a fresh bin.
class Scripted final : public OnlineAlgorithm {
 public:
  Scripted(int k, std::vector<std::size_t> script) : OnlineAlgorithm(k), script_(std::move(script)) {}
  std::string_view name() const override { return "scripted"; }

 protected:
  std::size_t choose(const Rational& /*size*/) override {
    const std::size_t i = trace().size();
    return i < script_.size() ? std::min(script_[i], next_bin()) : next_bin();
  }

 private:
  std::vector<std::size_t> script_;
};

std::vector<std::size_t> tiny_together_then(int k, std::initializer_list<std::size_t> rest) {
  std::vector<std::size_t> script(static_cast<std::size_t>(k), 0);
  script.insert(script.end(), rest);
  return script;
}

void check_duel(const DuelResult& r) {
  CHECK(r.certificate.packing.bin_count() == r.certificate.claimed_count);
  CHECK(validate_packing(r.instance, r.certificate.packing).ok);
  CHECK(r.ratio == Rational(static_cast<long>(r.algorithm_packing.bin_count()),
                            static_cast<long>(r.certificate.claimed_count)));
}

}  // namespace

TEST_SUITE("adversary") {

TEST_CASE("abs-k4plus against first fit") {
  AbsK4Plus adv(4, Rational(1, 100));
  FirstFit ff(4);
  const auto r = run_duel(adv, ff);
  check_duel(r);
  CHECK(r.algorithm_packing.bin_count() == 4);
  CHECK(r.certificate.claimed_count == 2);
  CHECK(r.ratio == Rational(2));
}

TEST_CASE("abs-k4plus forces 2 on every built-in algorithm") {
  for (int k = 4; k <= 12; ++k) {
    for (const auto& name : algorithm_names()) {
      if (name == "alg5" && k != 5) continue;
      AbsK4Plus adv(k, AbsK4Plus::default_eps(k));
      auto alg = make_algorithm(name, k);
      const auto r = run_duel(adv, *alg);
      CAPTURE(k);
      CAPTURE(name);
      check_duel(r);
      CHECK(r.ratio >= adv.target_ratio());
    }
  }
}

TEST_CASE("abs-k4plus branches under scripted play") {
  for (int k : {4, 5, 6, 9}) {
    CAPTURE(k);
    SUBCASE("tiny items split") {
      std::vector<std::size_t> script(static_cast<std::size_t>(k), 0);
      script[1] = 1;
      AbsK4Plus adv(k, AbsK4Plus::default_eps(k));
      Scripted alg(k, script);
      const auto r = run_duel(adv, alg);
      check_duel(r);
      CHECK(r.instance.size() == static_cast<std::size_t>(k));
      CHECK(r.ratio == Rational(2));
    }
    SUBCASE("thirds separated") {
      AbsK4Plus adv(k, AbsK4Plus::default_eps(k));
      Scripted alg(k, tiny_together_then(k, {1, 2, 3}));
      const auto r = run_duel(adv, alg);
      check_duel(r);
      CHECK(r.instance.size() == static_cast<std::size_t>(k) + 3);
      CHECK(r.instance[static_cast<std::size_t>(k) + 2] == Rational(2, 3));
      CHECK(r.ratio == Rational(2));
    }
    SUBCASE("thirds together, largest valid eps") {
      // (ceil(k/2)+2) eps = 1/6 exactly: the second certificate bin is full
      const Rational eps(1, 6L * ((k + 1) / 2 + 2));
      REQUIRE(AbsK4Plus::valid_eps(k, eps));
      AbsK4Plus adv(k, eps);
      Scripted alg(k, tiny_together_then(k, {1, 1, 2, 3}));
      const auto r = run_duel(adv, alg);
      check_duel(r);
      CHECK(r.instance.size() == static_cast<std::size_t>(k) + 4);
      CHECK(r.ratio == Rational(2));
      const Rational top = std::max(r.certificate.packing[0].level, r.certificate.packing[1].level);
      CHECK(top == Rational(1));
    }
  }
}

TEST_CASE("abs-k4plus eps range") {
  CHECK(AbsK4Plus::valid_eps(4, Rational(1, 24)));
  CHECK_FALSE(AbsK4Plus::valid_eps(4, Rational(1, 23)));
  CHECK_FALSE(AbsK4Plus::valid_eps(4, Rational(0)));
  CHECK_FALSE(AbsK4Plus::valid_eps(7, Rational(1, 21)));
  CHECK(AbsK4Plus::default_eps(4) == Rational(1, 100));
  CHECK(AbsK4Plus::default_eps(40) == Rational(1, 276));
  for (int k = 4; k <= 60; ++k) CHECK(AbsK4Plus::valid_eps(k, AbsK4Plus::default_eps(k)));
  CHECK_THROWS_AS(AbsK4Plus(4, Rational(1, 12)), ParameterError);
  CHECK_THROWS_AS(AbsK4Plus(3, Rational(1, 100)), ParameterError);
}

TEST_CASE("abs-k3 against first fit reaches the terminal branch") {
  AbsK3 adv(Rational(1, 100));
  FirstFit ff(3);
  const auto r = run_duel(adv, ff);
  check_duel(r);
  CHECK(r.instance.size() == 11);
  CHECK(r.algorithm_packing.bin_count() == 7);
  CHECK(r.certificate.claimed_count == 4);
  CHECK(r.ratio == Rational(7, 4));
}

TEST_CASE("abs-k3 forces 7/4 on every built-in algorithm") {
  for (const auto& name : algorithm_names()) {
    if (name == "alg5") continue;
    AbsK3 adv(AbsK3::default_eps());
    auto alg = make_algorithm(name, 3);
    const auto r = run_duel(adv, *alg);
    CAPTURE(name);
    check_duel(r);
    CHECK(r.ratio >= Rational(7, 4));
  }
}

TEST_CASE("abs-k3 branches under scripted play") {
  const Rational eps(1, 25);
  SUBCASE("tiny items split") {
    AbsK3 adv(eps);
    Scripted alg(3, {0, 1, 0});
    const auto r = run_duel(adv, alg);
    check_duel(r);
    CHECK(r.ratio >= Rational(2));
  }
  SUBCASE("first thirds separated") {
    AbsK3 adv(eps);
    Scripted alg(3, {0, 0, 0, 1, 2, 3});
    const auto r = run_duel(adv, alg);
    check_duel(r);
    CHECK(r.instance.size() == 6);
    CHECK(r.ratio == Rational(2));
  }
  SUBCASE("second thirds separated") {
    AbsK3 adv(eps);
    Scripted alg(3, {0, 0, 0, 1, 1, 2, 3, 4, 5});
    const auto r = run_duel(adv, alg);
    check_duel(r);
    CHECK(r.instance.size() == 9);
    CHECK(r.ratio == Rational(2));
  }
  SUBCASE("all together") {
    AbsK3 adv(eps);
    Scripted alg(3, {0, 0, 0, 1, 1, 2, 2, 3, 4, 5, 6});
    const auto r = run_duel(adv, alg);
    check_duel(r);
    CHECK(r.instance.size() == 11);
    CHECK(r.ratio == Rational(7, 4));
  }
}

TEST_CASE("abs-k3 eps range") {
  CHECK_THROWS_AS(AbsK3(Rational(1, 24)), ParameterError);
  CHECK_THROWS_AS(AbsK3(Rational(0)), ParameterError);
  CHECK_NOTHROW(AbsK3(Rational(1, 25)));
}

TEST_CASE("duels need matching k and fresh players") {
  AbsK3 adv(Rational(1, 100));
  FirstFit ff4(4);
  CHECK_THROWS_AS(run_duel(adv, ff4), InconsistentInput);
  FirstFit used(3);
  used.place(Rational(1, 2));
  AbsK3 fresh(Rational(1, 100));
  CHECK_THROWS_AS(run_duel(fresh, used), InconsistentInput);
}

TEST_CASE("batch duel stops match first fit on each prefix") {
  const auto result = run_batch_duel("ff", 7, 42, default_batch_delta());
  REQUIRE(result.stops.size() == 4);
  Rational best;
  for (const auto& stop : result.stops) {
    const auto prefix = gen_batches(7, 42, default_batch_delta(), stop.stop);
    const auto trace = testing::naive_first_fit(prefix.instance);
    CHECK(stop.algorithm_bins == *std::max_element(trace.begin(), trace.end()) + 1);
    CHECK(stop.certificate_bins == prefix.certificate.claimed_count);
    best = std::max(best, stop.ratio);
  }
  CHECK(result.max_ratio == best);
  CHECK(result.stops[3].ratio == Rational(71, 42));
}

}  // TEST_SUITE

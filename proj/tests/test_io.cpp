#include <doctest.h>

#include <random>

#include "cardbin/algorithms.hpp"
#include "cardbin/generators.hpp"
#include "cardbin/io.hpp"

using namespace cardbin;

TEST_SUITE("io") {

TEST_CASE("instance text with repeat suffix") {
  const Instance in = read_instance("BPCC v1\nk 2\nitem 1/2 x3\n");
  CHECK(in == Instance(2, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("sizes are normalized on read") {
  const Instance in = read_instance("BPCC v1\nk 3\nitem 3/6\n");
  CHECK(in[0] == Rational(1, 2));
  CHECK(write_instance(in) == "BPCC v1\nk 3\nitem 1/2\n");
}

TEST_CASE("comments and blank lines are ignored") {
  const Instance in = read_instance("# generated\nBPCC v1\n\nk 4\n# sizes\nitem 1/3\nitem 1 x2\n");
  CHECK(in.k() == 4);
  CHECK(in.size() == 3);
  CHECK(in[2] == Rational(1));
}

TEST_CASE("malformed instance text") {
  for (const char* bad : {"", "BPCC v2\nk 2\n", "BPCC v1\n", "BPCC v1\nk 1\n", "BPCC v1\nk two\n",
                          "BPCC v1\nk 2\nitem 0/1\n", "BPCC v1\nk 2\nitem 3/2\n", "BPCC v1\nk 2\nitem 1/2 x0\n",
                          "BPCC v1\nk 2\nitem 1/2 3\n", "BPCC v1\nk 2\nitm 1/2\n", "BPCC v1\nk 2\nitem 1/0\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(read_instance(bad), ParseError);
  }
}

TEST_CASE("batch instances round-trip") {
  for (int k : {5, 7, 8, 9, 10, 11}) {
    for (int stop = 1; stop <= 4; ++stop) {
      const auto family = gen_batches(k, 6L * k * (k == 5 ? 2 : 1), default_batch_delta(), stop);
      CHECK(read_instance(write_instance(family.instance)) == family.instance);
    }
  }
}

TEST_CASE("large killer round-trips with huge denominators") {
  const auto family = gen_ff_killer_large(10, 71);
  const std::string text = write_instance(family.instance);
  CHECK(read_instance(text) == family.instance);
  const Packing cert = read_packing(write_packing(family.certificate.packing), family.instance);
  CHECK(cert == family.certificate.packing);
}

TEST_CASE("packing text") {
  const Instance in(2, {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  const Packing p = read_packing("PACKING v1\nbins 2\nbin 0: 0 1\nbin 1: 2\n", in);
  CHECK(p.groups() == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  CHECK(write_packing(p) == "PACKING v1\nbins 2\nbin 0: 0 1\nbin 1: 2\n");
  CHECK_THROWS_AS(read_packing("PACKING v1\nbins 2\nbin 0: 0 1\n", in), ParseError);
  CHECK_THROWS_AS(read_packing("PACKING v1\nbins 1\nbin 1: 0 1 2\n", in), ParseError);
  CHECK_THROWS_AS(read_packing("PACKING v1\nbins 1\nbin 0: 0 x\n", in), ParseError);
  CHECK_THROWS_AS(read_packing("PACKING v1\nbins 1\nbin 0: 0 1 7\n", in), MalformedPacking);
}

TEST_CASE("trace text") {
  const std::vector<std::size_t> trace{0, 0, 1};
  CHECK(write_trace(trace) == "place 0 -> 0\nplace 1 -> 0\nplace 2 -> 1\n");
  CHECK(read_trace(write_trace(trace)) == trace);
  CHECK_THROWS_AS(read_trace("place 1 -> 0\n"), ParseError);
  CHECK_THROWS_AS(read_trace("place 0 => 0\n"), ParseError);
}

TEST_CASE("algorithm outputs round-trip") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Instance in = random_grid_instance(2 + t % 6, 1 + t % 20, rng);
    CHECK(read_instance(write_instance(in)) == in);
    for (const auto& name : algorithm_names()) {
      if (name == "alg5" && in.k() != 5) continue;
      const auto run = run_algorithm(name, in);
      CHECK(read_packing(write_packing(run.packing), in).same_bins(run.packing));
      CHECK(read_trace(write_trace(run.trace)) == run.trace);
    }
  }
}

}  // TEST_SUITE

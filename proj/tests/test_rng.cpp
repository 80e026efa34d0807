#include "tailrisk/rng.hpp"

#include <cstddef>

#include "doctest.h"
#include "oracle_values.hpp"

using namespace tailrisk;

TEST_CASE("splitmix64 matches the published stream for seed 0") {
  SplitMix64 rng(0);
  for (std::uint64_t expected : oracle::kStreamSeed0) CHECK(rng.next_u64() == expected);
}

TEST_CASE("splitmix64 matches the reference stream for a patterned seed") {
  SplitMix64 rng(oracle::kStreamSeedPattern);
  for (std::uint64_t expected : oracle::kStreamPattern) CHECK(rng.next_u64() == expected);

  SplitMix64 again(oracle::kStreamSeedPattern);
  CHECK(again.next_u01() == oracle::kStreamPatternU01[0]);
  CHECK(again.next_u01() == oracle::kStreamPatternU01[1]);
}

TEST_CASE("derive_seed matches reference values") {
  for (const auto& c : oracle::kDeriveCases) CHECK(derive_seed(c.master, c.index) == c.seed);
}

TEST_CASE("derive_seed(0, i) replays the seed-0 stream") {
  // the counter-based construction makes replicate seeds independent of
  // draw order: deriving by index gives exactly the sequential stream
  SplitMix64 rng(0);
  for (std::uint64_t i = 0; i < 16; ++i) CHECK(derive_seed(0, i) == rng.next_u64());
}

TEST_CASE("u01 stays in [0, 1) and streams are reproducible") {
  SplitMix64 a(12345);
  SplitMix64 b(12345);
  for (int i = 0; i < 10000; ++i) {
    const double u = a.next_u01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == b.next_u01());
  }
}

TEST_CASE("distinct indices give distinct derived seeds in practice") {
  std::uint64_t prev = derive_seed(42, 0);
  for (std::uint64_t i = 1; i < 1000; ++i) {
    const std::uint64_t s = derive_seed(42, i);
    CHECK(s != prev);
    prev = s;
  }
}

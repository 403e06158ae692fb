#include <doctest.h>

#include "helpers.hpp"
#include "lsape/generate.hpp"

using lsape::Family;
using lsape::GeneratorSpec;

TEST_CASE("product family") {
  GeneratorSpec spec{Family::Product, 2, 2, 0, 0, 0};
  const auto c = lsape::generate_int(spec);
  CHECK(c.data() == std::vector<std::int64_t>{1, 2, 3, 2, 4, 6, 3, 6, 0});
}

TEST_CASE("flipped product family") {
  GeneratorSpec spec{Family::FlippedProduct, 2, 2, 0, 0, 0};
  const auto c = lsape::generate_int(spec);
  CHECK(c.data() == std::vector<std::int64_t>{4, 2, 2, 2, 1, 1, 2, 1, 0});

  SUBCASE("degenerate shapes still validate") {
    for (auto [n, m] : {std::pair{0, 4}, {4, 0}, {0, 0}, {1, 1}}) {
      GeneratorSpec s{Family::FlippedProduct, n, m, 0, 0, 0};
      CHECK_NOTHROW(lsape::generate_int(s));
    }
  }
}

TEST_CASE("uniform random family") {
  GeneratorSpec spec{Family::UniformRandom, 5, 7, 42, 0.0, 10.0};

  SUBCASE("same spec, same matrix") {
    CHECK(lsape::generate(spec) == lsape::generate(spec));
    CHECK(lsape::generate_int(spec) == lsape::generate_int(spec));
    GeneratorSpec other = spec;
    other.seed = 43;
    CHECK(lsape::generate(other) != lsape::generate(spec));
  }

  SUBCASE("values stay inside the range") {
    const auto c = lsape::generate(spec);
    for (double v : c.data()) {
      CHECK(v >= 0.0);
      CHECK(v < 10.0);
    }
    const auto ci = lsape::generate_int(spec);
    for (std::int64_t v : ci.data()) {
      CHECK(v >= 0);
      CHECK(v <= 10);
    }
  }

  SUBCASE("corner is forced to zero") {
    const auto c = lsape::generate(spec);
    CHECK(c.at(6, 8) == 0.0);
  }

  SUBCASE("invalid ranges are rejected") {
    GeneratorSpec bad = spec;
    bad.lo = -1.0;
    CHECK_THROWS_AS(lsape::generate(bad), std::invalid_argument);
    bad.lo = 5.0;
    bad.hi = 1.0;
    CHECK_THROWS_AS(lsape::generate(bad), std::invalid_argument);
  }
}

TEST_CASE("splitmix64 reference sequence") {
  // first outputs for seed 1234567, as published for the algorithm
  lsape::SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
}

#include <doctest.h>

#include "oracles.hpp"
#include "stsd/generator.hpp"
#include "stsd/rng.hpp"

using namespace stsd;

TEST_CASE("random systems are Steiner") {
  for (std::uint32_t v : {7u, 9u, 13u, 15u, 21u, 31u, 45u}) {
    CAPTURE(v);
    const auto s = random_sts(v, 17);
    CHECK(s.order() == v);
    CHECK(oracle::is_sts(s));
  }
  CHECK_THROWS_AS(random_sts(11, 1), PreconditionError);
  CHECK_THROWS_AS(random_sts(3, 1), PreconditionError);
}

TEST_CASE("generation is deterministic in the seed") {
  CHECK(random_sts(31, 5) == random_sts(31, 5));
  CHECK_FALSE(random_sts(31, 5) == random_sts(31, 6));
}

TEST_CASE("step cap raises GeneratorError") { CHECK_THROWS_AS(random_sts(99, 1, 10), GeneratorError); }

TEST_CASE("rng") {
  Rng a(1), b(1);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(9);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
  CHECK(derive_seed(3, 0) != derive_seed(3, 1));
  CHECK(derive_seed(3, 0) == derive_seed(3, 0));
  // First outputs of SplitMix64 from state 0.
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xE220A8397B1DCDAFull);
}

TEST_CASE("survey") {
  const auto r = colouring_survey(9, 5, 1);
  CHECK(r.m == 4);
  CHECK(r.at_m == 5);
  CHECK(r.outcomes.size() == 5);

  const auto one = colouring_survey(15, 6, 7, 5, 1);
  const auto three = colouring_survey(15, 6, 7, 5, 3);
  CHECK(one.outcomes == three.outcomes);
  CHECK(one.at_m + one.at_m1 + one.at_m2 + one.failed + one.generator_failures == 6);
  CHECK(std::string(to_string(SurveyOutcome::kAtM1)) == "m+1");
}

#pragma once

// Random Steiner triple systems by hill climbing, and a survey of how hard
// they are to colour heuristically.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stsd/designs.hpp"

namespace stsd {

/// Thrown when the hill climb hits its step cap.
class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stinson's hill climb: pick a point x with an uncovered pair, two uncovered
/// partners y, z of x; add {x,y,z}, first removing the triple through {y,z}
/// if there is one. Requires v = 1, 3 (mod 6), v >= 7. Deterministic in seed.
TripleSystem random_sts(std::uint32_t v, std::uint64_t seed, std::uint64_t step_cap = 10'000'000);

enum class SurveyOutcome : std::uint8_t { kAtM, kAtM1, kAtM2, kFailed, kGeneratorFailed };
const char* to_string(SurveyOutcome outcome);

struct SurveyResult {
  std::uint32_t v = 0;
  std::uint32_t m = 0;
  std::size_t at_m = 0;
  std::size_t at_m1 = 0;
  std::size_t at_m2 = 0;
  std::size_t failed = 0;
  std::size_t generator_failures = 0;
  std::vector<SurveyOutcome> outcomes;  // per system, in index order
};

/// Generates `count` systems (system i from derive_seed(seed, i)) and records
/// the least target among m, m+1, m+2 the heuristic reaches. The result does
/// not depend on `threads`.
SurveyResult colouring_survey(std::uint32_t v, std::size_t count, std::uint64_t seed, std::size_t restarts = 20,
                              unsigned threads = 1);

}  // namespace stsd

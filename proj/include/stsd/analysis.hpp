#pragma once

// Parallel classes, disjoint-class packings, structural upper bounds on
// packings, and chromatic index (exact and heuristic).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stsd/constructions.hpp"
#include "stsd/designs.hpp"
#include "stsd/factorisation.hpp"

namespace stsd {

/// Limits for exhaustive searches. Running out yields
/// SearchStatus::kInconclusive, never a silently truncated answer.
struct SearchBudget {
  std::uint64_t node_limit = 100'000'000;
  double time_limit_seconds = 60.0;
  /// Stop enumerating parallel classes after this many.
  std::optional<std::size_t> class_cap;

  /// Defaults, overridden by STSD_BUDGET_NODES / STSD_BUDGET_SECONDS.
  static SearchBudget from_env();
};

enum class SearchStatus { kComplete, kInconclusive };
const char* to_string(SearchStatus status);

struct ParallelClassList {
  std::vector<PartialParallelClass> classes;  // each sorted; list sorted lexicographically
  SearchStatus status = SearchStatus::kComplete;
  std::uint64_t nodes = 0;
};

/// All parallel classes by exact cover, branching on the uncovered point
/// with fewest admissible triples (ties: smallest point). Requires v = 3 (mod 6).
ParallelClassList enumerate_parallel_classes(const TripleSystem& system, const SearchBudget& budget = {});

struct PackingResult {
  std::size_t size = 0;         // best packing found
  std::size_t upper_bound = 0;  // equals size when complete
  std::vector<PartialParallelClass> witness;
  SearchStatus status = SearchStatus::kComplete;
  std::size_t classes_considered = 0;
  std::uint64_t nodes = 0;
};

/// Maximum number of pairwise triple-disjoint parallel classes.
PackingResult max_disjoint_pcs(const TripleSystem& system, const SearchBudget& budget = {});

enum class BoundMethod { kMod3Weighting, kWsWeightArgument, kExhaustive };
const char* to_string(BoundMethod method);

/// A proven upper bound on the number of pairwise disjoint parallel classes.
struct PCBoundCertificate {
  std::size_t bound = 0;
  BoundMethod method = BoundMethod::kExhaustive;

  // mod-3 weighting
  std::vector<std::uint8_t> weighting;
  std::uint32_t nonzero_sum = 0;      // the common nonzero triple weight s
  std::size_t zero_sum_triples = 0;   // t_0
  std::size_t min_zero_per_class = 0; // a_min

  // weight argument over G(n)
  std::uint64_t f = 0;
  std::size_t type_i = 0;    // classes through {inf0,inf1,inf2}
  std::size_t type_ii = 0;   // nonzero-weight edges in factor 0
  std::size_t type_iii = 0;  // pairs of zero-weight edges in factors 1, 2

  // exhaustive
  std::string transcript_digest;
};

/// Bound from a point weighting w: points -> Z_3 with total weight 0 in
/// which every triple sums to 0 or to one fixed s != 0. Every parallel class
/// then needs at least a_min zero-sum triples, so at most t_0 / a_min
/// classes are disjoint. Throws PreconditionError if the hypotheses fail.
PCBoundCertificate pc_bound_mod3(const TripleSystem& system, std::span<const std::uint8_t> weighting);
/// Natural weighting of a labelled system: the Z_3 coordinate for Bose, p mod 3 for the STS(33).
std::vector<std::uint8_t> natural_weighting(const LabelledSTS& sts);
/// Tries the Bose-layout coordinate and p mod 3; returns the best valid certificate.
std::optional<PCBoundCertificate> pc_bound_mod3_auto(const TripleSystem& system);

/// 3 f(n) + 1 for Wilson-Schreiber systems built from `fact`. Refuses
/// (PreconditionError) unless `fact` has the weight properties with f = f(n).
PCBoundCertificate pc_bound_ws(std::uint32_t n, const OneFactorisation& fact);
/// Recovers the factorisation from a system in Wilson-Schreiber point layout.
OneFactorisation recover_ws_factorisation(const TripleSystem& system);

/// Wraps a completed max_disjoint_pcs search; nullopt if inconclusive.
std::optional<PCBoundCertificate> pc_bound_exhaustive(const TripleSystem& system, const SearchBudget& budget = {});

struct ChromaticOptions {
  const PCBoundCertificate* certificate = nullptr;
  const Colouring* upper_witness = nullptr;
};

struct ChromaticResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  SearchStatus status = SearchStatus::kComplete;
  std::optional<Colouring> colouring;  // realises `upper`
  std::uint64_t nodes = 0;
  std::string lower_reason;

  bool exact() const { return lower == upper; }
};

/// Branch and bound over triple-to-class assignments (DSATUR order, new
/// classes opened only in index order). Lower bound is the largest of
/// m(v), a greedy clique, and (v+3)/2 when a certificate shows fewer than
/// (v+3)/6 disjoint parallel classes.
ChromaticResult chromatic_index_exact(const TripleSystem& system, const SearchBudget& budget = {},
                                      const ChromaticOptions& options = {});

struct HeuristicOptions {
  std::size_t restarts = 20;
  std::uint64_t iterations_per_restart = 20'000;
};

/// Randomised first-fit followed by tabu repair with Kempe-chain swaps.
/// Returns a verified colouring with at most `target` classes, or nullopt.
std::optional<Colouring> chromatic_index_heuristic(const TripleSystem& system, std::size_t target, std::uint64_t seed,
                                                   const HeuristicOptions& options = {});

enum class Theorem1Verdict {
  kUniqueLowIndex,     // v in {3, 9}
  kExternal,           // v = 21
  kFixture,            // v = 33
  kPossibleException,  // v in {45, 75, 129, 513}
  kCertified,
  kNotCertified,
};
const char* to_string(Theorem1Verdict verdict);

struct Theorem1Report {
  std::uint32_t v = 0;
  Theorem1Verdict verdict = Theorem1Verdict::kNotCertified;
  std::optional<std::uint64_t> f;          // f(v-2) where applicable
  std::optional<std::size_t> pc_bound;     // certified packing bound
  std::size_t threshold = 0;               // (v+3)/6
  std::optional<std::size_t> index_lower;  // proven chromatic-index lower bound
  bool system_verified = false;
  std::string summary;
};

/// Orders other than 3 (mod 6) come back kNotCertified.
Theorem1Report theorem1_pipeline(std::uint32_t v);

}  // namespace stsd

#pragma once

// The cubic graph G(n) on Z_n \ {0} (edges {x,-2x} and {x,-x}) and its
// weight-balanced 1-factorisation, assembled from factorisations of the
// Cayley graphs Cay(Z*_d, {-1,-2}) over the divisors d of n.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stsd/designs.hpp"

namespace stsd {

struct Edge {
  std::uint32_t u = 0;  // u < v
  std::uint32_t v = 0;

  static Edge make(std::uint32_t a, std::uint32_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Graph on a subset of Z_n; the weight of {x,y} is x + y mod n.
struct WeightedGraph {
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> vertices;  // ascending
  std::vector<Edge> edges;              // ascending

  std::uint32_t weight(const Edge& e) const { return (e.u + e.v) % modulus; }
};

/// Requires n = 1 (mod 6), n >= 7.
WeightedGraph build_G(std::uint32_t n);
/// Cay(Z*_d, {-1,-2}) for odd d >= 3.
WeightedGraph build_cayley(std::uint32_t d);

/// Three edge sets, each sorted, over a host graph with the given modulus.
struct OneFactorisation {
  std::uint32_t modulus = 0;
  std::array<std::vector<Edge>, 3> factors;
};

/// The factorisation {M_0, M_1, M_2} of Cay(Z*_d, {-1,-2}), built on the
/// component X = <-1,-2>_d from the sequence x_i = (-2)^i and translated to
/// each coset aX (smallest unused residue first).
OneFactorisation factorise_component(std::uint32_t d);

/// Union over divisors d > 1 of n of the component factorisations, each
/// mapped into Z_n by x -> (n/d) x.
OneFactorisation factorise_G(std::uint32_t n);

/// Checks that `fact` is a 1-factorisation of `host` and that
///   1. edges of weights w and -w (w != 0) share a factor,
///   2. factor 0 has exactly 2 f_n edges of nonzero weight,
///   3. factors 1 and 2 together have exactly 2 f_n edges of weight 0.
/// Everything is recounted from the edge lists.
VerificationReport verify_factorisation_properties(const WeightedGraph& host, const OneFactorisation& fact,
                                                   std::uint64_t f_n);
/// Same, against G(fact.modulus).
VerificationReport verify_factorisation_properties(const OneFactorisation& fact, std::uint64_t f_n);

/// "FACTOR i" headers followed by "x y w" lines.
void write_factorisation(std::ostream& out, const OneFactorisation& fact);
std::string factorisation_to_string(const OneFactorisation& fact);

}  // namespace stsd

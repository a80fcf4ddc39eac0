#pragma once

// Explicit Steiner triple systems: the modified Wilson-Schreiber
// construction over G(n), the Bose construction from idempotent symmetric
// Latin squares, and a fixed cyclic STS(33) with an 18-class colouring.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stsd/designs.hpp"
#include "stsd/factorisation.hpp"

namespace stsd {

class LatinSquare {
 public:
  LatinSquare() = default;
  LatinSquare(std::uint32_t n, std::vector<std::uint32_t> cells);

  std::uint32_t order() const { return n_; }
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return cells_[row * n_ + col]; }

  bool is_latin() const;
  bool is_idempotent() const;
  bool is_symmetric() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> cells_;
};

/// L(i,j) = (i+j)/2 mod n, n odd.
LatinSquare half_sum_square(std::uint32_t n);
/// L'(x,y) = perm(L(perm^-1 x, perm^-1 y)).
LatinSquare conjugate_square(const LatinSquare& square, std::span<const std::uint32_t> perm);
/// Conjugate of the half-sum square by a permutation drawn from `seed`.
LatinSquare random_conjugate_square(std::uint32_t n, std::uint64_t seed);

enum class ConstructionKind { kPlain, kWilsonSchreiber, kBose, kSts33 };

enum class TripleFamily : std::uint8_t {
  kUnspecified,
  kZeroSum,      // A_0: zero-sum triples of Z_n \ {0}
  kInfinite,     // A_inf: triples through an infinite point
  kBoseStar,     // {(x,0),(x,1),(x,2)}
  kBoseLevel0,   // {(x,i),(y,i),(L_i(x,y),i+1)} for i = 0,1,2
  kBoseLevel1,
  kBoseLevel2,
  kTransversal,  // {i, 11+i, 22+i} in the STS(33)
  kDeveloped,    // developed base blocks in the STS(33)
};

struct PointLabel {
  enum class Kind : std::uint8_t { kResidue, kInfinity, kPair };
  Kind kind = Kind::kResidue;
  std::uint32_t value = 0;  // residue, infinity index, or x of (x,i)
  std::uint32_t level = 0;  // i of (x,i)

  std::string str() const;
};

/// A triple system with its natural point labels and triple families.
/// labels[p] names internal point p; family[t] tags triple index t.
struct LabelledSTS {
  TripleSystem system;
  std::vector<PointLabel> labels;
  std::vector<TripleFamily> family;
  ConstructionKind kind = ConstructionKind::kPlain;
  std::uint32_t parameter = 0;  // n for Wilson-Schreiber and Bose

  std::size_t family_size(TripleFamily f) const;
};

/// STS(n+2) on Z_n \ {0} plus three infinite points. Internal order is
/// 1,...,n-1 then inf_0, inf_1, inf_2. The result is not re-verified: a
/// `fact` that is not a 1-factorisation of G(n) yields a non-Steiner system.
LabelledSTS wilson_schreiber(std::uint32_t n, const OneFactorisation& fact);
/// Wilson-Schreiber with the weight-balanced factorisation of G(n).
LabelledSTS wilson_schreiber(std::uint32_t n);

/// STS(3n) on X x Z_3 with (x,i) stored as x + n*i. Requires n = 5 (mod 6)
/// and idempotent symmetric squares of order n.
LabelledSTS bose(const LatinSquare& l0, const LatinSquare& l1, const LatinSquare& l2);

struct Sts33Fixture {
  LabelledSTS sts;
  Colouring colouring;
};

/// The cyclic STS(33) on Z_33 with 18-class colouring.
Sts33Fixture sts33_fixture();

/// For a Bose system, whether (x,i) -> (x+1, i+1) is an automorphism whose
/// single orbit covers all 3n points.
bool verify_cyclic(const LabelledSTS& sts);
/// Same test on a bare system of order 3n in the Bose point layout.
bool verify_cyclic(const TripleSystem& system);

}  // namespace stsd

#pragma once

// Core value types for triple systems and their colourings.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stsd {

using Point = std::uint32_t;
using Triple = std::array<Point, 3>;

/// Thrown when an operation's precondition is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

enum class ViolationKind {
  kMalformedTriple,
  kDuplicatePair,
  kUncoveredPair,
  kWrongTripleCount,
  kBadIndex,
  kOverlappingAssignment,
  kMissingTriple,
  kIntersectingClass,
  kStructure,
  kProperty,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Outcome of a verifier. Only the first `kMaxRecorded` violations are kept
/// verbatim; `violation_count` is always the full total.
struct VerificationReport {
  static constexpr std::size_t kMaxRecorded = 64;

  bool ok = true;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  std::size_t class_count = 0;

  void add(ViolationKind kind, std::string message);
  const Violation* first() const { return violations.empty() ? nullptr : &violations.front(); }
  bool mentions(std::string_view fragment) const;
  bool has(ViolationKind kind) const;
};

/// A set of 3-subsets of {0,...,v-1}. Triples are kept sorted internally and
/// the list is sorted lexicographically, so indices are canonical. The type
/// does not require the Steiner property; use verify_sts for that.
class TripleSystem {
 public:
  TripleSystem() = default;
  /// Throws PreconditionError on out-of-range points or duplicate triples.
  TripleSystem(Point v, std::vector<Triple> triples);

  Point order() const { return v_; }
  std::size_t size() const { return triples_.size(); }
  std::span<const Triple> triples() const { return triples_; }
  const Triple& operator[](std::size_t i) const { return triples_[i]; }
  std::optional<std::size_t> index_of(Triple t) const;

  /// Indices of triples containing each point.
  std::vector<std::vector<std::size_t>> point_incidence() const;

  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;

 private:
  Point v_ = 0;
  std::vector<Triple> triples_;
};

Triple sorted_triple(Point a, Point b, Point c);
bool triples_intersect(const Triple& a, const Triple& b);
std::string format_triple(const Triple& t);

/// Triple indices forming pairwise disjoint triples of a host system.
using PartialParallelClass = std::vector<std::size_t>;

struct Colouring {
  std::vector<PartialParallelClass> classes;

  std::size_t class_count() const { return classes.size(); }
  /// Sorts members of each class, then orders classes by their first member.
  void canonicalise();
};

VerificationReport verify_sts(const TripleSystem& system);
VerificationReport verify_colouring(const TripleSystem& system, const Colouring& colouring);

/// Least chromatic index allowed by class sizes: (v-1)/2 or (v+1)/2.
std::uint32_t m_lower(std::uint32_t v);

/// An STS(v), v = 3 (mod 6), whose chromatic index is at most (v+1)/2 has at
/// least this many pairwise disjoint parallel classes.
std::uint32_t min_pc_for_low_chi(std::uint32_t v);

bool is_admissible_order(std::uint64_t v);

}  // namespace stsd

#include "stsd/constructions.hpp"

#include <algorithm>
#include <utility>

namespace stsd {
namespace {

using TaggedTriple = std::pair<Triple, TripleFamily>;

LabelledSTS assemble(Point v, std::vector<TaggedTriple> tagged, std::vector<PointLabel> labels,
                     ConstructionKind kind, std::uint32_t parameter) {
  for (auto& [t, fam] : tagged) std::sort(t.begin(), t.end());
  std::sort(tagged.begin(), tagged.end());
  std::vector<Triple> triples;
  std::vector<TripleFamily> family;
  triples.reserve(tagged.size());
  family.reserve(tagged.size());
  for (const auto& [t, fam] : tagged) {
    triples.push_back(t);
    family.push_back(fam);
  }
  LabelledSTS out;
  out.system = TripleSystem(v, std::move(triples));
  out.labels = std::move(labels);
  out.family = std::move(family);
  out.kind = kind;
  out.parameter = parameter;
  return out;
}

}  // namespace

std::string PointLabel::str() const {
  switch (kind) {
    case Kind::kResidue:
      return std::to_string(value);
    case Kind::kInfinity:
      return "inf" + std::to_string(value);
    case Kind::kPair:
      return "(" + std::to_string(value) + "," + std::to_string(level) + ")";
  }
  return "?";
}

std::size_t LabelledSTS::family_size(TripleFamily f) const {
  return static_cast<std::size_t>(std::count(family.begin(), family.end(), f));
}

LabelledSTS wilson_schreiber(std::uint32_t n, const OneFactorisation& fact) {
  require(n >= 7 && n % 6 == 1, "Wilson-Schreiber needs n = 1 (mod 6), n >= 7, got " + std::to_string(n));
  require(fact.modulus == n, "factorisation is over Z_" + std::to_string(fact.modulus) + ", expected Z_" +
                                 std::to_string(n));
  auto residue = [](std::uint32_t x) { return static_cast<Point>(x - 1); };
  const Point inf0 = n - 1;

  std::vector<TaggedTriple> tagged;
  for (std::uint32_t a = 1; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      const std::uint32_t c = (2 * n - a - b) % n;
      if (c > b) tagged.push_back({Triple{residue(a), residue(b), residue(c)}, TripleFamily::kZeroSum});
    }
  }
  for (std::uint32_t i = 0; i < 3; ++i) {
    for (const Edge& e : fact.factors[i]) {
      require(e.u >= 1 && e.v < n && e.u < e.v, "factorisation edge outside Z_n \\ {0}");
      tagged.push_back({Triple{residue(e.u), residue(e.v), inf0 + i}, TripleFamily::kInfinite});
    }
  }
  tagged.push_back({Triple{inf0, inf0 + 1, inf0 + 2}, TripleFamily::kInfinite});

  std::vector<PointLabel> labels;
  for (std::uint32_t x = 1; x < n; ++x) labels.push_back({PointLabel::Kind::kResidue, x, 0});
  for (std::uint32_t i = 0; i < 3; ++i) labels.push_back({PointLabel::Kind::kInfinity, i, 0});
  return assemble(n + 2, std::move(tagged), std::move(labels), ConstructionKind::kWilsonSchreiber, n);
}

LabelledSTS wilson_schreiber(std::uint32_t n) { return wilson_schreiber(n, factorise_G(n)); }

LabelledSTS bose(const LatinSquare& l0, const LatinSquare& l1, const LatinSquare& l2) {
  const std::uint32_t n = l0.order();
  require(n % 6 == 5, "Bose construction here needs order n = 5 (mod 6), got " + std::to_string(n));
  const LatinSquare* squares[3] = {&l0, &l1, &l2};
  for (int i = 0; i < 3; ++i) {
    const LatinSquare& sq = *squares[i];
    require(sq.order() == n, "Latin squares must share one order");
    require(sq.is_latin(), "square L" + std::to_string(i) + " is not Latin");
    require(sq.is_idempotent(), "square L" + std::to_string(i) + " is not idempotent");
    require(sq.is_symmetric(), "square L" + std::to_string(i) + " is not symmetric");
  }
  auto pt = [n](std::uint32_t x, std::uint32_t level) { return static_cast<Point>(x + n * (level % 3)); };
  const TripleFamily level_family[3] = {TripleFamily::kBoseLevel0, TripleFamily::kBoseLevel1,
                                        TripleFamily::kBoseLevel2};

  std::vector<TaggedTriple> tagged;
  for (std::uint32_t x = 0; x < n; ++x) tagged.push_back({Triple{pt(x, 0), pt(x, 1), pt(x, 2)}, TripleFamily::kBoseStar});
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = x + 1; y < n; ++y)
        tagged.push_back({Triple{pt(x, i), pt(y, i), pt(squares[i]->at(x, y), i + 1)}, level_family[i]});

  std::vector<PointLabel> labels;
  for (std::uint32_t level = 0; level < 3; ++level)
    for (std::uint32_t x = 0; x < n; ++x) labels.push_back({PointLabel::Kind::kPair, x, level});
  return assemble(3 * n, std::move(tagged), std::move(labels), ConstructionKind::kBose, n);
}

bool verify_cyclic(const TripleSystem& system) {
  const Point v = system.order();
  if (v == 0 || v % 3 != 0) return false;
  const Point n = v / 3;
  auto rho = [n](Point p) {
    const Point x = p % n;
    const Point level = p / n;
    return static_cast<Point>((x + 1) % n + n * ((level + 1) % 3));
  };
  for (const Triple& t : system.triples())
    if (!system.index_of(sorted_triple(rho(t[0]), rho(t[1]), rho(t[2])))) return false;
  Point p = 0;
  Point orbit = 0;
  do {
    p = rho(p);
    ++orbit;
  } while (p != 0);
  return orbit == v;
}

bool verify_cyclic(const LabelledSTS& sts) {
  if (sts.kind != ConstructionKind::kBose) return false;
  return verify_cyclic(sts.system);
}

}  // namespace stsd

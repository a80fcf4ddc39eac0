#include <algorithm>

#include "stsd/constructions.hpp"

namespace stsd {
namespace {

constexpr std::uint32_t kOrder = 33;

// Base differences: block {0, x, y} developed over Z_33.
constexpr std::array<std::array<std::uint32_t, 2>, 5> kBaseBlocks = {{{3, 7}, {5, 17}, {13, 15}, {8, 14}, {9, 10}}};

// Colour class developed under x -> x + 3 (mod 33) into 11 classes.
constexpr std::array<Triple, 10> kShiftedClass = {{{0, 23, 32},
                                                    {1, 13, 29},
                                                    {2, 5, 9},
                                                    {3, 8, 20},
                                                    {4, 12, 18},
                                                    {7, 16, 17},
                                                    {10, 15, 27},
                                                    {11, 24, 26},
                                                    {14, 22, 28},
                                                    {21, 30, 31}}};

// The remaining six classes, verbatim.
const std::vector<std::vector<Triple>> kExtraClasses = {
    {{0, 8, 14}, {1, 5, 31}, {2, 21, 29}, {4, 6, 24}, {7, 9, 27}, {10, 13, 17}, {12, 20, 26}, {15, 18, 22},
     {16, 19, 23}, {25, 28, 32}},
    {{0, 3, 7}, {1, 27, 30}, {4, 17, 19}, {6, 14, 20}, {8, 10, 28}, {9, 12, 16}, {11, 13, 31}, {18, 26, 32},
     {22, 25, 29}},
    {{0, 4, 30}, {1, 14, 16}, {3, 6, 10}, {7, 20, 22}, {9, 17, 23}, {12, 15, 19}, {13, 26, 28}, {18, 21, 25},
     {24, 27, 31}},
    {{0, 13, 15}, {1, 4, 8}, {2, 28, 31}, {3, 16, 18}, {5, 11, 30}, {6, 19, 21}, {7, 10, 14}, {9, 22, 24},
     {12, 25, 27}},
    {{0, 18, 31}, {1, 19, 32}, {2, 4, 22}, {3, 11, 17}, {5, 7, 25}, {10, 12, 30}, {13, 16, 20}, {15, 23, 29},
     {21, 24, 28}},
    {{1, 3, 21}, {2, 8, 27}, {4, 7, 11}, {5, 24, 32}, {6, 9, 13}, {10, 23, 25}, {15, 28, 30}, {16, 29, 31},
     {19, 22, 26}},
};

Triple shifted(const Triple& t, std::uint32_t by) {
  return sorted_triple((t[0] + by) % kOrder, (t[1] + by) % kOrder, (t[2] + by) % kOrder);
}

}  // namespace

Sts33Fixture sts33_fixture() {
  std::vector<std::pair<Triple, TripleFamily>> tagged;
  for (std::uint32_t i = 0; i < 11; ++i) tagged.push_back({Triple{i, 11 + i, 22 + i}, TripleFamily::kTransversal});
  for (const auto& [x, y] : kBaseBlocks)
    for (std::uint32_t i = 0; i < kOrder; ++i)
      tagged.push_back({shifted(Triple{0, x, y}, i), TripleFamily::kDeveloped});
  std::sort(tagged.begin(), tagged.end());

  Sts33Fixture fx;
  std::vector<Triple> triples;
  for (const auto& [t, fam] : tagged) {
    triples.push_back(t);
    fx.sts.family.push_back(fam);
  }
  fx.sts.system = TripleSystem(kOrder, std::move(triples));
  for (std::uint32_t p = 0; p < kOrder; ++p) fx.sts.labels.push_back({PointLabel::Kind::kResidue, p, 0});
  fx.sts.kind = ConstructionKind::kSts33;
  fx.sts.parameter = 11;

  // A listed triple missing from the system is a transcription error.
  auto index = [&](const Triple& t) {
    auto idx = fx.sts.system.index_of(t);
    if (!idx) throw std::logic_error("STS(33) colouring lists " + format_triple(t) + ", which is not a block");
    return *idx;
  };
  PartialParallelClass transversal;
  for (std::uint32_t i = 0; i < 11; ++i) transversal.push_back(index(Triple{i, 11 + i, 22 + i}));
  fx.colouring.classes.push_back(std::move(transversal));
  for (std::uint32_t j = 0; j < 11; ++j) {
    PartialParallelClass cls;
    for (const Triple& t : kShiftedClass) cls.push_back(index(shifted(t, 3 * j)));
    fx.colouring.classes.push_back(std::move(cls));
  }
  for (const auto& listed : kExtraClasses) {
    PartialParallelClass cls;
    for (const Triple& t : listed) cls.push_back(index(t));
    fx.colouring.classes.push_back(std::move(cls));
  }
  for (auto& cls : fx.colouring.classes) std::sort(cls.begin(), cls.end());
  return fx;
}

}  // namespace stsd

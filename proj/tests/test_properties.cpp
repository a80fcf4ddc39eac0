#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "stsd/analysis.hpp"
#include "stsd/generator.hpp"
#include "stsd/numtheory.hpp"
#include "stsd/rng.hpp"
#include "stsd/text_format.hpp"

using namespace stsd;

namespace {

constexpr std::uint32_t kOrders[] = {7, 9, 13, 15, 19, 21, 25, 27};

std::uint32_t pick_order(Rng& rng) { return kOrders[rng.below(std::size(kOrders))]; }

// Replaces one triple with a uniformly random 3-subset (possibly a repeat of
// the original, possibly already present).
std::vector<Triple> perturb(const TripleSystem& s, Rng& rng) {
  std::vector<Triple> t(s.triples().begin(), s.triples().end());
  const auto i = rng.below(t.size());
  const auto v = s.order();
  for (;;) {
    const auto a = static_cast<Point>(rng.below(v)), b = static_cast<Point>(rng.below(v)),
               c = static_cast<Point>(rng.below(v));
    if (a == b || b == c || a == c) continue;
    t[i] = sorted_triple(a, b, c);
    break;
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

// First-fit colouring in a random triple order.
Colouring random_first_fit(const TripleSystem& s, Rng& rng) {
  std::vector<std::size_t> order(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  Colouring c;
  for (std::size_t t : order) {
    bool placed = false;
    for (auto& cls : c.classes) {
      if (std::none_of(cls.begin(), cls.end(), [&](std::size_t u) { return triples_intersect(s[u], s[t]); })) {
        cls.push_back(t);
        placed = true;
        break;
      }
    }
    if (!placed) c.classes.push_back({t});
  }
  return c;
}

void corrupt(Colouring& c, std::size_t triples, Rng& rng) {
  switch (rng.below(4)) {
    case 0: {  // move a triple into another class
      auto& from = c.classes[rng.below(c.classes.size())];
      if (from.empty()) return;
      const auto t = from.back();
      from.pop_back();
      c.classes[rng.below(c.classes.size())].push_back(t);
      break;
    }
    case 1:  // drop a triple
      c.classes[rng.below(c.classes.size())].clear();
      break;
    case 2:  // assign a triple twice
      c.classes[rng.below(c.classes.size())].push_back(rng.below(triples));
      break;
    default:  // out-of-range index
      if (rng.below(2)) c.classes[0].push_back(triples + rng.below(3));
      break;
  }
}

}  // namespace

TEST_CASE("STS verifier agrees with the pair-matrix oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = pick_order(rng);
    const auto s = random_sts(v, rng.next());
    CHECK(verify_sts(s).ok);
    const TripleSystem bent(v, perturb(s, rng));
    CHECK(verify_sts(bent).ok == oracle::is_sts(bent));
  }
}

TEST_CASE("colouring verifier agrees with the quadratic oracle") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_sts(pick_order(rng), rng.next());
    auto c = random_first_fit(s, rng);
    CHECK(verify_colouring(s, c).ok);
    CHECK(oracle::is_colouring(s, c));
    corrupt(c, s.size(), rng);
    CHECK(verify_colouring(s, c).ok == oracle::is_colouring(s, c));
  }
}

TEST_CASE("text round trip on random systems") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_sts(pick_order(rng), rng.next());
    CHECK(parse_sts(sts_to_string(s)) == s);
  }
}

TEST_CASE("G(n) factorisations satisfy the weight properties for random n") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::uint32_t>(7 + 6 * rng.below(400));
    CAPTURE(n);
    CHECK(verify_factorisation_properties(factorise_G(n), nt::f_of(n)).ok);
  }
}

TEST_CASE("certified packing bounds dominate exhaustive search") {
  Rng rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    const auto b = bose(random_conjugate_square(5, rng.next()), random_conjugate_square(5, rng.next()),
                        random_conjugate_square(5, rng.next()));
    const auto cert = pc_bound_mod3(b.system, natural_weighting(b));
    const auto exact = max_disjoint_pcs(b.system);
    REQUIRE(exact.status == SearchStatus::kComplete);
    CHECK(exact.size <= cert.bound);
    CHECK(cert.bound == 2);
  }
}

TEST_CASE("exact chromatic index brackets the heuristic") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = rng.below(2) ? 9u : 13u;
    const auto s = random_sts(v, rng.next());
    const auto exact = chromatic_index_exact(s);
    REQUIRE(exact.status == SearchStatus::kComplete);
    CHECK(exact.exact());
    CHECK(exact.lower >= m_lower(v));
    CHECK(oracle::is_colouring(s, *exact.colouring));
    // Below the exact index no colouring exists for the heuristic to find.
    if (exact.upper > m_lower(v))
      CHECK_FALSE(chromatic_index_heuristic(s, exact.upper - 1, 1, HeuristicOptions{2, 2000}).has_value());
  }
}

TEST_CASE("seeded routines are reproducible") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto seed = rng.next();
    const auto v = pick_order(rng);
    CHECK(random_sts(v, seed) == random_sts(v, seed));
    const auto s = random_sts(v, seed);
    const auto a = chromatic_index_heuristic(s, m_lower(v) + 2, seed);
    const auto b = chromatic_index_heuristic(s, m_lower(v) + 2, seed);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->classes == b->classes);
  }
}

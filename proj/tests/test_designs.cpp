#include <doctest.h>

#include "oracles.hpp"
#include "stsd/designs.hpp"

using namespace stsd;

TEST_CASE("fano and AG(2,3) verify") {
  const auto f = oracle::fano();
  CHECK(f.size() == 7);
  CHECK(verify_sts(f).ok);

  const auto ag = oracle::ag23();
  CHECK(ag.size() == 12);
  const auto report = verify_sts(ag);
  CHECK(report.ok);
  CHECK(report.violation_count == 0);
}

TEST_CASE("triples are stored sorted and canonically ordered") {
  TripleSystem s(7, {{6, 0, 2}, {3, 1, 0}});
  CHECK(s[0] == Triple{0, 1, 3});
  CHECK(s[1] == Triple{0, 2, 6});
  CHECK(s.index_of({3, 0, 1}) == 0);
  CHECK_FALSE(s.index_of({0, 1, 2}).has_value());
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(TripleSystem(7, {{0, 1, 7}}), PreconditionError);
  CHECK_THROWS_AS(TripleSystem(7, {{0, 1, 3}, {3, 1, 0}}), PreconditionError);
}

TEST_CASE("replacing a Fano line reports the doubly covered pair") {
  const auto fano = oracle::fano();
  std::vector<Triple> t(fano.triples().begin(), fano.triples().end());
  std::replace(t.begin(), t.end(), Triple{0, 1, 3}, Triple{0, 1, 4});
  const auto report = verify_sts(TripleSystem(7, t));
  CHECK_FALSE(report.ok);
  CHECK(report.mentions("pair {1,4} covered twice"));
  CHECK(report.has(ViolationKind::kDuplicatePair));
  CHECK(report.has(ViolationKind::kUncoveredPair));
  // {0,1,4} doubles {1,4} and {0,4}; {0,3},{1,3} become uncovered.
  CHECK(report.violation_count == 4);
}

TEST_CASE("verify_sts catches malformed triples and wrong counts") {
  auto r = verify_sts(TripleSystem(7, {{0, 0, 1}}));
  CHECK(r.has(ViolationKind::kMalformedTriple));
  CHECK(r.has(ViolationKind::kWrongTripleCount));
  CHECK(r.mentions("expected 7 triples, found 1"));

  const auto fano = oracle::fano();
  std::vector<Triple> t(fano.triples().begin(), fano.triples().end());
  t.pop_back();
  r = verify_sts(TripleSystem(7, t));
  CHECK_FALSE(r.ok);
  CHECK(r.has(ViolationKind::kUncoveredPair));
}

TEST_CASE("verification report keeps a bounded prefix") {
  // Triples on 0..2 repeated shapes in a large order: many uncovered pairs.
  const auto r = verify_sts(TripleSystem(99, {{0, 1, 2}}));
  CHECK(r.violations.size() == VerificationReport::kMaxRecorded);
  CHECK(r.violation_count > VerificationReport::kMaxRecorded);
  REQUIRE(r.first() != nullptr);
}

TEST_CASE("m_lower") {
  CHECK(m_lower(9) == 4);
  CHECK(m_lower(13) == 7);
  CHECK(m_lower(33) == 16);
  CHECK(m_lower(7) == 4);
  CHECK_THROWS_AS(m_lower(11), PreconditionError);
}

TEST_CASE("min_pc_for_low_chi") {
  CHECK(min_pc_for_low_chi(15) == 3);
  CHECK(min_pc_for_low_chi(33) == 6);
  CHECK(min_pc_for_low_chi(9) == 2);
  CHECK_THROWS_AS(min_pc_for_low_chi(13), PreconditionError);

  // The counting behind it: p full classes of v/3 triples and (v+1)/2 - p
  // classes of at most (v-3)/3 cannot cover v(v-1)/6 triples when p is smaller.
  for (std::uint32_t v = 9; v < 400; v += 6) {
    const std::uint32_t p = min_pc_for_low_chi(v);
    auto covers = [v](std::uint32_t q) { return q * (v / 3) + ((v + 1) / 2 - q) * ((v - 3) / 3) >= v * (v - 1) / 6; };
    CHECK(covers(p));
    CHECK_FALSE(covers(p - 1));
  }
}

TEST_CASE("verify_colouring") {
  const auto ag = oracle::ag23();
  // Parallel classes of AG(2,3) are its four directions.
  Colouring c;
  std::vector<std::vector<std::size_t>> by_direction(4);
  for (std::size_t i = 0; i < ag.size(); ++i) {
    const Triple& t = ag[i];
    const int dx = static_cast<int>((t[1] / 3 + 3 - t[0] / 3) % 3), dy = static_cast<int>((t[1] % 3 + 3 - t[0] % 3) % 3);
    const int dir = dx == 0 ? 0 : dy == 0 ? 1 : (dx == dy ? 2 : 3);
    by_direction[static_cast<std::size_t>(dir)].push_back(i);
  }
  c.classes = by_direction;
  auto r = verify_colouring(ag, c);
  CHECK(r.ok);
  CHECK(r.class_count == 4);

  const auto f = oracle::fano();
  Colouring singles;
  for (std::size_t i = 0; i < f.size(); ++i) singles.classes.push_back({i});
  r = verify_colouring(f, singles);
  CHECK(r.ok);
  CHECK(r.class_count == 7);

  Colouring bad = singles;
  const auto i013 = *f.index_of({0, 1, 3}), i124 = *f.index_of({1, 2, 4});
  bad.classes[i013].push_back(i124);
  bad.classes.erase(bad.classes.begin() + static_cast<std::ptrdiff_t>(i124));
  r = verify_colouring(f, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.mentions("share point 1"));

  Colouring missing = singles;
  missing.classes.pop_back();
  CHECK(verify_colouring(f, missing).has(ViolationKind::kMissingTriple));

  Colouring twice = singles;
  twice.classes.push_back({0});
  CHECK(verify_colouring(f, twice).has(ViolationKind::kOverlappingAssignment));

  Colouring out_of_range = singles;
  out_of_range.classes.push_back({99});
  CHECK(verify_colouring(f, out_of_range).has(ViolationKind::kBadIndex));
}

TEST_CASE("canonicalise orders classes") {
  Colouring c;
  c.classes = {{5, 3}, {2, 0}};
  c.canonicalise();
  CHECK(c.classes == std::vector<PartialParallelClass>{{0, 2}, {3, 5}});
}

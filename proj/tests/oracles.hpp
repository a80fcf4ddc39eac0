#pragma once

// Independent reference implementations for the tests. Deliberately naive:
// nothing here calls into the search or verification code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "stsd/designs.hpp"

namespace oracle {

using stsd::Point;
using stsd::Triple;
using stsd::TripleSystem;

inline TripleSystem fano() {
  std::vector<Triple> t;
  for (Point i = 0; i < 7; ++i) t.push_back(stsd::sorted_triple(i, (i + 1) % 7, (i + 3) % 7));
  return TripleSystem(7, t);
}

/// Lines of AG(2,3), point (x,y) -> 3x + y.
inline TripleSystem ag23() {
  std::set<Triple> lines;
  for (Point a = 0; a < 9; ++a)
    for (Point b = a + 1; b < 9; ++b) {
      const Point x = (6 - a / 3 - b / 3) % 3, y = (6 - a % 3 - b % 3) % 3;
      lines.insert(stsd::sorted_triple(a, b, 3 * x + y));
    }
  return TripleSystem(9, {lines.begin(), lines.end()});
}

/// Pair-coverage matrix check.
inline bool is_sts(const TripleSystem& s) {
  const Point v = s.order();
  std::vector<int> count(std::size_t{v} * v, 0);
  for (const Triple& t : s.triples()) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return false;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) ++count[std::size_t{t[i]} * v + t[j]];
  }
  for (Point a = 0; a < v; ++a)
    for (Point b = 0; b < v; ++b)
      if (a != b && count[std::size_t{a} * v + b] != 1) return false;
  return true;
}

/// O(b^2) colouring check: partition plus pairwise disjointness in classes.
inline bool is_colouring(const TripleSystem& s, const stsd::Colouring& c) {
  std::vector<int> seen(s.size(), 0);
  for (const auto& cls : c.classes) {
    for (std::size_t t : cls) {
      if (t >= s.size()) return false;
      ++seen[t];
    }
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        for (Point p : s[cls[i]])
          for (Point q : s[cls[j]])
            if (p == q) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (gcd(k, n) == 1) ++c;
  return c;
}

/// <-1,-2> in Z*_d as an explicit set, by repeated multiplication.
inline std::set<std::uint64_t> subgroup_set(std::uint64_t d) {
  std::set<std::uint64_t> group{1 % d};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint64_t x : std::vector<std::uint64_t>(group.begin(), group.end()))
      for (std::uint64_t gen : {d - 1, d - 2})
        if (group.insert(x * gen % d).second) grew = true;
  }
  return group;
}

inline std::uint64_t g(std::uint64_t d) {
  const std::uint64_t order = subgroup_set(d).size();
  return order % 4 == 0 ? 0 : phi(d) / order;
}

inline std::uint64_t f(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0) total += g(d);
  return total;
}

/// Zero-sum 3-subsets of Z_n \ {0}.
inline std::size_t zero_sum_triples(std::uint32_t n) {
  std::size_t c = 0;
  for (std::uint32_t a = 1; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      for (std::uint32_t d = b + 1; d < n; ++d)
        if ((a + b + d) % n == 0) ++c;
  return c;
}

/// All parallel classes: every increasing choice of v/3 pairwise disjoint triples.
inline std::vector<std::vector<std::size_t>> parallel_classes(const TripleSystem& s) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  std::vector<char> used(s.order(), 0);
  const std::size_t want = s.order() / 3;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == want) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t t = from; t < s.size(); ++t) {
      const Triple& tr = s[t];
      if (used[tr[0]] || used[tr[1]] || used[tr[2]]) continue;
      for (Point p : tr) used[p] = 1;
      chosen.push_back(t);
      self(self, t + 1);
      chosen.pop_back();
      for (Point p : tr) used[p] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

/// Largest set of classes pairwise sharing no triple, by plain recursion.
inline std::size_t max_disjoint(const std::vector<std::vector<std::size_t>>& classes) {
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto disjoint = [&](std::size_t a, std::size_t b) {
    for (std::size_t x : classes[a])
      for (std::size_t y : classes[b])
        if (x == y) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t c = from; c < classes.size(); ++c) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t o) { return disjoint(o, c); })) continue;
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

/// Least k admitting a proper k-colouring, by trying k = 1, 2, ...
inline std::size_t chromatic_index(const TripleSystem& s) {
  for (std::size_t k = 1;; ++k) {
    std::vector<int> colour(s.size(), -1);
    auto rec = [&](auto&& self, std::size_t t) -> bool {
      if (t == s.size()) return true;
      for (std::size_t c = 0; c < k; ++c) {
        bool ok = true;
        for (std::size_t u = 0; u < t && ok; ++u)
          if (colour[u] == static_cast<int>(c) && stsd::triples_intersect(s[u], s[t])) ok = false;
        if (!ok) continue;
        colour[t] = static_cast<int>(c);
        if (self(self, t + 1)) return true;
        colour[t] = -1;
      }
      return false;
    };
    if (rec(rec, 0)) return k;
  }
}

}  // namespace oracle

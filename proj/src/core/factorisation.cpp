#include "stsd/factorisation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "stsd/numtheory.hpp"

namespace stsd {
namespace {

std::string edge_str(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

// Cubic graph whose edges are {x,-x} and {x,-2x} for x in `vertices`.
WeightedGraph minus_one_minus_two_graph(std::uint32_t modulus, std::vector<std::uint32_t> vertices) {
  WeightedGraph g;
  g.modulus = modulus;
  g.vertices = std::move(vertices);
  for (std::uint32_t x : g.vertices) {
    g.edges.push_back(Edge::make(x, modulus - x));
    g.edges.push_back(Edge::make(x, static_cast<std::uint32_t>((2ull * (modulus - x)) % modulus)));
  }
  sort_unique(g.edges);
  if (g.edges.size() * 2 != g.vertices.size() * 3)
    throw std::logic_error("graph on Z_" + std::to_string(modulus) + " is not cubic");
  return g;
}

// The base component H on X = <-1,-2>_d split into {H_0, H_1, H_2}.
std::array<std::vector<Edge>, 3> factorise_base_component(std::uint32_t d, std::vector<std::uint32_t>& members) {
  const std::uint64_t minus_two = d - 2;
  // Powers of -2 until they return to 1.
  std::vector<std::uint32_t> powers{1};
  bool minus_one_is_power = false;
  for (std::uint64_t x = minus_two; x != 1; x = x * minus_two % d) {
    if (x == d - 1) minus_one_is_power = true;
    powers.push_back(static_cast<std::uint32_t>(x));
  }
  const std::size_t ord = powers.size();
  const std::size_t size = minus_one_is_power ? ord : 2 * ord;
  const std::size_t s = size / 2;

  auto x = [&](std::size_t i) { return powers[i % ord]; };
  auto neg = [&](std::uint32_t y) { return d - y; };
  // Sanity: x_s is -x_0 exactly when -1 is a power of -2, otherwise x_0.
  if (x(s) != (minus_one_is_power ? neg(x(0)) : x(0)))
    throw std::logic_error("unexpected (-2)^s mod " + std::to_string(d));

  std::array<std::vector<Edge>, 3> h;
  auto pair_edges = [&](std::vector<Edge>& out, std::size_t i, std::size_t j) {
    out.push_back(Edge::make(x(i), x(j)));
    out.push_back(Edge::make(neg(x(i)), neg(x(j))));
  };
  if (size % 4 == 0) {
    for (std::size_t i = 0; i < s; ++i) h[0].push_back(Edge::make(x(i), neg(x(i))));
    for (std::size_t i = 0; i < s / 2; ++i) {
      pair_edges(h[1], 2 * i, 2 * i + 1);
      pair_edges(h[2], 2 * i + 1, 2 * i + 2);
    }
  } else {
    if (s < 3)
      throw PreconditionError("Cay(Z*_" + std::to_string(d) + ",{-1,-2}) is not cubic (|<-1,-2>| = " +
                              std::to_string(size) + ")");
    for (std::size_t i = 1; i + 2 <= s; ++i) h[0].push_back(Edge::make(x(i), neg(x(i))));
    pair_edges(h[0], s - 1, s);
    for (std::size_t i = 0; 2 * i + 3 <= s; ++i) {
      pair_edges(h[1], 2 * i, 2 * i + 1);
      pair_edges(h[2], 2 * i + 1, 2 * i + 2);
    }
    h[1].push_back(Edge::make(x(s - 1), neg(x(s - 1))));
    h[2].push_back(Edge::make(x(0), neg(x(0))));
  }

  members.clear();
  for (std::size_t i = 0; i < ord; ++i) members.push_back(powers[i]);
  if (!minus_one_is_power)
    for (std::size_t i = 0; i < ord; ++i) members.push_back(neg(powers[i]));
  std::sort(members.begin(), members.end());

  // Each H_i must be a perfect matching of H and together they must be H.
  const WeightedGraph component = minus_one_minus_two_graph(d, members);
  std::vector<Edge> all;
  for (auto& factor : h) {
    std::sort(factor.begin(), factor.end());
    std::vector<std::uint32_t> covered;
    for (const Edge& e : factor) {
      covered.push_back(e.u);
      covered.push_back(e.v);
    }
    std::sort(covered.begin(), covered.end());
    if (covered != members) throw std::logic_error("component factor is not a perfect matching mod " + std::to_string(d));
    all.insert(all.end(), factor.begin(), factor.end());
  }
  std::sort(all.begin(), all.end());
  if (all != component.edges)
    throw std::logic_error("component factors do not partition H mod " + std::to_string(d));
  return h;
}

}  // namespace

WeightedGraph build_G(std::uint32_t n) {
  require(n >= 7 && n % 6 == 1, "G(n) requires n = 1 (mod 6) and n >= 7, got " + std::to_string(n));
  std::vector<std::uint32_t> vertices(n - 1);
  std::iota(vertices.begin(), vertices.end(), 1u);
  return minus_one_minus_two_graph(n, std::move(vertices));
}

WeightedGraph build_cayley(std::uint32_t d) {
  require(d >= 5 && d % 2 == 1, "Cay(Z*_d,{-1,-2}) is cubic only for odd d >= 5, got " + std::to_string(d));
  std::vector<std::uint32_t> units;
  for (std::uint32_t x = 1; x < d; ++x)
    if (std::gcd(x, d) == 1) units.push_back(x);
  return minus_one_minus_two_graph(d, std::move(units));
}

OneFactorisation factorise_component(std::uint32_t d) {
  require(d >= 3 && d % 2 == 1, "component factorisation needs odd d >= 3, got " + std::to_string(d));
  std::vector<std::uint32_t> members;
  const auto h = factorise_base_component(d, members);

  OneFactorisation fact;
  fact.modulus = d;
  std::vector<char> used(d, 0);
  for (std::uint32_t a = 1; a < d; ++a) {
    if (used[a] || std::gcd(a, d) != 1) continue;
    for (std::uint32_t m : members) used[static_cast<std::uint64_t>(a) * m % d] = 1;
    for (int i = 0; i < 3; ++i)
      for (const Edge& e : h[i])
        fact.factors[i].push_back(Edge::make(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * e.u % d),
                                             static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * e.v % d)));
  }
  for (auto& factor : fact.factors) std::sort(factor.begin(), factor.end());
  return fact;
}

OneFactorisation factorise_G(std::uint32_t n) {
  require(n >= 7 && n % 6 == 1, "G(n) requires n = 1 (mod 6) and n >= 7, got " + std::to_string(n));
  OneFactorisation fact;
  fact.modulus = n;
  for (std::uint64_t d : nt::divisors_gt1(n)) {
    const std::uint32_t scale = n / static_cast<std::uint32_t>(d);
    const OneFactorisation component = factorise_component(static_cast<std::uint32_t>(d));
    for (int i = 0; i < 3; ++i)
      for (const Edge& e : component.factors[i]) fact.factors[i].push_back(Edge::make(scale * e.u, scale * e.v));
  }
  for (auto& factor : fact.factors) std::sort(factor.begin(), factor.end());
  return fact;
}

VerificationReport verify_factorisation_properties(const WeightedGraph& host, const OneFactorisation& fact,
                                                   std::uint64_t f_n) {
  VerificationReport report;
  const std::uint32_t n = host.modulus;
  if (fact.modulus != n) {
    report.add(ViolationKind::kStructure, "factorisation modulus " + std::to_string(fact.modulus) +
                                              " differs from graph modulus " + std::to_string(n));
    return report;
  }

  // Structure: perfect matchings that partition the host edges.
  std::vector<char> is_vertex(n, 0);
  for (auto x : host.vertices) is_vertex[x] = 1;
  std::vector<Edge> all;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> degree(n, 0);
    for (const Edge& e : fact.factors[i]) {
      if (e.v >= n || !is_vertex[e.u] || !is_vertex[e.v]) {
        report.add(ViolationKind::kStructure, "factor " + std::to_string(i) + " edge " + edge_str(e) +
                                                  " leaves the vertex set");
        continue;
      }
      ++degree[e.u];
      ++degree[e.v];
      all.push_back(e);
    }
    for (auto x : host.vertices)
      if (degree[x] != 1)
        report.add(ViolationKind::kStructure, "factor " + std::to_string(i) + " covers vertex " + std::to_string(x) +
                                                  " " + std::to_string(degree[x]) + " times");
  }
  std::sort(all.begin(), all.end());
  if (all != host.edges) {
    std::vector<Edge> extra, missing;
    std::set_difference(all.begin(), all.end(), host.edges.begin(), host.edges.end(), std::back_inserter(extra));
    std::set_difference(host.edges.begin(), host.edges.end(), all.begin(), all.end(), std::back_inserter(missing));
    if (!extra.empty())
      report.add(ViolationKind::kStructure, "edge " + edge_str(extra.front()) + " is not a graph edge or is repeated");
    if (!missing.empty())
      report.add(ViolationKind::kStructure, "graph edge " + edge_str(missing.front()) + " is in no factor");
  }
  if (!report.ok) return report;

  // Property 1: weights w and -w live in one factor.
  std::vector<int> factor_of_weight(n, -1);
  std::vector<Edge> witness(n);
  std::uint64_t nonzero_in_first = 0;
  std::uint64_t zero_in_others = 0;
  for (int i = 0; i < 3; ++i) {
    for (const Edge& e : fact.factors[i]) {
      const std::uint32_t w = host.weight(e);
      if (w == 0) {
        if (i != 0) ++zero_in_others;
        continue;
      }
      if (i == 0) ++nonzero_in_first;
      const std::uint32_t key = std::min(w, n - w);
      if (factor_of_weight[key] == -1) {
        factor_of_weight[key] = i;
        witness[key] = e;
      } else if (factor_of_weight[key] != i) {
        const Edge& other = witness[key];
        report.add(ViolationKind::kProperty,
                   "paired weights split: " + edge_str(other) + " (weight " + std::to_string(host.weight(other)) +
                       ") in factor " + std::to_string(factor_of_weight[key]) + " but " + edge_str(e) + " (weight " +
                       std::to_string(w) + ") in factor " + std::to_string(i));
      }
    }
  }
  if (nonzero_in_first != 2 * f_n)
    report.add(ViolationKind::kProperty, "factor 0 has " + std::to_string(nonzero_in_first) +
                                             " nonzero-weight edges, expected " + std::to_string(2 * f_n));
  if (zero_in_others != 2 * f_n)
    report.add(ViolationKind::kProperty, "factors 1 and 2 have " + std::to_string(zero_in_others) +
                                             " zero-weight edges, expected " + std::to_string(2 * f_n));
  return report;
}

VerificationReport verify_factorisation_properties(const OneFactorisation& fact, std::uint64_t f_n) {
  return verify_factorisation_properties(build_G(fact.modulus), fact, f_n);
}

void write_factorisation(std::ostream& out, const OneFactorisation& fact) {
  for (int i = 0; i < 3; ++i) {
    out << "FACTOR " << i << '\n';
    for (const Edge& e : fact.factors[i]) out << e.u << ' ' << e.v << ' ' << (e.u + e.v) % fact.modulus << '\n';
  }
}

std::string factorisation_to_string(const OneFactorisation& fact) {
  std::ostringstream out;
  write_factorisation(out, fact);
  return out.str();
}

}  // namespace stsd

#include <algorithm>
#include <cstdio>

#include "stsd/numtheory.hpp"
#include "search_support.hpp"

namespace stsd {

const char* to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::kMod3Weighting:
      return "mod3-weighting";
    case BoundMethod::kWsWeightArgument:
      return "ws-weight-argument";
    case BoundMethod::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

PCBoundCertificate pc_bound_mod3(const TripleSystem& system, std::span<const std::uint8_t> weighting) {
  const Point v = system.order();
  require(v % 6 == 3, "mod-3 bound needs v = 3 (mod 6), got " + std::to_string(v));
  require(weighting.size() == v, "weighting must assign every point");
  unsigned total = 0;
  for (auto w : weighting) {
    require(w < 3, "weights must lie in Z_3");
    total += w;
  }
  require(total % 3 == 0, "weights of all points must sum to 0 (mod 3)");

  PCBoundCertificate cert;
  cert.method = BoundMethod::kMod3Weighting;
  cert.weighting.assign(weighting.begin(), weighting.end());
  for (const Triple& t : system.triples()) {
    const unsigned s = (weighting[t[0]] + weighting[t[1]] + weighting[t[2]]) % 3;
    if (s == 0) {
      ++cert.zero_sum_triples;
    } else if (cert.nonzero_sum == 0) {
      cert.nonzero_sum = s;
    } else {
      require(s == cert.nonzero_sum, "triples take both nonzero weight sums 1 and 2");
    }
  }
  // A class has a zero-sum and b nonzero triples, a + b = v/3 and b s = 0,
  // so a = v/3 (mod 3) whenever s != 0.
  const std::size_t per_class = v / 3;
  cert.min_zero_per_class = cert.nonzero_sum == 0 ? 0 : per_class % 3;
  const std::size_t trivial = (v - 1) / 2;
  cert.bound = cert.min_zero_per_class == 0 ? trivial
                                            : std::min(trivial, cert.zero_sum_triples / cert.min_zero_per_class);
  return cert;
}

std::vector<std::uint8_t> natural_weighting(const LabelledSTS& sts) {
  const Point v = sts.system.order();
  std::vector<std::uint8_t> w(v);
  switch (sts.kind) {
    case ConstructionKind::kBose:
      for (Point p = 0; p < v; ++p) w[p] = static_cast<std::uint8_t>(sts.labels[p].level);
      return w;
    case ConstructionKind::kSts33:
      for (Point p = 0; p < v; ++p) w[p] = static_cast<std::uint8_t>(sts.labels[p].value % 3);
      return w;
    default:
      throw PreconditionError("no natural Z_3 weighting for this construction");
  }
}

std::optional<PCBoundCertificate> pc_bound_mod3_auto(const TripleSystem& system) {
  const Point v = system.order();
  if (v % 6 != 3) return std::nullopt;
  std::vector<std::vector<std::uint8_t>> candidates(2, std::vector<std::uint8_t>(v));
  for (Point p = 0; p < v; ++p) {
    candidates[0][p] = static_cast<std::uint8_t>(p / (v / 3));
    candidates[1][p] = static_cast<std::uint8_t>(p % 3);
  }
  std::optional<PCBoundCertificate> best;
  for (const auto& w : candidates) {
    try {
      auto cert = pc_bound_mod3(system, w);
      if (!best || cert.bound < best->bound) best = std::move(cert);
    } catch (const PreconditionError&) {
    }
  }
  return best;
}

PCBoundCertificate pc_bound_ws(std::uint32_t n, const OneFactorisation& fact) {
  require(n >= 7 && n % 6 == 1, "weight argument needs n = 1 (mod 6), got " + std::to_string(n));
  require(fact.modulus == n, "factorisation modulus does not match n");
  const std::uint64_t f = nt::f_of(n);
  const VerificationReport report = verify_factorisation_properties(fact, f);
  if (!report.ok)
    throw PreconditionError("factorisation lacks the weight properties: " + report.first()->message);
  PCBoundCertificate cert;
  cert.method = BoundMethod::kWsWeightArgument;
  cert.f = f;
  cert.type_i = 1;
  cert.type_ii = 2 * f;
  cert.type_iii = f;
  cert.bound = cert.type_i + cert.type_ii + cert.type_iii;
  return cert;
}

OneFactorisation recover_ws_factorisation(const TripleSystem& system) {
  const Point v = system.order();
  require(v >= 9 && (v - 2) % 6 == 1, "order " + std::to_string(v) + " is not n + 2 with n = 1 (mod 6)");
  const Point n = v - 2;
  const Point inf0 = n - 1;
  OneFactorisation fact;
  fact.modulus = n;
  bool saw_infinite_triple = false;
  for (const Triple& t : system.triples()) {
    const int infinite = (t[0] >= inf0) + (t[1] >= inf0) + (t[2] >= inf0);
    if (infinite == 0) continue;
    if (infinite == 3) {
      saw_infinite_triple = true;
      continue;
    }
    require(infinite == 1, "triple " + format_triple(t) + " meets two infinite points");
    fact.factors[t[2] - inf0].push_back(Edge::make(t[0] + 1, t[1] + 1));
  }
  require(saw_infinite_triple, "system lacks the triple of infinite points");
  for (auto& factor : fact.factors) std::sort(factor.begin(), factor.end());
  return fact;
}

std::optional<PCBoundCertificate> pc_bound_exhaustive(const TripleSystem& system, const SearchBudget& budget) {
  const PackingResult packing = max_disjoint_pcs(system, budget);
  if (packing.status != SearchStatus::kComplete) return std::nullopt;
  PCBoundCertificate cert;
  cert.method = BoundMethod::kExhaustive;
  cert.bound = packing.size;
  // FNV-1a over the class count, node count and witness.
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  mix(packing.classes_considered);
  mix(packing.nodes);
  for (const auto& cls : packing.witness)
    for (std::size_t t : cls) mix(t);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  cert.transcript_digest = buf;
  return cert;
}

}  // namespace stsd

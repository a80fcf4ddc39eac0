#include "stsd/designs.hpp"

#include <algorithm>
#include <sstream>

namespace stsd {

void VerificationReport::add(ViolationKind kind, std::string message) {
  ok = false;
  ++violation_count;
  if (violations.size() < kMaxRecorded) violations.push_back({kind, std::move(message)});
}

bool VerificationReport::mentions(std::string_view fragment) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
    return v.message.find(fragment) != std::string::npos;
  });
}

bool VerificationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

Triple sorted_triple(Point a, Point b, Point c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

bool triples_intersect(const Triple& a, const Triple& b) {
  for (Point p : a)
    for (Point q : b)
      if (p == q) return true;
  return false;
}

std::string format_triple(const Triple& t) {
  std::ostringstream out;
  out << '{' << t[0] << ',' << t[1] << ',' << t[2] << '}';
  return out.str();
}

TripleSystem::TripleSystem(Point v, std::vector<Triple> triples) : v_(v), triples_(std::move(triples)) {
  for (auto& t : triples_) {
    std::sort(t.begin(), t.end());
    require(t[2] < v_, "triple " + format_triple(t) + " has a point outside 0.." +
                           std::to_string(v_ == 0 ? 0 : v_ - 1));
  }
  std::sort(triples_.begin(), triples_.end());
  auto dup = std::adjacent_find(triples_.begin(), triples_.end());
  require(dup == triples_.end(), "duplicate triple " + (dup == triples_.end() ? "" : format_triple(*dup)));
}

std::optional<std::size_t> TripleSystem::index_of(Triple t) const {
  std::sort(t.begin(), t.end());
  auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  if (it == triples_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - triples_.begin());
}

std::vector<std::vector<std::size_t>> TripleSystem::point_incidence() const {
  std::vector<std::vector<std::size_t>> incidence(v_);
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    const auto& t = triples_[i];
    incidence[t[0]].push_back(i);
    if (t[1] != t[0]) incidence[t[1]].push_back(i);
    if (t[2] != t[1]) incidence[t[2]].push_back(i);
  }
  return incidence;
}

void Colouring::canonicalise() {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
}

VerificationReport verify_sts(const TripleSystem& system) {
  VerificationReport report;
  const std::size_t v = system.order();
  if (v < 3) {
    report.add(ViolationKind::kWrongTripleCount, "order " + std::to_string(v) + " is below 3");
    return report;
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  // first_owner[a*v+b] = index of the first triple covering {a,b}, a < b.
  std::vector<std::size_t> first_owner(v * v, kUnset);

  auto cover = [&](Point a, Point b, std::size_t idx) {
    std::size_t& owner = first_owner[a * v + b];
    if (owner == kUnset) {
      owner = idx;
      return;
    }
    std::ostringstream msg;
    msg << "pair {" << a << ',' << b << "} covered twice (" << format_triple(system[owner]) << " and "
        << format_triple(system[idx]) << ')';
    report.add(ViolationKind::kDuplicatePair, msg.str());
  };

  for (std::size_t i = 0; i < system.size(); ++i) {
    const Triple& t = system[i];
    if (t[0] == t[1] || t[1] == t[2]) {
      report.add(ViolationKind::kMalformedTriple, "triple " + format_triple(t) + " repeats a point");
      continue;
    }
    cover(t[0], t[1], i);
    cover(t[0], t[2], i);
    cover(t[1], t[2], i);
  }
  for (Point a = 0; a < v; ++a)
    for (Point b = a + 1; b < v; ++b)
      if (first_owner[a * v + b] == kUnset)
        report.add(ViolationKind::kUncoveredPair,
                   "pair {" + std::to_string(a) + ',' + std::to_string(b) + "} is not covered");

  const std::size_t expected = v * (v - 1) / 6;
  if (system.size() != expected || v * (v - 1) % 6 != 0)
    report.add(ViolationKind::kWrongTripleCount, "expected " + std::to_string(expected) + " triples, found " +
                                                     std::to_string(system.size()));
  return report;
}

VerificationReport verify_colouring(const TripleSystem& system, const Colouring& colouring) {
  VerificationReport report;
  report.class_count = colouring.class_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(system.size(), kUnset);
  // Per class, which member holds each point.
  std::vector<std::size_t> holder(system.order(), kUnset);

  for (std::size_t c = 0; c < colouring.classes.size(); ++c) {
    const auto& members = colouring.classes[c];
    std::vector<Point> touched;
    for (std::size_t idx : members) {
      if (idx >= system.size()) {
        report.add(ViolationKind::kBadIndex,
                   "class " + std::to_string(c) + " references triple index " + std::to_string(idx) +
                       " but the system has " + std::to_string(system.size()) + " triples");
        continue;
      }
      if (owner[idx] != kUnset) {
        report.add(ViolationKind::kOverlappingAssignment, "triple " + std::to_string(idx) + ' ' +
                                                              format_triple(system[idx]) + " assigned to classes " +
                                                              std::to_string(owner[idx]) + " and " +
                                                              std::to_string(c));
      } else {
        owner[idx] = c;
      }
      for (Point p : system[idx]) {
        if (holder[p] != kUnset && holder[p] != idx) {
          report.add(ViolationKind::kIntersectingClass,
                     "class " + std::to_string(c) + ": triples " + format_triple(system[holder[p]]) + " and " +
                         format_triple(system[idx]) + " share point " + std::to_string(p));
        } else {
          holder[p] = idx;
          touched.push_back(p);
        }
      }
    }
    for (Point p : touched) holder[p] = kUnset;
  }
  for (std::size_t i = 0; i < system.size(); ++i)
    if (owner[i] == kUnset)
      report.add(ViolationKind::kMissingTriple,
                 "triple " + std::to_string(i) + ' ' + format_triple(system[i]) + " has no class");
  return report;
}

bool is_admissible_order(std::uint64_t v) { return v % 6 == 1 || v % 6 == 3; }

std::uint32_t m_lower(std::uint32_t v) {
  require(is_admissible_order(v), "order " + std::to_string(v) + " is not 1 or 3 (mod 6)");
  return v % 6 == 3 ? (v - 1) / 2 : (v + 1) / 2;
}

std::uint32_t min_pc_for_low_chi(std::uint32_t v) {
  require(v % 6 == 3, "order " + std::to_string(v) + " is not 3 (mod 6)");
  return (v + 3) / 6;
}

}  // namespace stsd

#include <algorithm>
#include <cstdlib>
#include <string>

#include "search_support.hpp"

namespace stsd {
namespace {

class ParallelClassSearch {
 public:
  ParallelClassSearch(const TripleSystem& system, const SearchBudget& budget)
      : system_(system),
        incidence_(system.point_incidence()),
        covered_(system.order(), 0),
        tracker_(budget),
        cap_(budget.class_cap) {}

  ParallelClassList run() {
    recurse();
    ParallelClassList out;
    std::sort(found_.begin(), found_.end());
    out.classes = std::move(found_);
    out.status = (tracker_.exhausted() || capped_) ? SearchStatus::kInconclusive : SearchStatus::kComplete;
    out.nodes = tracker_.nodes();
    return out;
  }

 private:
  bool admissible(std::size_t t) const {
    const Triple& tr = system_[t];
    return !covered_[tr[0]] && !covered_[tr[1]] && !covered_[tr[2]];
  }

  void set_cover(std::size_t t, char value) {
    for (Point p : system_[t]) covered_[p] = value;
  }

  void recurse() {
    if (capped_ || !tracker_.tick()) return;
    // Fail-first: the uncovered point with the fewest admissible triples.
    Point best_point = 0;
    std::size_t best_count = static_cast<std::size_t>(-1);
    bool any_uncovered = false;
    for (Point p = 0; p < system_.order(); ++p) {
      if (covered_[p]) continue;
      any_uncovered = true;
      std::size_t count = 0;
      for (std::size_t t : incidence_[p])
        if (admissible(t)) ++count;
      if (count < best_count) {
        best_count = count;
        best_point = p;
        if (count == 0) break;
      }
    }
    if (!any_uncovered) {
      PartialParallelClass cls = chosen_;
      std::sort(cls.begin(), cls.end());
      found_.push_back(std::move(cls));
      if (cap_ && found_.size() >= *cap_) capped_ = true;
      return;
    }
    if (best_count == 0) return;
    for (std::size_t t : incidence_[best_point]) {
      if (!admissible(t)) continue;
      set_cover(t, 1);
      chosen_.push_back(t);
      recurse();
      chosen_.pop_back();
      set_cover(t, 0);
      if (capped_ || tracker_.exhausted()) return;
    }
  }

  const TripleSystem& system_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<char> covered_;
  PartialParallelClass chosen_;
  std::vector<PartialParallelClass> found_;
  detail::BudgetTracker tracker_;
  std::optional<std::size_t> cap_;
  bool capped_ = false;
};

}  // namespace

const char* to_string(SearchStatus status) {
  return status == SearchStatus::kComplete ? "complete" : "inconclusive";
}

SearchBudget SearchBudget::from_env() {
  SearchBudget budget;
  if (const char* nodes = std::getenv("STSD_BUDGET_NODES")) {
    try {
      budget.node_limit = std::stoull(nodes);
    } catch (const std::exception&) {
    }
  }
  if (const char* secs = std::getenv("STSD_BUDGET_SECONDS")) {
    try {
      budget.time_limit_seconds = std::stod(secs);
    } catch (const std::exception&) {
    }
  }
  return budget;
}

ParallelClassList enumerate_parallel_classes(const TripleSystem& system, const SearchBudget& budget) {
  require(system.order() % 6 == 3,
          "parallel classes need v = 3 (mod 6), got v = " + std::to_string(system.order()));
  return ParallelClassSearch(system, budget).run();
}

}  // namespace stsd

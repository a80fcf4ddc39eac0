// Maximum set packing of parallel classes (two classes conflict when they
// share a triple).
//
// Branching: pick the triple t contained in the fewest candidate classes;
// either the packing uses exactly one candidate through t, or none.
// Bound: any set S of triples hitting every candidate class bounds the
// packing by |S|, since classes through a common triple pairwise conflict.
// S is built greedily.

#include <algorithm>

#include "search_support.hpp"

namespace stsd {
namespace {

using detail::DynamicBitset;

class PackingSearch {
 public:
  PackingSearch(const TripleSystem& system, const std::vector<PartialParallelClass>& classes,
                detail::BudgetTracker& tracker)
      : classes_(classes), tracker_(tracker), containing_(system.size(), DynamicBitset(classes.size())) {
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t t : classes[c]) containing_[t].set(c);
  }

  /// Greedy hitting-set size for `candidates`, stopping once it exceeds `limit`.
  std::size_t hitting_bound(DynamicBitset candidates, std::size_t limit) const {
    std::size_t used = 0;
    while (candidates.any()) {
      if (used > limit) return used;
      std::size_t best_t = 0, best_hits = 0;
      for (std::size_t t = 0; t < containing_.size(); ++t) {
        const std::size_t hits = candidates.count_and(containing_[t]);
        if (hits > best_hits) {
          best_hits = hits;
          best_t = t;
        }
      }
      candidates.and_not(containing_[best_t]);
      ++used;
    }
    return used;
  }

  void greedy_start() {
    DynamicBitset candidates = DynamicBitset::full(classes_.size());
    std::vector<std::size_t> picked;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (!candidates.test(c)) continue;
      picked.push_back(c);
      for (std::size_t t : classes_[c]) candidates.and_not(containing_[t]);
    }
    best_ = picked;
  }

  void search(const DynamicBitset& candidates) {
    if (!tracker_.tick()) return;
    if (!candidates.any()) {
      if (chosen_.size() > best_.size()) best_ = chosen_;
      return;
    }
    if (best_.size() >= chosen_.size()) {
      const std::size_t room = best_.size() - chosen_.size();
      if (hitting_bound(candidates, room) <= room) return;
    }

    std::size_t branch_t = 0, branch_size = static_cast<std::size_t>(-1);
    for (std::size_t t = 0; t < containing_.size(); ++t) {
      const std::size_t hits = candidates.count_and(containing_[t]);
      if (hits > 0 && hits < branch_size) {
        branch_size = hits;
        branch_t = t;
      }
    }

    const DynamicBitset through = candidates & containing_[branch_t];
    bool stop = false;
    through.for_each([&](std::size_t c) {
      if (stop) return;
      DynamicBitset next = candidates;
      for (std::size_t t : classes_[c]) next.and_not(containing_[t]);
      chosen_.push_back(c);
      search(next);
      chosen_.pop_back();
      if (tracker_.exhausted()) stop = true;
    });
    if (stop) return;
    DynamicBitset without = candidates;
    without.and_not(containing_[branch_t]);
    search(without);
  }

  std::size_t root_bound() const {
    return hitting_bound(DynamicBitset::full(classes_.size()), static_cast<std::size_t>(-1));
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  const std::vector<PartialParallelClass>& classes_;
  detail::BudgetTracker& tracker_;
  std::vector<DynamicBitset> containing_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

PackingResult max_disjoint_pcs(const TripleSystem& system, const SearchBudget& budget) {
  PackingResult result;
  const ParallelClassList list = enumerate_parallel_classes(system, budget);
  result.classes_considered = list.classes.size();
  result.nodes = list.nodes;

  // Disjoint classes meet point 0 in distinct triples.
  const std::size_t trivial = (system.order() - 1) / 2;

  SearchBudget remaining = budget;
  remaining.node_limit = budget.node_limit > list.nodes ? budget.node_limit - list.nodes : 0;
  detail::BudgetTracker tracker(remaining);
  PackingSearch search(system, list.classes, tracker);
  search.greedy_start();

  if (list.status == SearchStatus::kComplete) search.search(DynamicBitset::full(list.classes.size()));

  for (std::size_t c : search.best()) result.witness.push_back(list.classes[c]);
  result.size = result.witness.size();
  result.nodes += tracker.nodes();
  if (list.status == SearchStatus::kComplete && !tracker.exhausted()) {
    result.status = SearchStatus::kComplete;
    result.upper_bound = result.size;
  } else {
    result.status = SearchStatus::kInconclusive;
    result.upper_bound = list.status == SearchStatus::kComplete ? std::min(trivial, search.root_bound()) : trivial;
    result.upper_bound = std::max(result.upper_bound, result.size);
  }
  return result;
}

}  // namespace stsd

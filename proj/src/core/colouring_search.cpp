#include <algorithm>
#include <stdexcept>

#include "stsd/rng.hpp"
#include "search_support.hpp"

namespace stsd {
namespace {

// Intersection graph of the triples.
std::vector<std::vector<std::uint32_t>> triple_adjacency(const TripleSystem& system) {
  const auto incidence = system.point_incidence();
  std::vector<std::vector<std::uint32_t>> adj(system.size());
  for (std::size_t t = 0; t < system.size(); ++t) {
    for (Point p : system[t])
      for (std::size_t u : incidence[p])
        if (u != t) adj[t].push_back(static_cast<std::uint32_t>(u));
    std::sort(adj[t].begin(), adj[t].end());
    adj[t].erase(std::unique(adj[t].begin(), adj[t].end()), adj[t].end());
  }
  return adj;
}

Colouring colouring_from(const std::vector<int>& colour, std::size_t classes) {
  Colouring out;
  out.classes.resize(classes);
  for (std::size_t t = 0; t < colour.size(); ++t) out.classes[static_cast<std::size_t>(colour[t])].push_back(t);
  out.canonicalise();
  return out;
}

std::size_t greedy_clique(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::size_t best = adj.empty() ? 0 : 1;
  for (std::size_t seed = 0; seed < adj.size(); ++seed) {
    std::vector<std::uint32_t> clique{static_cast<std::uint32_t>(seed)};
    for (std::uint32_t u : adj[seed]) {
      const bool joins_all = std::all_of(clique.begin(), clique.end(), [&](std::uint32_t w) {
        return std::binary_search(adj[u].begin(), adj[u].end(), w);
      });
      if (joins_all) clique.push_back(u);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

// DSATUR branch and bound.
class ExactColouring {
 public:
  ExactColouring(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t max_colours,
                 detail::BudgetTracker* tracker)
      : adj_(adj),
        n_(adj.size()),
        k_(max_colours),
        colour_(n_, -1),
        seen_(n_ * k_, 0),
        saturation_(n_, 0),
        free_degree_(n_),
        tracker_(tracker) {
    for (std::size_t t = 0; t < n_; ++t) free_degree_[t] = adj_[t].size();
  }

  /// Single greedy DSATUR pass; returns classes used.
  std::size_t greedy(std::vector<int>& out) {
    std::size_t used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const std::size_t t = pick();
      std::size_t c = 0;
      while (c < used && seen_[t * k_ + c]) ++c;
      if (c == used) ++used;
      assign(t, static_cast<int>(c));
    }
    out = colour_;
    for (std::size_t t = 0; t < n_; ++t) unassign(t);
    return used;
  }

  /// Searches for colourings with fewer than `best` classes.
  void solve(std::size_t best, std::size_t lower, std::vector<int> best_colouring) {
    best_ = best;
    lower_ = lower;
    best_colouring_ = std::move(best_colouring);
    recurse(0, 0);
  }

  std::size_t best() const { return best_; }
  const std::vector<int>& best_colouring() const { return best_colouring_; }

 private:
  std::size_t pick() const {
    std::size_t best_t = n_;
    for (std::size_t t = 0; t < n_; ++t) {
      if (colour_[t] >= 0) continue;
      if (best_t == n_ || saturation_[t] > saturation_[best_t] ||
          (saturation_[t] == saturation_[best_t] && free_degree_[t] > free_degree_[best_t]))
        best_t = t;
    }
    return best_t;
  }

  void assign(std::size_t t, int c) {
    colour_[t] = c;
    for (std::uint32_t u : adj_[t]) {
      if (seen_[u * k_ + c]++ == 0) ++saturation_[u];
      --free_degree_[u];
    }
  }

  void unassign(std::size_t t) {
    const int c = colour_[t];
    colour_[t] = -1;
    for (std::uint32_t u : adj_[t]) {
      if (--seen_[u * k_ + c] == 0) --saturation_[u];
      ++free_degree_[u];
    }
  }

  void recurse(std::size_t coloured, std::size_t used) {
    if (done_ || !tracker_->tick()) return;
    if (coloured == n_) {
      best_ = used;
      best_colouring_ = colour_;
      if (best_ <= lower_) done_ = true;
      return;
    }
    const std::size_t t = pick();
    if (saturation_[t] + 1 >= best_ && saturation_[t] >= used) return;  // would need colour >= best
    for (std::size_t c = 0; c < used; ++c) {
      if (seen_[t * k_ + c]) continue;
      assign(t, static_cast<int>(c));
      recurse(coloured + 1, used);
      unassign(t);
      if (done_ || tracker_->exhausted()) return;
    }
    if (used + 1 < best_) {
      assign(t, static_cast<int>(used));
      recurse(coloured + 1, used + 1);
      unassign(t);
    }
  }

  const std::vector<std::vector<std::uint32_t>>& adj_;
  std::size_t n_;
  std::size_t k_;
  std::vector<int> colour_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::size_t> saturation_;
  std::vector<std::size_t> free_degree_;
  detail::BudgetTracker* tracker_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
  std::vector<int> best_colouring_;
  bool done_ = false;
};

// Partial k-colouring repaired by tabu moves and Kempe-chain swaps.
class TabuColouring {
 public:
  TabuColouring(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t k, std::uint64_t seed)
      : adj_(adj),
        n_(adj.size()),
        k_(k),
        rng_(seed),
        colour_(n_, -1),
        conflicts_(n_ * k_, 0),
        tabu_until_(n_ * k_, 0),
        pool_pos_(n_, kNone) {}

  bool run(std::uint64_t iterations) {
    // Random first-fit.
    std::vector<std::uint32_t> order(n_);
    for (std::size_t t = 0; t < n_; ++t) order[t] = static_cast<std::uint32_t>(t);
    rng_.shuffle(order);
    for (std::uint32_t t : order) {
      std::size_t c = 0;
      while (c < k_ && conflicts_[t * k_ + c]) ++c;
      if (c < k_)
        move(t, static_cast<int>(c));
      else
        pool_add(t);
    }

    std::size_t best_pool = pool_.size();
    for (std::uint64_t iter = 1; iter <= iterations && !pool_.empty(); ++iter) {
      const std::uint32_t pick = pool_[rng_.below(pool_.size())];
      if (try_kempe(pick)) continue;

      // Cheapest non-tabu insertion; aspiration when it beats the best pool.
      std::size_t best_cost = static_cast<std::size_t>(-1);
      std::uint32_t best_t = 0;
      int best_c = -1;
      std::uint64_t ties = 0;
      for (std::uint32_t t : pool_) {
        for (std::size_t c = 0; c < k_; ++c) {
          const std::size_t cost = conflicts_[t * k_ + c];
          const bool tabu = tabu_until_[t * k_ + c] > iter;
          if (tabu && pool_.size() - 1 + cost >= best_pool) continue;
          if (cost < best_cost) {
            best_cost = cost;
            best_t = t;
            best_c = static_cast<int>(c);
            ties = 1;
          } else if (cost == best_cost && rng_.below(++ties) == 0) {
            best_t = t;
            best_c = static_cast<int>(c);
          }
        }
      }
      if (best_c < 0) continue;
      const std::uint64_t tenure = static_cast<std::uint64_t>(0.6 * static_cast<double>(pool_.size())) + rng_.below(10) + 1;
      for (std::uint32_t u : adj_[best_t]) {
        if (colour_[u] == best_c) {
          move(u, -1);
          pool_add(u);
          tabu_until_[u * k_ + static_cast<std::size_t>(best_c)] = iter + tenure;
        }
      }
      pool_remove(best_t);
      move(best_t, best_c);
      best_pool = std::min(best_pool, pool_.size());
    }
    return pool_.empty();
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void move(std::uint32_t t, int to) {
    const int from = colour_[t];
    if (from >= 0)
      for (std::uint32_t u : adj_[t]) --conflicts_[u * k_ + static_cast<std::size_t>(from)];
    colour_[t] = to;
    if (to >= 0)
      for (std::uint32_t u : adj_[t]) ++conflicts_[u * k_ + static_cast<std::size_t>(to)];
  }

  void pool_add(std::uint32_t t) {
    pool_pos_[t] = pool_.size();
    pool_.push_back(t);
  }

  void pool_remove(std::uint32_t t) {
    const std::size_t pos = pool_pos_[t];
    pool_[pos] = pool_.back();
    pool_pos_[pool_[pos]] = pos;
    pool_.pop_back();
    pool_pos_[t] = kNone;
  }

  // If t is blocked in class a by a single triple u, swapping classes a and
  // b along u's Kempe chain frees a for t unless the chain reaches a
  // b-neighbour of t.
  bool try_kempe(std::uint32_t t) {
    constexpr int kAttempts = 8;
    if (k_ < 2) return false;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      const int a = static_cast<int>(rng_.below(k_));
      if (conflicts_[t * k_ + static_cast<std::size_t>(a)] != 1) continue;
      int b = static_cast<int>(rng_.below(k_ - 1));
      if (b >= a) ++b;
      std::uint32_t blocker = 0;
      for (std::uint32_t u : adj_[t])
        if (colour_[u] == a) blocker = u;

      chain_.clear();
      in_chain_.assign(n_, 0);
      chain_.push_back(blocker);
      in_chain_[blocker] = 1;
      for (std::size_t i = 0; i < chain_.size(); ++i) {
        const std::uint32_t x = chain_[i];
        const int other = colour_[x] == a ? b : a;
        for (std::uint32_t y : adj_[x]) {
          if (colour_[y] == other && !in_chain_[y]) {
            in_chain_[y] = 1;
            chain_.push_back(y);
          }
        }
      }
      const bool blocked = std::any_of(adj_[t].begin(), adj_[t].end(),
                                       [&](std::uint32_t u) { return colour_[u] == b && in_chain_[u]; });
      if (blocked) continue;
      for (std::uint32_t x : chain_) move(x, colour_[x] == a ? b : a);
      pool_remove(t);
      move(t, a);
      return true;
    }
    return false;
  }

  const std::vector<std::vector<std::uint32_t>>& adj_;
  std::size_t n_;
  std::size_t k_;
  Rng rng_;
  std::vector<int> colour_;
  std::vector<std::uint32_t> conflicts_;
  std::vector<std::uint64_t> tabu_until_;
  std::vector<std::uint32_t> pool_;
  std::vector<std::size_t> pool_pos_;
  std::vector<std::uint32_t> chain_;
  std::vector<char> in_chain_;
};

}  // namespace

ChromaticResult chromatic_index_exact(const TripleSystem& system, const SearchBudget& budget,
                                      const ChromaticOptions& options) {
  ChromaticResult result;
  const auto adj = triple_adjacency(system);
  const Point v = system.order();
  if (system.size() == 0) return result;

  result.lower = greedy_clique(adj);
  result.lower_reason = "clique of pairwise intersecting triples";
  if (is_admissible_order(v) && m_lower(v) > result.lower) {
    result.lower = m_lower(v);
    result.lower_reason = "class size bound m(v)";
  }
  if (options.certificate && v % 6 == 3 && options.certificate->bound < min_pc_for_low_chi(v) &&
      (v + 3) / 2 > result.lower) {
    result.lower = (v + 3) / 2;
    result.lower_reason = std::string("at most ") + std::to_string(options.certificate->bound) +
                          " disjoint parallel classes (" + to_string(options.certificate->method) + ") < (v+3)/6";
  }

  detail::BudgetTracker tracker(budget);
  ExactColouring search(adj, system.size(), &tracker);
  std::vector<int> greedy_colours;
  result.upper = search.greedy(greedy_colours);
  result.colouring = colouring_from(greedy_colours, result.upper);
  if (options.upper_witness && verify_colouring(system, *options.upper_witness).ok &&
      options.upper_witness->class_count() < result.upper) {
    result.upper = options.upper_witness->class_count();
    result.colouring = *options.upper_witness;
  }

  if (result.lower < result.upper) {
    std::vector<int> seed_colours;
    if (result.colouring) {
      seed_colours.assign(system.size(), 0);
      for (std::size_t c = 0; c < result.colouring->classes.size(); ++c)
        for (std::size_t t : result.colouring->classes[c]) seed_colours[t] = static_cast<int>(c);
    }
    search.solve(result.upper, result.lower, seed_colours);
    if (search.best() < result.upper) {
      result.upper = search.best();
      result.colouring = colouring_from(search.best_colouring(), result.upper);
    }
    if (tracker.exhausted()) {
      result.status = SearchStatus::kInconclusive;
    } else if (result.lower < result.upper) {
      result.lower = result.upper;
      result.lower_reason = "exhaustive search";
    }
  }
  result.nodes = tracker.nodes();
  return result;
}

std::optional<Colouring> chromatic_index_heuristic(const TripleSystem& system, std::size_t target, std::uint64_t seed,
                                                   const HeuristicOptions& options) {
  if (is_admissible_order(system.order()))
    require(target >= m_lower(system.order()), "target " + std::to_string(target) + " is below m(v) = " +
                                                   std::to_string(m_lower(system.order())));
  require(target >= 1, "target must be positive");
  const auto adj = triple_adjacency(system);
  for (std::size_t r = 0; r < std::max<std::size_t>(options.restarts, 1); ++r) {
    TabuColouring tabu(adj, target, derive_seed(seed, r));
    if (!tabu.run(options.iterations_per_restart)) continue;
    std::vector<int> colours = tabu.colours();
    // Drop empty classes and renumber.
    std::vector<int> renumber(target, -1);
    int next = 0;
    for (int& c : colours) {
      if (renumber[static_cast<std::size_t>(c)] < 0) renumber[static_cast<std::size_t>(c)] = next++;
      c = renumber[static_cast<std::size_t>(c)];
    }
    Colouring colouring = colouring_from(colours, static_cast<std::size_t>(next));
    const VerificationReport report = verify_colouring(system, colouring);
    if (!report.ok) throw std::logic_error("heuristic produced an invalid colouring: " + report.first()->message);
    return colouring;
  }
  return std::nullopt;
}

}  // namespace stsd

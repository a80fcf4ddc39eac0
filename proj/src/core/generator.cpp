#include "stsd/generator.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "stsd/analysis.hpp"
#include "stsd/rng.hpp"

namespace stsd {
namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

// Partial STS with, for each point, the list of points it is not yet paired
// with, plus the third point of the triple through each covered pair.
class PartialSystem {
 public:
  explicit PartialSystem(std::uint32_t v)
      : v_(v), third_(std::size_t{v} * v, kNone), live_(v), live_pos_(std::size_t{v} * v, kNone) {
    for (std::uint32_t x = 0; x < v; ++x) {
      for (std::uint32_t y = 0; y < v; ++y)
        if (y != x) add_live(x, y);
      live_point_pos_.push_back(x);
      live_points_.push_back(x);
    }
  }

  bool complete() const { return live_points_.empty(); }
  std::size_t triples() const { return triples_; }

  void step(Rng& rng) {
    const std::uint32_t x = live_points_[rng.below(live_points_.size())];
    const auto& partners = live_[x];
    const std::size_t i = rng.below(partners.size());
    std::size_t j = rng.below(partners.size() - 1);
    if (j >= i) ++j;
    const std::uint32_t y = partners[i], z = partners[j];
    const std::uint32_t w = third_[index(y, z)];
    if (w != kNone) remove_triple(y, z, w);
    add_triple(x, y, z);
  }

  TripleSystem build() const {
    std::vector<Triple> out;
    for (std::uint32_t a = 0; a < v_; ++a)
      for (std::uint32_t b = a + 1; b < v_; ++b) {
        const std::uint32_t c = third_[index(a, b)];
        if (c != kNone && c > b) out.push_back(Triple{a, b, c});
      }
    return TripleSystem(v_, std::move(out));
  }

 private:
  std::size_t index(std::uint32_t a, std::uint32_t b) const { return std::size_t{a} * v_ + b; }

  void add_live(std::uint32_t x, std::uint32_t y) {
    live_pos_[index(x, y)] = static_cast<std::uint32_t>(live_[x].size());
    live_[x].push_back(y);
  }

  void drop_live(std::uint32_t x, std::uint32_t y) {
    const std::uint32_t pos = live_pos_[index(x, y)];
    const std::uint32_t last = live_[x].back();
    live_[x][pos] = last;
    live_pos_[index(x, last)] = pos;
    live_[x].pop_back();
    live_pos_[index(x, y)] = kNone;
  }

  // A point with a live pair has at least two: v - 1 is even and each
  // triple through the point covers two of its pairs.
  void refresh_point(std::uint32_t x) {
    const bool live = !live_[x].empty();
    const std::uint32_t pos = live_point_pos_[x];
    if (live && pos == kNone) {
      live_point_pos_[x] = static_cast<std::uint32_t>(live_points_.size());
      live_points_.push_back(x);
    } else if (!live && pos != kNone) {
      const std::uint32_t last = live_points_.back();
      live_points_[pos] = last;
      live_point_pos_[last] = pos;
      live_points_.pop_back();
      live_point_pos_[x] = kNone;
    }
  }

  void set_pair(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    third_[index(a, b)] = c;
    third_[index(b, a)] = c;
    if (c == kNone) {
      add_live(a, b);
      add_live(b, a);
    } else {
      drop_live(a, b);
      drop_live(b, a);
    }
  }

  void add_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    set_pair(a, b, c);
    set_pair(a, c, b);
    set_pair(b, c, a);
    ++triples_;
    refresh_point(a);
    refresh_point(b);
    refresh_point(c);
  }

  void remove_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    set_pair(a, b, kNone);
    set_pair(a, c, kNone);
    set_pair(b, c, kNone);
    --triples_;
    refresh_point(a);
    refresh_point(b);
    refresh_point(c);
  }

  std::uint32_t v_;
  std::vector<std::uint32_t> third_;
  std::vector<std::vector<std::uint32_t>> live_;
  std::vector<std::uint32_t> live_pos_;
  std::vector<std::uint32_t> live_points_;
  std::vector<std::uint32_t> live_point_pos_;
  std::size_t triples_ = 0;
};

}  // namespace

TripleSystem random_sts(std::uint32_t v, std::uint64_t seed, std::uint64_t step_cap) {
  require(v >= 7 && is_admissible_order(v), "random_sts needs v = 1, 3 (mod 6) and v >= 7, got " + std::to_string(v));
  PartialSystem partial(v);
  Rng rng(seed);
  std::uint64_t steps = 0;
  while (!partial.complete()) {
    if (steps++ >= step_cap)
      throw GeneratorError("hill climb for v = " + std::to_string(v) + " stalled at " +
                           std::to_string(partial.triples()) + " triples after " + std::to_string(step_cap) +
                           " steps; try another seed");
    partial.step(rng);
  }
  return partial.build();
}

const char* to_string(SurveyOutcome outcome) {
  switch (outcome) {
    case SurveyOutcome::kAtM:
      return "m";
    case SurveyOutcome::kAtM1:
      return "m+1";
    case SurveyOutcome::kAtM2:
      return "m+2";
    case SurveyOutcome::kFailed:
      return "fail";
    case SurveyOutcome::kGeneratorFailed:
      return "generator-failed";
  }
  return "unknown";
}

namespace {

SurveyOutcome survey_one(std::uint32_t v, std::uint64_t seed, const HeuristicOptions& options) {
  TripleSystem system;
  try {
    system = random_sts(v, seed);
  } catch (const GeneratorError&) {
    return SurveyOutcome::kGeneratorFailed;
  }
  const std::uint32_t m = m_lower(v);
  for (std::uint32_t extra = 0; extra <= 2; ++extra)
    if (chromatic_index_heuristic(system, m + extra, derive_seed(seed, extra), options))
      return static_cast<SurveyOutcome>(extra);
  return SurveyOutcome::kFailed;
}

}  // namespace

SurveyResult colouring_survey(std::uint32_t v, std::size_t count, std::uint64_t seed, std::size_t restarts,
                              unsigned threads) {
  require(v >= 7 && is_admissible_order(v), "survey needs v = 1, 3 (mod 6) and v >= 7, got " + std::to_string(v));
  SurveyResult result;
  result.v = v;
  result.m = m_lower(v);
  result.outcomes.assign(count, SurveyOutcome::kFailed);
  HeuristicOptions options;
  options.restarts = restarts;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++)
      result.outcomes[i] = survey_one(v, derive_seed(seed, i), options);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (SurveyOutcome o : result.outcomes) {
    switch (o) {
      case SurveyOutcome::kAtM: ++result.at_m; break;
      case SurveyOutcome::kAtM1: ++result.at_m1; break;
      case SurveyOutcome::kAtM2: ++result.at_m2; break;
      case SurveyOutcome::kFailed: ++result.failed; break;
      case SurveyOutcome::kGeneratorFailed: ++result.generator_failures; break;
    }
  }
  return result;
}

}  // namespace stsd

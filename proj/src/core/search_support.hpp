#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

#include "stsd/analysis.hpp"

namespace stsd::detail {

/// Counts search nodes against a SearchBudget; the clock is sampled every
/// 1024 nodes.
class BudgetTracker {
 public:
  explicit BudgetTracker(const SearchBudget& budget)
      : node_limit_(budget.node_limit),
        seconds_(budget.time_limit_seconds),
        start_(std::chrono::steady_clock::now()) {}

  /// False once the budget is exhausted.
  bool tick() {
    if (exhausted_) return false;
    if (++nodes_ > node_limit_) {
      exhausted_ = true;
      return false;
    }
    if ((nodes_ & 1023) == 0 && seconds_ > 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > seconds_) exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t node_limit_;
  double seconds_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static DynamicBitset full(std::size_t bits) {
    DynamicBitset b(bits);
    for (std::size_t i = 0; i < bits; ++i) b.set(i);
    return b;
  }

  void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_and(const DynamicBitset& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  void and_not(const DynamicBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  }
  DynamicBitset operator&(const DynamicBitset& other) const {
    DynamicBitset r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
    return r;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int bit = std::countr_zero(word);
        f(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace stsd::detail

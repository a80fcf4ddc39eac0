#include <algorithm>

#include "stsd/constructions.hpp"
#include "stsd/rng.hpp"

namespace stsd {

LatinSquare::LatinSquare(std::uint32_t n, std::vector<std::uint32_t> cells) : n_(n), cells_(std::move(cells)) {
  require(cells_.size() == static_cast<std::size_t>(n) * n, "Latin square cell count must be n*n");
  require(std::all_of(cells_.begin(), cells_.end(), [n](std::uint32_t s) { return s < n; }),
          "Latin square symbols must lie in 0..n-1");
}

bool LatinSquare::is_latin() const {
  std::vector<char> seen(n_);
  for (std::uint32_t r = 0; r < n_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t c = 0; c < n_; ++c) {
      if (seen[at(r, c)]) return false;
      seen[at(r, c)] = 1;
    }
  }
  for (std::uint32_t c = 0; c < n_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t r = 0; r < n_; ++r) {
      if (seen[at(r, c)]) return false;
      seen[at(r, c)] = 1;
    }
  }
  return true;
}

bool LatinSquare::is_idempotent() const {
  for (std::uint32_t x = 0; x < n_; ++x)
    if (at(x, x) != x) return false;
  return true;
}

bool LatinSquare::is_symmetric() const {
  for (std::uint32_t x = 0; x < n_; ++x)
    for (std::uint32_t y = x + 1; y < n_; ++y)
      if (at(x, y) != at(y, x)) return false;
  return true;
}

LatinSquare half_sum_square(std::uint32_t n) {
  require(n >= 1 && n % 2 == 1, "half-sum square needs odd order, got " + std::to_string(n));
  const std::uint64_t half = (n + 1) / 2;  // inverse of 2 mod n
  std::vector<std::uint32_t> cells(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      cells[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint32_t>((i + j) % n * half % n);
  return LatinSquare(n, std::move(cells));
}

LatinSquare conjugate_square(const LatinSquare& square, std::span<const std::uint32_t> perm) {
  const std::uint32_t n = square.order();
  require(perm.size() == n, "permutation length must equal the square's order");
  std::vector<std::uint32_t> inverse(n, n);
  for (std::uint32_t x = 0; x < n; ++x) {
    require(perm[x] < n && inverse[perm[x]] == n, "conjugating map is not a permutation");
    inverse[perm[x]] = x;
  }
  std::vector<std::uint32_t> cells(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      cells[static_cast<std::size_t>(x) * n + y] = perm[square.at(inverse[x], inverse[y])];
  return LatinSquare(n, std::move(cells));
}

LatinSquare random_conjugate_square(std::uint32_t n, std::uint64_t seed) {
  Rng rng(seed);
  const auto perm = rng.permutation(n);
  return conjugate_square(half_sum_square(n), perm);
}

}  // namespace stsd

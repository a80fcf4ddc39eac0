#pragma once

// Divisor-sum arithmetic around the subgroup <-1,-2> of the units mod d.
//
// For d coprime to 6, let X_d = <-1,-2>_d. Then
//   g(d)      = 0 if |X_d| = 0 (mod 4), phi(d)/|X_d| if |X_d| = 2 (mod 4)
//   f(n)      = sum of g(d) over divisors d > 1 of n
//   psi(n)    = phi(n) - 18 g(n)
//   psi*(n)   = sum of psi(d) over divisors d > 1 of n  (= n - 1 - 18 f(n))

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace stsd::nt {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

std::vector<PrimePower> factorize(std::uint64_t n);
/// Divisors greater than 1, ascending.
std::vector<std::uint64_t> divisors_gt1(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Order of `a` in the units mod `d`, computed from the factorisation of phi(d).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t d);

/// Order of the subgroup of Z*_d generated by `generators` (negative values
/// are reduced mod d), by breadth-first closure over explicit residues.
std::uint64_t subgroup_order(std::uint64_t d, std::span<const std::int64_t> generators);

/// |<-1,-2>_d| from the order of -2: equal to it when -1 is a power of -2,
/// twice it otherwise.
std::uint64_t minus_one_minus_two_order(std::uint64_t d);

bool coprime_to_six(std::uint64_t n);

std::uint64_t g_of(std::uint64_t d);

struct NumberProfile {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> divisors_gt1;
  std::uint64_t phi = 0;
  std::uint64_t sub_order = 0;
  std::uint64_t g = 0;
  std::uint64_t f = 0;
  std::int64_t psi = 0;
  std::int64_t psi_star = 0;
};

/// Requires n > 1 coprime to 6.
NumberProfile profile(std::uint64_t n);
std::uint64_t f_of(std::uint64_t n);
std::int64_t psi_of(std::uint64_t n);
std::int64_t psi_star_of(std::uint64_t n);

struct ScanRow {
  std::uint64_t n;
  std::uint64_t phi;
  std::uint64_t f;
  std::int64_t psi;
  std::int64_t psi_star;
};

/// Rows for every n in (1, limit] coprime to 6, computed by sieving.
std::vector<ScanRow> scan_table(std::uint64_t limit);
/// n in (1, limit], coprime to 6, with psi*(n) <= 0.
std::vector<std::uint64_t> scan_exceptions(std::uint64_t limit);
/// (n, psi(n)) for n in (1, limit], coprime to 6, with psi(n) < 0.
std::vector<std::pair<std::uint64_t, std::int64_t>> negative_psi_scan(std::uint64_t limit);

struct GrowthRow {
  std::uint64_t n;
  std::uint64_t f;
  double ratio;
};

/// Every `step`-th n coprime to 6 in [5, limit], starting from 5.
std::vector<GrowthRow> f_growth_table(std::uint64_t limit, std::uint64_t step);

}  // namespace stsd::nt

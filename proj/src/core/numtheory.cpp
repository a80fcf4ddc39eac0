#include "stsd/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stsd/designs.hpp"

namespace stsd::nt {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

std::uint64_t order_given_phi(std::uint64_t a, std::uint64_t d, std::uint64_t phi,
                              const std::vector<PrimePower>& phi_factors) {
  std::uint64_t order = phi;
  for (const auto& [p, e] : phi_factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(a, order / p, d) != 1) break;
      order /= p;
    }
  }
  return order;
}

std::uint64_t subgroup_order_fast(std::uint64_t d, std::uint64_t phi, const std::vector<PrimePower>& phi_factors) {
  const std::uint64_t minus_two = (d - 2) % d;
  const std::uint64_t ord = order_given_phi(minus_two, d, phi, phi_factors);
  const bool minus_one_inside = ord % 2 == 0 && pow_mod(minus_two, ord / 2, d) == d - 1;
  return minus_one_inside ? ord : 2 * ord;
}

std::uint64_t g_from(std::uint64_t phi, std::uint64_t sub_order) {
  return sub_order % 4 == 0 ? 0 : phi / sub_order;
}

void require_unit_modulus(std::uint64_t d) {
  require(d >= 3 && d % 2 == 1, "modulus " + std::to_string(d) + " must be odd and at least 3");
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors_gt1(std::uint64_t n) {
  std::vector<std::uint64_t> divisors{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t existing = divisors.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < existing; ++j) divisors.push_back(divisors[j] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(divisors.begin());
  return divisors;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t d) {
  require(d >= 2, "modulus must be at least 2");
  require(std::gcd(a % d, d) == 1, std::to_string(a) + " is not a unit mod " + std::to_string(d));
  const std::uint64_t phi = euler_phi(d);
  return order_given_phi(a % d, d, phi, factorize(phi));
}

std::uint64_t subgroup_order(std::uint64_t d, std::span<const std::int64_t> generators) {
  require_unit_modulus(d);
  const auto sd = static_cast<std::int64_t>(d);
  std::vector<std::uint64_t> gens;
  for (std::int64_t g : generators) {
    const auto r = static_cast<std::uint64_t>(((g % sd) + sd) % sd);
    require(std::gcd(r, d) == 1,
            "generator " + std::to_string(g) + " shares a factor with " + std::to_string(d));
    gens.push_back(r);
  }
  std::vector<char> seen(d, 0);
  std::vector<std::uint64_t> frontier{1};
  seen[1] = 1;
  std::uint64_t count = 1;
  while (!frontier.empty()) {
    const std::uint64_t x = frontier.back();
    frontier.pop_back();
    for (std::uint64_t g : gens) {
      const std::uint64_t y = mul_mod(x, g, d);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count;
}

std::uint64_t minus_one_minus_two_order(std::uint64_t d) {
  require_unit_modulus(d);
  const std::uint64_t phi = euler_phi(d);
  return subgroup_order_fast(d, phi, factorize(phi));
}

bool coprime_to_six(std::uint64_t n) { return n % 2 != 0 && n % 3 != 0; }

std::uint64_t g_of(std::uint64_t d) {
  require(d > 1 && coprime_to_six(d), "g is defined for d > 1 coprime to 6, got " + std::to_string(d));
  return g_from(euler_phi(d), minus_one_minus_two_order(d));
}

NumberProfile profile(std::uint64_t n) {
  require(n > 1 && coprime_to_six(n), "n must be > 1 and congruent to 1 or 5 (mod 6), got " + std::to_string(n));
  NumberProfile prof;
  prof.n = n;
  prof.divisors_gt1 = divisors_gt1(n);
  prof.phi = euler_phi(n);
  prof.sub_order = minus_one_minus_two_order(n);
  prof.g = g_from(prof.phi, prof.sub_order);
  prof.psi = static_cast<std::int64_t>(prof.phi) - 18 * static_cast<std::int64_t>(prof.g);
  for (std::uint64_t d : prof.divisors_gt1) {
    const std::uint64_t gd = d == n ? prof.g : g_of(d);
    prof.f += gd;
    prof.psi_star += static_cast<std::int64_t>(euler_phi(d)) - 18 * static_cast<std::int64_t>(gd);
  }
  if (prof.psi_star != static_cast<std::int64_t>(n) - 1 - 18 * static_cast<std::int64_t>(prof.f))
    throw std::logic_error("psi*(" + std::to_string(n) + ") disagrees with n - 1 - 18 f(n)");
  return prof;
}

std::uint64_t f_of(std::uint64_t n) { return profile(n).f; }
std::int64_t psi_of(std::uint64_t n) { return profile(n).psi; }
std::int64_t psi_star_of(std::uint64_t n) { return profile(n).psi_star; }

std::vector<ScanRow> scan_table(std::uint64_t limit) {
  std::vector<ScanRow> rows;
  if (limit < 5) return rows;
  const std::size_t size = limit + 1;

  // Smallest prime factors, for factorising phi(d) < d.
  std::vector<std::uint32_t> spf(size, 0);
  for (std::uint64_t i = 2; i < size; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j < size; j += i)
      if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
  }
  auto factor_small = [&](std::uint64_t m) {
    std::vector<PrimePower> out;
    while (m > 1) {
      const std::uint64_t p = spf[m];
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    return out;
  };

  std::vector<std::uint64_t> phi(size);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::uint64_t p = 2; p < size; ++p)
    if (spf[p] == p)
      for (std::uint64_t j = p; j < size; j += p) phi[j] = phi[j] / p * (p - 1);

  std::vector<std::uint64_t> g(size, 0), f(size, 0);
  std::vector<std::int64_t> psi(size, 0), psi_star(size, 0);
  for (std::uint64_t d = 5; d < size; ++d) {
    if (!coprime_to_six(d)) continue;
    g[d] = g_from(phi[d], subgroup_order_fast(d, phi[d], factor_small(phi[d])));
    psi[d] = static_cast<std::int64_t>(phi[d]) - 18 * static_cast<std::int64_t>(g[d]);
    for (std::uint64_t m = d; m < size; m += d) {
      f[m] += g[d];
      psi_star[m] += psi[d];
    }
  }
  for (std::uint64_t n = 5; n < size; ++n)
    if (coprime_to_six(n)) rows.push_back({n, phi[n], f[n], psi[n], psi_star[n]});
  return rows;
}

std::vector<std::uint64_t> scan_exceptions(std::uint64_t limit) {
  require(limit >= 3, "scan limit must be at least 3");
  std::vector<std::uint64_t> out;
  for (const auto& row : scan_table(limit))
    if (row.psi_star <= 0) out.push_back(row.n);
  return out;
}

std::vector<std::pair<std::uint64_t, std::int64_t>> negative_psi_scan(std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, std::int64_t>> out;
  for (const auto& row : scan_table(limit))
    if (row.psi < 0) out.emplace_back(row.n, row.psi);
  return out;
}

std::vector<GrowthRow> f_growth_table(std::uint64_t limit, std::uint64_t step) {
  require(step >= 1 && limit >= step, "growth table needs limit >= step >= 1");
  std::vector<GrowthRow> out;
  std::uint64_t index = 0;
  for (const auto& row : scan_table(limit)) {
    if (index++ % step != 0) continue;
    out.push_back({row.n, row.f, static_cast<double>(row.f) / static_cast<double>(row.n)});
  }
  return out;
}

}  // namespace stsd::nt

#include "irs/ramanujan.hpp"

#include <array>
#include <numeric>

#include "irs/arith.hpp"
#include "irs/errors.hpp"
#include "irs/int128.hpp"

namespace irs {

namespace {

// One prime of m: its norm, its exponent in m, and its exponent in gcd(m, n).
struct LocalExp {
  std::uint64_t norm;
  unsigned in_m;
  unsigned in_gcd;
};

// Ideals of 64-bit norm have far fewer distinct prime factors than this.
constexpr std::size_t kMaxPrimes = 64;

template <bool Signed>
std::int64_t sum_over_gcd_divisors(const Ideal& m, const Ideal& n) {
  require_same_field(m, n);
  std::array<LocalExp, kMaxPrimes> local{};
  std::size_t count = 0;
  int sign_m = 1;  // mu of the part of m coprime to n
  bool zero = false;
  for (const auto& [p, e] : m.factors()) {
    const unsigned g = std::min(e, n.exponent(p));
    if (g == 0) {
      // d is forced to exponent 0 here, so m/d keeps the full exponent e.
      if (e >= 2) zero = true;
      sign_m = -sign_m;
      continue;
    }
    local[count++] = LocalExp{p.norm, e, g};
  }
  if (zero) return 0;

  // Odometer over exponent vectors of divisors d of gcd(m, n).
  std::array<unsigned, kMaxPrimes> exp{};
  i128 sum = 0;
  while (true) {
    i128 norm_d = 1;
    int mu = sign_m;
    for (std::size_t i = 0; i < count; ++i) {
      const unsigned rest = local[i].in_m - exp[i];
      if (rest >= 2) {
        mu = 0;
        break;
      }
      if (rest == 1) mu = -mu;
    }
    if (mu != 0) {
      for (std::size_t i = 0; i < count; ++i) {
        for (unsigned k = 0; k < exp[i]; ++k) norm_d = checked_mul(norm_d, static_cast<i128>(local[i].norm));
      }
      sum = checked_add(sum, Signed ? mu * norm_d : norm_d);
    }
    std::size_t i = 0;
    while (i < count && exp[i] == local[i].in_gcd) exp[i++] = 0;
    if (i == count) break;
    ++exp[i];
  }
  return narrow64(sum, "Ramanujan sum");
}

}  // namespace

std::int64_t ramanujan_sum(const Ideal& m, const Ideal& n) { return sum_over_gcd_divisors<true>(m, n); }

std::int64_t ramanujan_sum_abs(const Ideal& m, const Ideal& n) { return sum_over_gcd_divisors<false>(m, n); }

std::int64_t classical_ramanujan(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw DomainError("classical_ramanujan: m, n must be >= 1");
  const std::uint64_t g = std::gcd(m, n);
  i128 sum = 0;
  for (std::uint64_t d = 1; d * d <= g; ++d) {
    if (g % d != 0) continue;
    for (std::uint64_t dd : {d, g / d}) {
      const auto mf = factorize(m / dd);
      int mu = 1;
      for (const auto& [p, e] : mf) mu = e >= 2 ? 0 : -mu;
      sum += static_cast<i128>(mu) * dd;
      if (dd == g / dd) break;
    }
  }
  return narrow64(sum);
}

}  // namespace irs

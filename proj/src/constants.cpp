#include "irs/constants.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "irs/errors.hpp"

namespace irs {

namespace {

// B_2, B_4, ..., B_20.
constexpr std::array<long double, 10> kBernoulli = {
    1.0L / 6,        -1.0L / 30,     1.0L / 42,          -1.0L / 30,         5.0L / 66,
    -691.0L / 2730,  7.0L / 6,       -3617.0L / 510,     43867.0L / 798,     -174611.0L / 330,
};
constexpr int kTerms = static_cast<int>(kBernoulli.size());

// Rising factorial s (s+1) ... (s+n-1).
long double rising(long double s, int n) {
  long double r = 1;
  for (int i = 0; i < n; ++i) r *= s + i;
  return r;
}

// Truncation error of Euler-Maclaurin with kTerms corrections after K head
// terms, for real s > 0 and shift >= K:
//   4 (s)_{2M} / (2 pi)^{2M} * K^{1-s-2M} / (s + 2M - 1).
long double em_remainder(long double s, long double K) {
  const int twoM = 2 * kTerms;
  return 4 * rising(s, twoM) / std::pow(2 * std::numbers::pi_v<long double>, twoM) *
         std::pow(K, 1 - s - twoM) / (s + twoM - 1);
}

}  // namespace

Certified L_chi(const FieldSpec& spec, double s, double tol) {
  if (!(s >= 1)) throw DomainError("L_chi: s must be >= 1");
  if (!(tol > 0)) throw DomainError("L_chi: tol must be > 0");
  const std::uint64_t q = spec.modulus();
  const long double ls = s;
  const long double qs = std::pow(static_cast<long double>(q), -ls);
  const long double eps = std::numeric_limits<long double>::epsilon();

  for (std::uint64_t K = 8; K <= (1u << 20); K *= 2) {
    const long double trunc = qs * static_cast<long double>(q) * em_remainder(ls, static_cast<long double>(K));
    if (trunc > tol / 2) continue;

    long double total = 0;
    long double magnitude = 0;
    for (std::uint64_t a = 1; a <= q; ++a) {
      const int c = spec.chi(a);
      if (c == 0) continue;
      const long double alpha = static_cast<long double>(a) / q;
      long double head = 0;
      for (std::uint64_t k = 0; k < K; ++k) head += std::pow(k + alpha, -ls);
      const long double x = K + alpha;
      // (x^{1-s} - 1)/(s - 1); the -1 cancels over a period and keeps s = 1 finite.
      const long double pole = ls == 1 ? -std::log(x) : std::expm1((1 - ls) * std::log(x)) / (ls - 1);
      long double tail = std::pow(x, -ls) / 2;
      long double fact = 1;  // (2j)!
      for (int j = 1; j <= kTerms; ++j) {
        fact *= (2 * j - 1) * (2 * j);
        tail += kBernoulli[j - 1] / fact * rising(ls, 2 * j - 1) * std::pow(x, -ls - 2 * j + 1);
      }
      const long double term = head + pole + tail;
      total += c * term;
      magnitude += std::fabs(head) + std::fabs(pole) + std::fabs(tail);
    }
    const long double rounding = 16 * eps * (static_cast<long double>(K) + 8) * magnitude * qs;
    const long double bound = trunc + rounding;
    if (bound > tol) {
      throw ConvergenceError("L_chi: rounding error " + std::to_string(static_cast<double>(rounding)) +
                             " exceeds tolerance");
    }
    return Certified{static_cast<double>(total * qs), static_cast<double>(bound)};
  }
  throw ConvergenceError("L_chi: tolerance unreachable within the iteration cap");
}

Certified L_chi_partial_sum(const FieldSpec& spec, double s, std::uint64_t terms) {
  if (!(s >= 1)) throw DomainError("L_chi_partial_sum: s must be >= 1");
  long double sum = 0;
  for (std::uint64_t n = terms; n >= 1; --n) {
    const int c = spec.chi(n);
    if (c != 0) sum += c * std::pow(static_cast<long double>(n), -static_cast<long double>(s));
  }
  long double partial = 0;
  long double B = 0;
  for (std::uint64_t a = 1; a <= spec.modulus(); ++a) {
    partial += spec.chi(a);
    B = std::max(B, std::fabs(partial));
  }
  const long double tail = 2 * B * std::pow(static_cast<long double>(terms), -static_cast<long double>(s));
  return Certified{static_cast<double>(sum), static_cast<double>(tail)};
}

double rho_F(const FieldSpec& spec, double tol) { return L_chi(spec, 1.0, tol).value; }

Rational zetaF_0(const FieldSpec& spec) {
  if (spec.discriminant() > 0) return Rational(0);
  std::int64_t weighted = 0;
  for (std::uint64_t a = 1; a <= spec.modulus(); ++a) weighted += spec.chi(a) * static_cast<std::int64_t>(a);
  return make_rational(weighted) / make_rational(static_cast<std::int64_t>(2 * spec.modulus()));
}

double zetaF_2(const FieldSpec& spec, double tol) {
  constexpr double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  return zeta2 * L_chi(spec, 2.0, tol / zeta2).value;
}

FieldConstants field_constants(const FieldSpec& spec, double tol) {
  constexpr double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  const auto l1 = L_chi(spec, 1.0, tol);
  const auto l2 = L_chi(spec, 2.0, tol / zeta2);
  FieldConstants c;
  c.D = spec.discriminant();
  c.rho_F = l1.value;
  c.zetaF_2 = zeta2 * l2.value;
  c.zetaF_0 = zetaF_0(spec);
  c.tolerance = std::max(l1.error_bound, zeta2 * l2.error_bound);
  return c;
}

}  // namespace irs

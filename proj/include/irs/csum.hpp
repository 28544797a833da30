#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irs/constants.hpp"
#include "irs/dseries.hpp"
#include "irs/ideal.hpp"
#include "irs/int128.hpp"

namespace irs {

/// Brute-force scale guard: at most this many (m, n) pairings.
inline constexpr std::uint64_t kBruteForcePairLimit = 100'000'000;

/// S(n; X) = sum_{N(m) <= X} c_m(n), computed as
/// sum_{d | n, N(d) <= X} N(d) M_F(floor(X / N(d))).
/// Throws GuardError if tables.bound < X.
std::int64_t inner_sum(const Ideal& n, std::uint64_t X, const SummatoryTables& tables);

/// C_{F,k}(X, Y) = sum_{N(n) <= Y} S(n; X)^k by direct evaluation of every
/// c_m(n). Throws GuardError past kBruteForcePairLimit pairings.
i128 c_sum_bruteforce(const FieldSpec& spec, int k, std::uint64_t X, std::uint64_t Y);

/// Serial reference: walks the ideal enumeration and sums inner_sum(n)^k.
/// Needs tables.bound >= X.
i128 c_sum_reference(const FieldSpec& spec, int k, std::uint64_t X, std::uint64_t Y, const SummatoryTables& tables);

/// Fast path.
///   k = 1: sum_{u <= X} a_F(u) u M_F(X/u) A_F(Y/u); needs tables.bound >= max(X, Y).
///   k = 2: OpenMP reduction over norms n <= Y; ideals of each norm are
///          grouped by their divisor-norm multiset (truncated at X), so
///          conjugates are evaluated once. Needs tables.bound >= X.
/// threads <= 0 uses the OpenMP default. The result does not depend on it.
i128 c_sum_fast(const FieldSpec& spec, int k, std::uint64_t X, std::uint64_t Y, const SummatoryTables& tables,
                int threads = 0);

/// Rational-integer analogue C_k(X, Y) by the same d-rearrangement.
i128 classical_c_sum(int k, std::uint64_t X, std::uint64_t Y);

/// C_k(X, Y) from classical_ramanujan directly; small inputs only.
i128 classical_c_sum_bruteforce(int k, std::uint64_t X, std::uint64_t Y);

/// k = 1: rho_F Y.
/// k = 2: rho_F^2 X^2 Y / (2 zeta_F(2)) + zeta_F(0) rho_F^2 X^4 / (4 zeta_F(2)^2).
double main_term(int k, double X, double Y, const FieldConstants& consts);

/// The X^4 coefficient of the k = 2 main term, exact in zeta_F(0).
double x4_coefficient(const FieldConstants& consts);

/// Error envelopes without O-constants, natural logarithms:
///   k = 1: X Y^{1/2} (log Y)^7 + X^2
///   k = 2: X^{24/5} Y^{-2/5} + X^2 Y^{2/3} (log Y)^5 + X^{3/2} Y (log Y)^3
double envelope(int k, double X, double Y);

struct TheoremReport {
  std::int64_t D = 0;
  int k = 1;
  std::uint64_t X = 0;
  std::uint64_t Y = 0;
  i128 computed = 0;
  double main_term = 0;
  double residual = 0;
  double envelope = 0;
  double ratio = 0;
  /// |computed / main_term - 1|.
  double relative_error = 0;
  /// Empty unless the theorem hypotheses fail (X >= Y, or Y <= X^2 for k = 2).
  std::string warning;
};

TheoremReport theorem_report(const FieldSpec& spec, int k, std::uint64_t X, std::uint64_t Y,
                             const SummatoryTables& tables, const FieldConstants& consts, int threads = 0);

/// Geometric grid of Y values with X = floor(Y^{1/delta}).
struct GridConfig {
  std::int64_t discriminant = -4;
  double y_start = 1e4;
  double ratio = 4;
  unsigned count = 6;
  double delta = 2.8;
  int k = 1;
  int threads = 0;

  /// Throws DomainError: delta > 2, ratio > 1, y_start >= 1, count >= 1, k in {1, 2}.
  void validate() const;
  std::vector<std::uint64_t> y_values() const;
  std::uint64_t x_for(std::uint64_t Y) const;
};

/// X = floor(Y^exponent), robust to pow rounding at exact powers.
std::uint64_t floor_power(std::uint64_t Y, double exponent);

/// Builds tables and constants once and evaluates every grid point.
std::vector<TheoremReport> run_grid(const GridConfig& grid);

}  // namespace irs

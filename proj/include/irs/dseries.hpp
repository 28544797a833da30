#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <type_traits>
#include <vector>

#include "irs/errors.hpp"
#include "irs/field.hpp"
#include "irs/int128.hpp"
#include "irs/rational.hpp"

namespace irs {

/// Truncated Dirichlet series sum_{n <= N} c(n) n^{-s}. Indexing is 1-based;
/// slot 0 is stored but always zero.
template <typename T>
class DirichletCoeffs {
 public:
  DirichletCoeffs() = default;
  explicit DirichletCoeffs(std::size_t bound) : c_(bound + 1, T(0)) {}

  /// The identity for convolution: (1, 0, 0, ...).
  static DirichletCoeffs unit(std::size_t bound) {
    DirichletCoeffs u(bound);
    if (bound >= 1) u.c_[1] = T(1);
    return u;
  }

  /// zeta(s): (1, 1, 1, ...).
  static DirichletCoeffs ones(std::size_t bound) {
    DirichletCoeffs u(bound);
    for (std::size_t n = 1; n <= bound; ++n) u.c_[n] = T(1);
    return u;
  }

  std::size_t bound() const { return c_.empty() ? 0 : c_.size() - 1; }

  T& operator[](std::size_t n) { return c_[n]; }
  const T& operator[](std::size_t n) const { return c_[n]; }

  /// Coefficients 1..N.
  std::span<const T> values() const { return std::span<const T>(c_).subspan(c_.empty() ? 0 : 1); }

  friend bool operator==(const DirichletCoeffs& a, const DirichletCoeffs& b) { return a.c_ == b.c_; }

 private:
  std::vector<T> c_;
};

using IntCoeffs = DirichletCoeffs<std::int64_t>;
using RatCoeffs = DirichletCoeffs<Rational>;

RatCoeffs to_rational(const IntCoeffs& f);

/// Dirichlet convolution. Throws DomainError on a bound mismatch and
/// OverflowError if an integer coefficient leaves 64 bits.
IntCoeffs convolve(const IntCoeffs& f, const IntCoeffs& g);
RatCoeffs convolve(const RatCoeffs& f, const RatCoeffs& g);

/// Dirichlet inverse. Throws DomainError if f(1) = 0 (or, for integer
/// coefficients, f(1) is not a unit).
IntCoeffs invert(const IntCoeffs& f);
RatCoeffs invert(const RatCoeffs& f);

/// g(n) = f(n) * n^k.
RatCoeffs shift(const RatCoeffs& f, int k);
/// Integer form; requires k >= 0.
IntCoeffs shift(const IntCoeffs& f, int k);

/// g(n) = f(j) if n = j^m, else 0. Requires m >= 2.
template <typename T>
DirichletCoeffs<T> dilate(const DirichletCoeffs<T>& f, unsigned m) {
  if (m < 2) throw DomainError("dilate: exponent must be >= 2");
  DirichletCoeffs<T> g(f.bound());
  for (std::size_t j = 1;; ++j) {
    u128 n = 1;
    for (unsigned i = 0; i < m && n <= f.bound(); ++i) n *= j;
    if (n > f.bound()) break;
    g[static_cast<std::size_t>(n)] = f[j];
  }
  return g;
}

/// max_n |f(n) - g(n)| over the common range. Throws on a bound mismatch.
Rational max_abs_difference(const RatCoeffs& f, const RatCoeffs& g);

/// a_F(n) = number of ideals of norm n = sum_{d | n} chi_D(d).
IntCoeffs sieve_aF(const FieldSpec& spec, std::size_t bound);

/// mu_F(n) = sum of mu over ideals of norm n; the Dirichlet inverse of a_F.
IntCoeffs sieve_muF(const FieldSpec& spec, std::size_t bound);

/// q_F(n) = number of squarefree ideals of norm n.
IntCoeffs sieve_squarefree_count(const FieldSpec& spec, std::size_t bound);

/// A_F(t) = sum_{d <= t} chi(d) floor(t/d) by the hyperbola method in
/// O(sqrt t), without a table.
std::int64_t ideal_count(const FieldSpec& spec, std::uint64_t t);

/// Sieved a_F, mu_F and their cumulative sums A_F, M_F, all 1-based with
/// slot 0 equal to zero. Immutable once built.
struct SummatoryTables {
  std::int64_t discriminant = 0;
  std::size_t bound = 0;
  std::vector<std::int64_t> aF;
  std::vector<std::int64_t> muF;
  std::vector<std::int64_t> A;
  std::vector<std::int64_t> M;

  /// A_F(t) for integer t in [0, bound]; throws GuardError beyond the table.
  std::int64_t A_at(std::uint64_t t) const;
  std::int64_t M_at(std::uint64_t t) const;
  /// Real arguments use A(floor t).
  std::int64_t A_at(double t) const;
};

SummatoryTables build_tables(const FieldSpec& spec, std::size_t bound);

/// Rebuilds cumulative sums from aF and muF.
SummatoryTables tables_from_coefficients(std::int64_t discriminant, std::vector<std::int64_t> aF,
                                         std::vector<std::int64_t> muF);

/// Binary cache: "IRSV1", D (i64 LE), bound (u64 LE), then a_F(1..bound) and
/// mu_F(1..bound) as i64 LE.
void save_tables(const SummatoryTables& tables, const std::filesystem::path& path);
/// Throws DomainError on a malformed file.
SummatoryTables load_tables(const std::filesystem::path& path);

}  // namespace irs

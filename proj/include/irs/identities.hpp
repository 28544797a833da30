#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irs/dseries.hpp"
#include "irs/ideal.hpp"

namespace irs {

/// Outcome of one exact coefficient identity check. pass holds exactly when
/// the largest coefficient discrepancy is zero.
struct IdentityReport {
  std::string name;
  std::int64_t discriminant = 0;
  std::vector<std::uint64_t> bounds;
  Rational max_abs_discrepancy;
  bool pass = false;
};

IdentityReport make_report(std::string name, std::int64_t discriminant, std::vector<std::uint64_t> bounds,
                           Rational discrepancy);

/// Ideals of norm <= bound bucketed by norm, plus the sieved a_F, mu_F, q_F
/// up to the same bound. Shared read-only by the checks of one field.
class IdentityContext {
 public:
  IdentityContext(const FieldSpec& spec, std::size_t bound);

  const FieldSpec& spec() const { return spec_; }
  std::size_t bound() const { return bound_; }
  /// All ideals of norm <= bound, sorted by (norm, factors).
  const std::vector<Ideal>& ideals() const { return ideals_; }
  /// Ideals of norm exactly n, n <= bound.
  std::span<const Ideal> ideals_of_norm(std::size_t n) const;
  /// Ideals of norm <= n.
  std::span<const Ideal> ideals_up_to(std::size_t n) const;

  const IntCoeffs& aF() const { return aF_; }
  const IntCoeffs& muF() const { return muF_; }
  const IntCoeffs& qF() const { return qF_; }

 private:
  FieldSpec spec_;
  std::size_t bound_;
  std::vector<Ideal> ideals_;
  std::vector<std::size_t> start_;  // ideals of norm n live in [start_[n], start_[n+1])
  IntCoeffs aF_, muF_, qF_;
};

/// sum_n sigma_theta(n) N(n)^-w = zeta_F(w) zeta_F(w - theta), up to N.
IdentityReport verify_sigma_identity(const IdentityContext& ctx, int theta, std::size_t N);
IdentityReport verify_sigma_identity(const FieldSpec& spec, int theta, std::size_t N);

/// Ramanujan's identity for sigma_t1 * sigma_t2, up to N.
IdentityReport verify_ramanujan_identity(const IdentityContext& ctx, int theta1, int theta2, std::size_t N);
IdentityReport verify_ramanujan_identity(const FieldSpec& spec, int theta1, int theta2, std::size_t N);

/// For fixed n: sum over m of N(m) = j of c_m(n) against t_n * mu_F
/// (signed), or of c*_m(n) against t_n * q_F (unsigned), for j <= J, where
/// t_n(u) = u * #{d | n : N(d) = u}.
IdentityReport verify_inner_inversion(const IdentityContext& ctx, const Ideal& n, std::size_t J, bool signed_sum);
IdentityReport verify_inner_inversion(const FieldSpec& spec, const Ideal& n, std::size_t J, bool signed_sum);

/// Two-variable identity for sum c_m(n) N(m)^-s N(n)^-w on an I x J grid.
IdentityReport verify_prop31_k1(const IdentityContext& ctx, std::size_t I, std::size_t J);
IdentityReport verify_prop31_k1(const FieldSpec& spec, std::size_t I, std::size_t J);

/// Three-variable identity for sum c_m1(n) c_m2(n) on an I1 x I2 x J grid.
IdentityReport verify_prop31_k2(const IdentityContext& ctx, std::size_t I1, std::size_t I2, std::size_t J);
IdentityReport verify_prop31_k2(const FieldSpec& spec, std::size_t I1, std::size_t I2, std::size_t J);

/// Dense multivariate coefficient array with 1-based coordinates; entry
/// (i_1, ..., i_r) is the coefficient of prod i_k^{-s_k}.
class MultiSeries {
 public:
  explicit MultiSeries(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::int64_t& at(std::span<const std::size_t> index);
  std::int64_t at(std::span<const std::size_t> index) const;
  const std::vector<std::int64_t>& data() const { return data_; }

  /// Places g(u) * u^weight_power at coordinates (u^powers[0], ..., u^powers[r-1]).
  static MultiSeries embed(std::vector<std::size_t> dims, const IntCoeffs& g, std::vector<unsigned> powers,
                           unsigned weight_power);

  /// Componentwise-multiplicative convolution, truncated to dims.
  friend MultiSeries convolve(const MultiSeries& a, const MultiSeries& b);

  /// max |a - b| over all entries.
  friend std::int64_t max_abs_difference(const MultiSeries& a, const MultiSeries& b);

 private:
  std::size_t offset(std::span<const std::size_t> index) const;

  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<std::int64_t> data_;
};

/// What the default suite runs for each field.
struct IdentitySuiteConfig {
  std::size_t series_bound = 2000;           // sigma and Ramanujan identities
  std::vector<int> sigma_thetas = {-2, -1, 0, 1, 2};
  std::vector<std::pair<int, int>> ramanujan_pairs;  // empty = all of {0,1,2}^2 plus (1,-1)
  std::size_t inversion_ideals = 50;
  std::size_t inversion_norm = 1000;
  std::size_t inversion_J = 1000;
  std::size_t k1_grid = 200;
  std::size_t k2_grid = 40;
  std::uint64_t seed = 20240611;
  int threads = 0;  // 0 = OpenMP default
};

/// Runs every identity check for every discriminant, fanned out across
/// threads; report order is deterministic.
std::vector<IdentityReport> run_identity_suite(const std::vector<std::int64_t>& discriminants,
                                               const IdentitySuiteConfig& config);

}  // namespace irs

#pragma once

#include <cstdint>

#include "irs/field.hpp"
#include "irs/rational.hpp"

namespace irs {

inline constexpr double kDefaultTolerance = 1e-12;

/// A value together with a rigorous bound on its absolute error.
struct Certified {
  double value = 0;
  double error_bound = 0;
};

/// L(s, chi_D) for real s >= 1 with |error| <= tol. Sums each residue class
/// a mod |D| as a Hurwitz series with an Euler-Maclaurin tail; the class
/// poles cancel because chi sums to zero over a period. Throws
/// ConvergenceError if tol is below what double rounding allows.
Certified L_chi(const FieldSpec& spec, double s, double tol = kDefaultTolerance);

/// Plain partial sum of chi(n) n^-s over n <= terms, with the tail bounded
/// through partial summation by 2 B terms^-s, B = max |sum_{a<=t} chi(a)|.
Certified L_chi_partial_sum(const FieldSpec& spec, double s, std::uint64_t terms);

/// Residue of zeta_F at 1, i.e. L(1, chi_D).
double rho_F(const FieldSpec& spec, double tol = kDefaultTolerance);

/// zeta_F(0) = zeta(0) L(0, chi_D), exact: 0 for D > 0, otherwise
/// sum_{a=1}^{|D|} chi(a) a / (2|D|).
Rational zetaF_0(const FieldSpec& spec);

/// zeta_F(2) = (pi^2/6) L(2, chi_D).
double zetaF_2(const FieldSpec& spec, double tol = kDefaultTolerance);

/// The real constants the main terms need.
struct FieldConstants {
  std::int64_t D = 0;
  double rho_F = 0;
  double zetaF_2 = 0;
  Rational zetaF_0;
  double tolerance = 0;  // largest certified error among the real entries
};

FieldConstants field_constants(const FieldSpec& spec, double tol = kDefaultTolerance);

}  // namespace irs

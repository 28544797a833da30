#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "irs/int128.hpp"

namespace irs {

/// Exact rational coefficient type.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return Rational(z);
}

inline Rational make_rational(i128 v) { return Rational(mpz_class(to_string(v))); }

/// n^k for integer k of either sign.
inline Rational rational_pow(std::uint64_t n, int k) {
  mpz_class base;
  mpz_set_ui(base.get_mpz_t(), n);
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(p);
  Rational r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace irs

#pragma once

#include <cstdint>

#include "irs/ideal.hpp"

namespace irs {

/// c_m(n) = sum over common divisors d of m and n of N(d) * mu(m/d).
/// Throws FieldMismatch if m and n come from different fields.
std::int64_t ramanujan_sum(const Ideal& m, const Ideal& n);

/// c*_m(n): as ramanujan_sum with |mu| in place of mu. Always >= |c_m(n)|.
std::int64_t ramanujan_sum_abs(const Ideal& m, const Ideal& n);

/// Rational-integer Ramanujan sum c_m(n) = sum_{d | gcd(m,n)} d * mu(m/d), m, n >= 1.
std::int64_t classical_ramanujan(std::uint64_t m, std::uint64_t n);

}  // namespace irs

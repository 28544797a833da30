#include "irs/field.hpp"

#include <string>
#include <utility>

#include "irs/arith.hpp"
#include "irs/errors.hpp"

namespace irs {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// (a/2) for the Kronecker symbol.
int kronecker_two(std::int64_t a) {
  switch (mod_pos(a, 8)) {
    case 1:
    case 7:
      return 1;
    case 3:
    case 5:
      return -1;
    default:
      return 0;
  }
}

// Jacobi symbol (a/n), n odd positive, 0 <= a < n.
int jacobi(std::uint64_t a, std::uint64_t n) {
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::uint64_t r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

std::string_view to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::Split:
      return "split";
    case SplitKind::Inert:
      return "inert";
    case SplitKind::Ramified:
      return "ramified";
  }
  return "?";
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  if (mod_pos(d, 4) == 1) return is_squarefree(d);
  if (mod_pos(d, 4) != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t r = mod_pos(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

int kronecker_symbol(std::int64_t a, std::uint64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  while ((n & 1) == 0) {
    const int k2 = kronecker_two(a);
    if (k2 == 0) return 0;
    result *= k2;
    n >>= 1;
  }
  if (n == 1) return result;
  const auto a_mod = static_cast<std::uint64_t>(mod_pos(a, static_cast<std::int64_t>(n)));
  return result * jacobi(a_mod, n);
}

FieldSpec::FieldSpec(std::int64_t d) : d_(d), modulus_(0) {
  if (!is_fundamental_discriminant(d)) {
    throw DomainError("not a fundamental discriminant: " + std::to_string(d));
  }
  if (d > kMaxAbsDiscriminant || d < -kMaxAbsDiscriminant) {
    throw DomainError("discriminant too large for the character table: " + std::to_string(d));
  }
  modulus_ = static_cast<std::uint64_t>(d < 0 ? -d : d);
  auto table = std::make_shared<std::vector<std::int8_t>>(modulus_);
  for (std::uint64_t a = 0; a < modulus_; ++a) {
    (*table)[a] = static_cast<std::int8_t>(kronecker_symbol(d, a));
  }
  table_ = std::move(table);
}

SplitKind splitting_type(const FieldSpec& spec, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("splitting_type: not a prime: " + std::to_string(p));
  switch (spec.chi(p)) {
    case 1:
      return SplitKind::Split;
    case -1:
      return SplitKind::Inert;
    default:
      return SplitKind::Ramified;
  }
}

}  // namespace irs

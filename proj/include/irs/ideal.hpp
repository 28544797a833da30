#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irs/field.hpp"
#include "irs/rational.hpp"

namespace irs {

/// A prime ideal above the rational prime p. Split primes have two
/// conjugates told apart by conjugate_index; every other kind uses 0.
struct PrimeIdeal {
  std::uint64_t p = 0;
  SplitKind kind = SplitKind::Split;
  std::uint8_t conjugate_index = 0;
  std::uint64_t norm = 0;

  /// Throws DomainError on an inconsistent (kind, conjugate_index) pair.
  static PrimeIdeal make(std::uint64_t p, SplitKind kind, std::uint8_t conjugate_index = 0);

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.p == b.p && a.conjugate_index == b.conjugate_index;
  }
  /// Canonical order (p, conjugate_index).
  friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.p != b.p ? a.p < b.p : a.conjugate_index < b.conjugate_index;
  }
};

/// An integral ideal in factored form. The factor list is kept sorted by
/// (p, conjugate_index) with strictly positive exponents; the empty list is
/// the unit ideal. Values are immutable once built.
class Ideal {
 public:
  using Factor = std::pair<PrimeIdeal, unsigned>;

  /// The unit ideal (1) of the field.
  explicit Ideal(const FieldSpec& spec);

  /// Builds from an unsorted factor list; merges repeats and drops zero
  /// exponents. Throws OverflowError if the norm exceeds 64 bits.
  Ideal(std::int64_t discriminant, std::vector<Factor> factors);

  static Ideal prime_power(const FieldSpec& spec, const PrimeIdeal& p, unsigned e = 1);

  std::int64_t discriminant() const { return disc_; }
  std::uint64_t norm() const { return norm_; }
  std::span<const Factor> factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  /// Exponent of p in this ideal (0 if absent).
  unsigned exponent(const PrimeIdeal& p) const;

  /// Product (exponent addition).
  Ideal operator*(const Ideal& other) const;

  /// Exact quotient this / d. Throws DomainError unless d divides this.
  Ideal quotient(const Ideal& d) const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  /// Order by (norm, canonical factor list); use for deterministic sorting.
  friend bool operator<(const Ideal& a, const Ideal& b);

  /// Readable form such as "P2^2*P5'" (primed = conjugate_index 1, inert
  /// primes marked with 'i', unit = "(1)").
  std::string to_string() const;

 private:
  Ideal(std::int64_t disc, std::vector<Factor> sorted, std::uint64_t norm)
      : disc_(disc), factors_(std::move(sorted)), norm_(norm) {}

  std::int64_t disc_;
  std::vector<Factor> factors_;
  std::uint64_t norm_;
};

/// Throws FieldMismatch unless both ideals come from the same field.
void require_same_field(const Ideal& a, const Ideal& b);

/// Prime ideals of norm <= bound, sorted by (norm, p, conjugate_index).
std::vector<PrimeIdeal> prime_ideals_up_to(const FieldSpec& spec, std::uint64_t bound);

/// Every ideal of norm <= bound exactly once. Depth-first over prime ideals
/// sorted by norm; the output order is unspecified.
std::vector<Ideal> enumerate_ideals(const FieldSpec& spec, std::uint64_t bound);

/// Streams the same ideals as enumerate_ideals without materializing them.
void for_each_ideal(const FieldSpec& spec, std::uint64_t bound, const std::function<void(const Ideal&)>& visit);

/// Every ideal of norm exactly n (a_F(n) of them), sorted.
std::vector<Ideal> ideals_of_norm(const FieldSpec& spec, std::uint64_t n);

/// 0 if some prime ideal divides a twice, else (-1)^(number of prime factors).
int mobius(const Ideal& a);

/// True iff d divides a (componentwise exponent <=).
bool divides(const Ideal& d, const Ideal& a);

/// All divisors of a; prod(e_i + 1) of them.
std::vector<Ideal> divisors(const Ideal& a);

/// Componentwise minimum of exponents.
Ideal gcd(const Ideal& a, const Ideal& b);

/// sigma_theta(a) = sum over divisors d of N(d)^theta, exact.
Rational sigma_theta(const Ideal& a, int theta);

}  // namespace irs

#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace irs {

/// How a rational prime decomposes in a quadratic field.
enum class SplitKind : std::uint8_t { Split, Inert, Ramified };

std::string_view to_string(SplitKind kind);

/// True iff d is the discriminant of a quadratic field: d != 1, and either
/// d = 1 mod 4 squarefree, or d = 4m with m = 2, 3 mod 4 squarefree.
bool is_fundamental_discriminant(std::int64_t d);

/// Kronecker symbol (a/n) for n >= 0, using the 2-adic extension of the
/// Jacobi symbol.
int kronecker_symbol(std::int64_t a, std::uint64_t n);

/// A quadratic field identified by its fundamental discriminant, with the
/// character chi_D tabulated over one period.
class FieldSpec {
 public:
  /// Largest |D| accepted; the character table has |D| entries.
  static constexpr std::int64_t kMaxAbsDiscriminant = 10'000'000;

  /// Throws DomainError if d is not a fundamental discriminant or |d| is too large.
  explicit FieldSpec(std::int64_t d);

  std::int64_t discriminant() const { return d_; }
  std::uint64_t modulus() const { return modulus_; }

  /// chi_D(n) for n >= 0.
  int chi(std::uint64_t n) const { return (*table_)[n % modulus_]; }

  bool operator==(const FieldSpec& other) const { return d_ == other.d_; }

 private:
  std::int64_t d_;
  std::uint64_t modulus_;
  std::shared_ptr<const std::vector<std::int8_t>> table_;
};

/// chi_D(n); 0 exactly when gcd(n, D) > 1, including n = 0.
inline int kronecker(const FieldSpec& spec, std::uint64_t n) { return spec.chi(n); }

/// Throws DomainError if p is not prime.
SplitKind splitting_type(const FieldSpec& spec, std::uint64_t p);

}  // namespace irs

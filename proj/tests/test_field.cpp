#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "irs/arith.hpp"
#include "irs/errors.hpp"
#include "irs/field.hpp"
#include "support.hpp"

using namespace irs;

namespace {

// Discriminant of Q(sqrt n) for squarefree n != 0, 1.
std::int64_t disc_of(std::int64_t n) { return ((n % 4) + 4) % 4 == 1 ? n : 4 * n; }

// Splitting of p in Q(sqrt D) by counting roots of the minimal polynomial
// of the ring generator mod p (Dedekind-Kummer).
SplitKind split_by_roots(std::int64_t D, std::uint64_t p) {
  const auto P = static_cast<std::int64_t>(p);
  auto mod = [P](std::int64_t v) { return ((v % P) + P) % P; };
  int roots = 0;
  int double_root = 0;
  for (std::int64_t x = 0; x < P; ++x) {
    // D = 1 mod 4: x^2 - x + (1 - D)/4; D = 0 mod 4: x^2 - D/4.
    const std::int64_t v = ((D % 4) + 4) % 4 == 1 ? mod(x * x - x + (1 - D) / 4) : mod(x * x - D / 4);
    const std::int64_t dv = ((D % 4) + 4) % 4 == 1 ? mod(2 * x - 1) : mod(2 * x);
    if (v == 0) {
      ++roots;
      if (dv == 0) ++double_root;
    }
  }
  if (double_root > 0) return SplitKind::Ramified;
  return roots == 2 ? SplitKind::Split : SplitKind::Inert;
}

}  // namespace

TEST_CASE("fundamental discriminants match the discriminants of Q(sqrt n)") {
  std::set<std::int64_t> expected;
  for (std::int64_t n = -400; n <= 400; ++n) {
    if (n == 0 || n == 1 || !is_squarefree(n)) continue;
    expected.insert(disc_of(n));
  }
  for (std::int64_t d = -400; d <= 400; ++d) {
    CAPTURE(d);
    CHECK(is_fundamental_discriminant(d) == (expected.count(d) == 1));
  }
  CHECK(is_fundamental_discriminant(-4));
  CHECK(is_fundamental_discriminant(5));
  CHECK(is_fundamental_discriminant(12));  // Q(sqrt 3)
  CHECK_FALSE(is_fundamental_discriminant(1));
  CHECK_FALSE(is_fundamental_discriminant(0));
  CHECK_FALSE(is_fundamental_discriminant(-16));
  CHECK_FALSE(is_fundamental_discriminant(20));
}

TEST_CASE("kronecker examples") {
  const FieldSpec gauss(-4);
  CHECK(kronecker(gauss, 2) == 0);
  CHECK(kronecker(gauss, 3) == -1);
  CHECK(kronecker(gauss, 0) == 0);
  CHECK(kronecker(FieldSpec(5), 4) == 1);
  for (std::uint64_t n = 1; n < 200; n += 2) {
    CHECK(kronecker(gauss, n) == (n % 4 == 1 ? 1 : -1));
  }
}

TEST_CASE("kronecker agrees with splitting by polynomial roots") {
  for (auto D : test::kTestDiscriminants) {
    const FieldSpec spec(D);
    for (std::uint32_t p : primes_up_to(2000)) {
      CAPTURE(D);
      CAPTURE(p);
      CHECK(splitting_type(spec, p) == split_by_roots(D, p));
    }
  }
}

TEST_CASE("kronecker against quadratic residues for odd primes") {
  for (std::int64_t D : {-4, -3, -7, -8, 5, 8, 13, -20, 12, -23, 41}) {
    const FieldSpec spec(D);
    for (std::uint32_t p : primes_up_to(500)) {
      if (p == 2) continue;
      const std::int64_t r = ((D % p) + p) % p;
      int expected = -1;
      if (r == 0) {
        expected = 0;
      } else {
        for (std::int64_t x = 1; x < p; ++x) {
          if (x * x % p == r) expected = 1;
        }
      }
      CHECK(spec.chi(p) == expected);
    }
  }
}

TEST_CASE("character is completely multiplicative, periodic and sums to zero") {
  std::mt19937_64 rng(7);
  for (auto D : test::kTestDiscriminants) {
    const FieldSpec spec(D);
    std::uniform_int_distribution<std::uint64_t> u(1, 100000);
    for (int i = 0; i < 2000; ++i) {
      const auto n = u(rng);
      const auto m = u(rng);
      CHECK(spec.chi(n * m) == spec.chi(n) * spec.chi(m));
      CHECK(spec.chi(n + spec.modulus()) == spec.chi(n));
      CHECK(kronecker_symbol(D, n) == spec.chi(n));
    }
    int sum = 0;
    for (std::uint64_t a = 1; a <= spec.modulus(); ++a) sum += spec.chi(a);
    CHECK(sum == 0);
  }
}

TEST_CASE("splitting_type examples and errors") {
  const FieldSpec gauss(-4);
  CHECK(splitting_type(gauss, 2) == SplitKind::Ramified);
  CHECK(splitting_type(gauss, 5) == SplitKind::Split);
  CHECK(splitting_type(gauss, 3) == SplitKind::Inert);
  CHECK_THROWS_AS(splitting_type(gauss, 9), DomainError);
  CHECK_THROWS_AS(splitting_type(gauss, 1), DomainError);
  CHECK_THROWS_AS(FieldSpec(20), DomainError);
  CHECK_NOTHROW(FieldSpec(24));
  CHECK_THROWS_AS(FieldSpec(1), DomainError);
}

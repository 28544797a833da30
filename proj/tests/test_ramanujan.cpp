#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "irs/arith.hpp"
#include "irs/errors.hpp"
#include "irs/ramanujan.hpp"
#include "support.hpp"

using namespace irs;

namespace {

// The definition verbatim: every d dividing m, kept when it also divides n.
std::int64_t by_definition(const Ideal& m, const Ideal& n, bool signed_sum) {
  std::int64_t s = 0;
  for (const auto& d : divisors(m)) {
    if (!divides(d, n)) continue;
    const int mu = mobius(m.quotient(d));
    s += static_cast<std::int64_t>(d.norm()) * (signed_sum ? mu : std::abs(mu));
  }
  return s;
}

const FieldSpec kGauss(-4);
const PrimeIdeal P2 = PrimeIdeal::make(2, SplitKind::Ramified);
const PrimeIdeal P3 = PrimeIdeal::make(3, SplitKind::Inert);
const PrimeIdeal P5a = PrimeIdeal::make(5, SplitKind::Split, 0);

}  // namespace

TEST_CASE("ramanujan_sum examples") {
  const Ideal unit(kGauss);
  const Ideal p(-4, {{P5a, 1}});
  const Ideal q(-4, {{P3, 1}});
  const Ideal n_with(-4, {{P5a, 2}, {P2, 1}});
  const Ideal n_without(-4, {{P2, 3}});
  CHECK(ramanujan_sum(unit, n_with) == 1);
  CHECK(ramanujan_sum(p, n_without) == -1);
  CHECK(ramanujan_sum(p, n_with) == 5 - 1);
  CHECK(ramanujan_sum(q, q) == 9 - 1);

  CHECK(ramanujan_sum_abs(unit, n_with) == 1);
  CHECK(ramanujan_sum_abs(p, n_without) == 1);
  const Ideal p_sq(-4, {{P5a, 2}});
  CHECK(ramanujan_sum_abs(p_sq, p_sq) == 25 + 5);

  CHECK_THROWS_AS(ramanujan_sum(unit, Ideal(FieldSpec(5))), FieldMismatch);
}

TEST_CASE("property: gcd-divisor evaluation matches the definition and its invariants") {
  for (auto D : test::kTestDiscriminants) {
    const FieldSpec spec(D);
    test::IdealGenerator gen(spec, 40, 77 + static_cast<std::uint64_t>(D + 50));
    for (int i = 0; i < 10000; ++i) {
      const auto m = gen(3, 3, 10'000'000);
      const auto n = gen(3, 3, 10'000'000);
      const auto c = ramanujan_sum(m, n);
      const auto cs = ramanujan_sum_abs(m, n);
      CHECK(std::abs(c) <= cs);
      if (i % 5 == 0) {
        CHECK(c == by_definition(m, n, true));
        CHECK(cs == by_definition(m, n, false));
      }
      if (gcd(m, n).is_unit()) CHECK(c == mobius(m));
    }
    for (int i = 0; i < 300; ++i) {
      const auto n = gen(3, 3, 10'000'000);
      std::int64_t jordan = 0;
      for (const auto& d : divisors(n)) jordan += static_cast<std::int64_t>(d.norm()) * mobius(n.quotient(d));
      CHECK(ramanujan_sum(n, n) == jordan);
    }
    for (int i = 0; i < 1000; ++i) {
      const auto m1 = gen(2, 2, 100'000);
      const auto m2 = gen(2, 2, 100'000);
      if (!gcd(m1, m2).is_unit()) continue;
      const auto n = gen(3, 3, 10'000'000);
      CHECK(ramanujan_sum(m1 * m2, n) == ramanujan_sum(m1, n) * ramanujan_sum(m2, n));
    }
  }
}

TEST_CASE("classical Ramanujan sum examples") {
  CHECK(classical_ramanujan(4, 2) == -2);
  CHECK(classical_ramanujan(6, 6) == 2);
  CHECK(classical_ramanujan(7, 3) == -1);
  CHECK(classical_ramanujan(1, 9) == 1);
  CHECK_THROWS_AS(classical_ramanujan(0, 1), DomainError);
}

TEST_CASE("classical Ramanujan sum equals the exponential sum and Hoelder's formula") {
  const auto mu = mobius_table(60);
  for (std::uint64_t m = 1; m <= 60; ++m) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      std::complex<double> z = 0;
      for (std::uint64_t j = 1; j <= m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        const double angle = 2 * std::numbers::pi * static_cast<double>(j * n % m) / static_cast<double>(m);
        z += std::polar(1.0, angle);
      }
      CHECK(std::abs(z.imag()) < 1e-6);
      const double rounded = std::round(z.real());
      CHECK(std::abs(z.real() - rounded) < 1e-6);
      const auto c = classical_ramanujan(m, n);
      CHECK(c == static_cast<std::int64_t>(rounded));

      const std::uint64_t g = std::gcd(m, n);
      const auto hoelder = mu[m / g] * static_cast<std::int64_t>(euler_phi(m) / euler_phi(m / g));
      CHECK(c == hoelder);
    }
  }
}

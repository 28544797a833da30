#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irs/dseries.hpp"
#include "irs/identities.hpp"
#include "irs/ramanujan.hpp"
#include "support.hpp"

using namespace irs;

namespace {

const FieldSpec kGauss(-4);
const PrimeIdeal P2 = PrimeIdeal::make(2, SplitKind::Ramified);

}  // namespace

TEST_CASE("report invariant") {
  CHECK(make_report("x", -4, {1}, 0).pass);
  CHECK_FALSE(make_report("x", -4, {1}, Rational(1, 3)).pass);
}

TEST_CASE("sigma identity") {
  for (int theta = -2; theta <= 2; ++theta) {
    CHECK(verify_sigma_identity(kGauss, theta, 1).pass);
    CHECK(verify_sigma_identity(kGauss, theta, 500).pass);
  }
  // theta = 1 at n = 2: sigma_1(P2) = 3 = 1*2 + 1*1.
  const auto aF = sieve_aF(kGauss, 2);
  CHECK(convolve(aF, shift(aF, 1))[2] == 3);
  CHECK(sigma_theta(Ideal(-4, {{P2, 1}}), 1) == 3);
}

TEST_CASE("Ramanujan identity") {
  CHECK(verify_ramanujan_identity(kGauss, 0, 0, 1).pass);
  const auto r = verify_ramanujan_identity(kGauss, 1, 0, 2000);
  CHECK(r.pass);
  CHECK(r.max_abs_discrepancy == 0);
  CHECK(verify_ramanujan_identity(FieldSpec(13), 1, -1, 400).pass);
  CHECK(verify_ramanujan_identity(FieldSpec(-3), 2, 2, 400).pass);

  // theta1 = theta2 = 0 at a split prime: two primes with sigma_0 = 2 each.
  const IdentityContext ctx(kGauss, 5);
  std::int64_t lhs = 0;
  for (const auto& p : ctx.ideals_of_norm(5)) {
    const auto s = sigma_theta(p, 0);
    lhs += Rational(s * s).get_num().get_si();
  }
  CHECK(lhs == 8);
  CHECK(4 * ctx.aF()[5] == 8);
}

TEST_CASE("inner inversion") {
  const IdentityContext ctx(kGauss, 1000);
  const Ideal unit(kGauss);
  CHECK(verify_inner_inversion(ctx, unit, 1000, true).pass);
  CHECK(verify_inner_inversion(ctx, unit, 1000, false).pass);

  const Ideal p2(-4, {{P2, 1}});
  CHECK(ramanujan_sum(p2, p2) == 1);
  CHECK(ctx.muF()[2] + 2 * ctx.muF()[1] == 1);
  CHECK(verify_inner_inversion(ctx, p2, 1000, true).pass);

  for (auto D : test::kTestDiscriminants) {
    const FieldSpec spec(D);
    const IdentityContext c(spec, 300);
    test::IdealGenerator gen(spec, 100, 5);
    for (int i = 0; i < 5; ++i) {
      const auto n = gen(3, 2, 1000);
      CHECK(verify_inner_inversion(c, n, 300, true).pass);
      CHECK(verify_inner_inversion(c, n, 300, false).pass);
    }
  }
}

TEST_CASE("k = 1 proposition against the explicit coefficient formula") {
  const std::size_t I = 30, J = 30;
  const IdentityContext ctx(kGauss, 30);
  const auto& aF = ctx.aF();
  const auto& muF = ctx.muF();
  for (std::size_t i = 1; i <= I; ++i) {
    for (std::size_t j = 1; j <= J; ++j) {
      std::int64_t lhs = 0;
      for (const auto& m : ctx.ideals_of_norm(i))
        for (const auto& n : ctx.ideals_of_norm(j)) lhs += ramanujan_sum(m, n);
      std::int64_t rhs = 0;
      for (std::size_t k = 1; k <= std::min(i, j); ++k)
        if (i % k == 0 && j % k == 0) rhs += aF[j / k] * aF[k] * static_cast<std::int64_t>(k) * muF[i / k];
      CHECK(lhs == rhs);
      if (i == 1) CHECK(lhs == aF[j]);
      if (j == 1) CHECK(lhs == muF[i]);
    }
  }
  CHECK(verify_prop31_k1(ctx, I, J).pass);
}

TEST_CASE("full-size propositions") {
  CHECK(verify_prop31_k1(kGauss, 200, 200).pass);
  CHECK(verify_prop31_k2(kGauss, 40, 40, 40).pass);
  CHECK(verify_prop31_k2(FieldSpec(5), 12, 20, 30).pass);
}

TEST_CASE("multivariate series algebra") {
  const std::vector<std::size_t> dims = {6, 6};
  const auto one = IntCoeffs::ones(6);
  const auto unit = MultiSeries::embed(dims, IntCoeffs::unit(6), {1, 1}, 0);
  const auto a = MultiSeries::embed(dims, one, {1, 0}, 0);
  CHECK(max_abs_difference(convolve(a, unit), a) == 0);
  const auto b = MultiSeries::embed(dims, one, {0, 1}, 0);
  const auto ab = convolve(a, b);
  const std::size_t idx[] = {3, 4};
  CHECK(ab.at(idx) == 1);
  const auto w = MultiSeries::embed(dims, one, {1, 1}, 1);
  const std::size_t diag[] = {4, 4};
  const std::size_t off[] = {2, 4};
  CHECK(w.at(diag) == 4);
  CHECK(w.at(off) == 0);
}

TEST_CASE("a corrupted side is detected") {
  // Comparing against the wrong shift must not pass.
  const IdentityContext ctx(FieldSpec(-3), 200);
  const auto lhs = convolve(ctx.aF(), shift(ctx.aF(), 1));
  const auto wrong = convolve(ctx.aF(), shift(ctx.aF(), 2));
  CHECK(max_abs_difference(to_rational(lhs), to_rational(wrong)) > 0);
  IdentitySuiteConfig cfg;
  cfg.series_bound = 200;
  cfg.inversion_ideals = 3;
  cfg.inversion_norm = 200;
  cfg.inversion_J = 200;
  cfg.k1_grid = 30;
  cfg.k2_grid = 10;
  const auto reports = run_identity_suite({-4, 8}, cfg);
  CHECK(reports.size() == 2 * (5 + 10 + 2 * 3 + 2));
  for (const auto& r : reports) CHECK(r.pass);
}

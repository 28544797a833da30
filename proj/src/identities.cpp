#include "irs/identities.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <random>

#include "irs/ramanujan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irs {

IdentityReport make_report(std::string name, std::int64_t discriminant, std::vector<std::uint64_t> bounds,
                           Rational discrepancy) {
  IdentityReport r;
  r.name = std::move(name);
  r.discriminant = discriminant;
  r.bounds = std::move(bounds);
  r.pass = sgn(discrepancy) == 0;
  r.max_abs_discrepancy = std::move(discrepancy);
  return r;
}

IdentityContext::IdentityContext(const FieldSpec& spec, std::size_t bound)
    : spec_(spec),
      bound_(bound),
      ideals_(enumerate_ideals(spec, bound)),
      aF_(sieve_aF(spec, bound)),
      muF_(sieve_muF(spec, bound)),
      qF_(sieve_squarefree_count(spec, bound)) {
  std::sort(ideals_.begin(), ideals_.end());
  start_.assign(bound + 2, ideals_.size());
  for (std::size_t i = ideals_.size(); i-- > 0;) start_[ideals_[i].norm()] = i;
  for (std::size_t n = bound; n-- > 0;) start_[n] = std::min(start_[n], start_[n + 1]);
}

std::span<const Ideal> IdentityContext::ideals_of_norm(std::size_t n) const {
  if (n < 1 || n > bound_) throw DomainError("ideals_of_norm: norm outside context bound");
  return std::span<const Ideal>(ideals_).subspan(start_[n], start_[n + 1] - start_[n]);
}

std::span<const Ideal> IdentityContext::ideals_up_to(std::size_t n) const {
  if (n > bound_) throw DomainError("ideals_up_to: norm outside context bound");
  return std::span<const Ideal>(ideals_).first(start_[n + 1]);
}

namespace {

void require_within(const IdentityContext& ctx, std::size_t n, const char* what) {
  if (n < 1 || n > ctx.bound()) {
    throw DomainError(std::string(what) + ": bound " + std::to_string(n) + " outside context bound " +
                      std::to_string(ctx.bound()));
  }
}

IntCoeffs truncate(const IntCoeffs& f, std::size_t N) {
  IntCoeffs g(N);
  for (std::size_t n = 1; n <= N; ++n) g[n] = f[n];
  return g;
}

std::string theta_label(int t) { return std::to_string(t); }

}  // namespace

IdentityReport verify_sigma_identity(const IdentityContext& ctx, int theta, std::size_t N) {
  require_within(ctx, N, "verify_sigma_identity");
  RatCoeffs lhs(N);
  for (const auto& a : ctx.ideals_up_to(N)) lhs[a.norm()] += sigma_theta(a, theta);

  const RatCoeffs aF = to_rational(truncate(ctx.aF(), N));
  const RatCoeffs rhs = convolve(aF, shift(aF, theta));
  return make_report("sigma[theta=" + theta_label(theta) + "]", ctx.spec().discriminant(), {N},
                     max_abs_difference(lhs, rhs));
}

IdentityReport verify_sigma_identity(const FieldSpec& spec, int theta, std::size_t N) {
  return verify_sigma_identity(IdentityContext(spec, N), theta, N);
}

IdentityReport verify_ramanujan_identity(const IdentityContext& ctx, int theta1, int theta2, std::size_t N) {
  require_within(ctx, N, "verify_ramanujan_identity");
  RatCoeffs lhs(N);
  for (const auto& a : ctx.ideals_up_to(N)) lhs[a.norm()] += sigma_theta(a, theta1) * sigma_theta(a, theta2);

  const RatCoeffs aF = to_rational(truncate(ctx.aF(), N));
  const RatCoeffs muF = to_rational(truncate(ctx.muF(), N));
  RatCoeffs rhs = convolve(aF, shift(aF, theta1));
  rhs = convolve(rhs, shift(aF, theta2));
  rhs = convolve(rhs, shift(aF, theta1 + theta2));
  rhs = convolve(rhs, dilate(shift(muF, theta1 + theta2), 2));
  return make_report("ramanujan[theta1=" + theta_label(theta1) + ",theta2=" + theta_label(theta2) + "]",
                     ctx.spec().discriminant(), {N}, max_abs_difference(lhs, rhs));
}

IdentityReport verify_ramanujan_identity(const FieldSpec& spec, int theta1, int theta2, std::size_t N) {
  return verify_ramanujan_identity(IdentityContext(spec, N), theta1, theta2, N);
}

IdentityReport verify_inner_inversion(const IdentityContext& ctx, const Ideal& n, std::size_t J, bool signed_sum) {
  require_within(ctx, J, "verify_inner_inversion");
  if (n.discriminant() != ctx.spec().discriminant()) throw FieldMismatch("verify_inner_inversion: ideal from another field");

  IntCoeffs lhs(J);
  for (const auto& m : ctx.ideals_up_to(J)) {
    lhs[m.norm()] = checked_add(lhs[m.norm()], signed_sum ? ramanujan_sum(m, n) : ramanujan_sum_abs(m, n));
  }

  IntCoeffs t(J);
  for (const auto& d : divisors(n)) {
    if (d.norm() <= J) t[d.norm()] += static_cast<std::int64_t>(d.norm());
  }
  const IntCoeffs rhs = convolve(t, truncate(signed_sum ? ctx.muF() : ctx.qF(), J));

  return make_report(std::string(signed_sum ? "inversion_signed" : "inversion_abs") + "[n=" + n.to_string() + "]",
                     ctx.spec().discriminant(), {n.norm(), J},
                     max_abs_difference(to_rational(lhs), to_rational(rhs)));
}

IdentityReport verify_inner_inversion(const FieldSpec& spec, const Ideal& n, std::size_t J, bool signed_sum) {
  return verify_inner_inversion(IdentityContext(spec, J), n, J, signed_sum);
}

// ---------------------------------------------------------------------------
// MultiSeries

MultiSeries::MultiSeries(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DomainError("MultiSeries: at least one coordinate");
  strides_.assign(dims_.size(), 1);
  std::size_t total = 1;
  for (std::size_t k = dims_.size(); k-- > 0;) {
    if (dims_[k] < 1) throw DomainError("MultiSeries: every dimension must be >= 1");
    strides_[k] = total;
    total *= dims_[k];
  }
  data_.assign(total, 0);
}

std::size_t MultiSeries::offset(std::span<const std::size_t> index) const {
  std::size_t off = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) off += (index[k] - 1) * strides_[k];
  return off;
}

std::int64_t& MultiSeries::at(std::span<const std::size_t> index) { return data_[offset(index)]; }
std::int64_t MultiSeries::at(std::span<const std::size_t> index) const { return data_[offset(index)]; }

MultiSeries MultiSeries::embed(std::vector<std::size_t> dims, const IntCoeffs& g, std::vector<unsigned> powers,
                               unsigned weight_power) {
  MultiSeries out(std::move(dims));
  if (powers.size() != out.dims_.size()) throw DomainError("embed: one power per coordinate");
  std::vector<std::size_t> idx(out.dims_.size());
  for (std::size_t u = 1; u <= g.bound(); ++u) {
    bool inside = true;
    for (std::size_t k = 0; k < idx.size() && inside; ++k) {
      u128 v = 1;
      for (unsigned e = 0; e < powers[k] && v <= out.dims_[k]; ++e) v *= u;
      inside = v <= out.dims_[k];
      idx[k] = static_cast<std::size_t>(v);
    }
    if (!inside) continue;
    std::int64_t w = g[u];
    for (unsigned e = 0; e < weight_power; ++e) w = checked_mul(w, static_cast<std::int64_t>(u));
    out.at(idx) = w;
  }
  return out;
}

MultiSeries convolve(const MultiSeries& a, const MultiSeries& b) {
  if (a.dims_ != b.dims_) throw DomainError("MultiSeries convolve: shape mismatch");
  const std::size_t rank = a.dims_.size();
  // Nonzero entries with their coordinates.
  auto nonzeros = [rank](const MultiSeries& s) {
    std::vector<std::pair<std::vector<std::size_t>, std::int64_t>> nz;
    std::vector<std::size_t> idx(rank, 1);
    for (std::size_t flat = 0; flat < s.data_.size(); ++flat) {
      if (s.data_[flat] != 0) nz.emplace_back(idx, s.data_[flat]);
      for (std::size_t k = rank; k-- > 0;) {
        if (++idx[k] <= s.dims_[k]) break;
        idx[k] = 1;
      }
    }
    return nz;
  };
  const auto na = nonzeros(a);
  const auto nb = nonzeros(b);
  std::vector<i128> acc(a.data_.size(), 0);
  std::vector<std::size_t> idx(rank);
  for (const auto& [ia, va] : na) {
    for (const auto& [ib, vb] : nb) {
      bool inside = true;
      for (std::size_t k = 0; k < rank; ++k) {
        idx[k] = ia[k] * ib[k];
        if (idx[k] > a.dims_[k]) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      auto& slot = acc[a.offset(idx)];
      slot = checked_add(slot, static_cast<i128>(va) * vb);
    }
  }
  MultiSeries out(a.dims_);
  for (std::size_t i = 0; i < acc.size(); ++i) out.data_[i] = narrow64(acc[i], "multivariate coefficient");
  return out;
}

std::int64_t max_abs_difference(const MultiSeries& a, const MultiSeries& b) {
  if (a.dims_ != b.dims_) throw DomainError("MultiSeries difference: shape mismatch");
  std::int64_t worst = 0;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    const i128 d = i128_abs(static_cast<i128>(a.data_[i]) - b.data_[i]);
    worst = std::max(worst, narrow64(d));
  }
  return worst;
}

namespace {

// v_n(i) = sum over m with N(m) = i of c_m(n), for i <= I.
std::vector<std::int64_t> ramanujan_profile(const IdentityContext& ctx, const Ideal& n, std::size_t I) {
  std::vector<std::int64_t> v(I + 1, 0);
  for (const auto& m : ctx.ideals_up_to(I)) v[m.norm()] = checked_add(v[m.norm()], ramanujan_sum(m, n));
  return v;
}

}  // namespace

IdentityReport verify_prop31_k1(const IdentityContext& ctx, std::size_t I, std::size_t J) {
  require_within(ctx, std::max(I, J), "verify_prop31_k1");
  const std::vector<std::size_t> dims{I, J};

  MultiSeries lhs(dims);
  for (const auto& n : ctx.ideals_up_to(J)) {
    const auto v = ramanujan_profile(ctx, n, I);
    for (std::size_t i = 1; i <= I; ++i) {
      const std::array<std::size_t, 2> idx{i, static_cast<std::size_t>(n.norm())};
      lhs.at(idx) = checked_add(lhs.at(idx), v[i]);
    }
  }

  // zeta_F(w) zeta_F(w + s - 1) / zeta_F(s)
  const auto& aF = ctx.aF();
  const auto& muF = ctx.muF();
  MultiSeries rhs = MultiSeries::embed(dims, aF, {0, 1}, 0);
  rhs = convolve(rhs, MultiSeries::embed(dims, aF, {1, 1}, 1));
  rhs = convolve(rhs, MultiSeries::embed(dims, muF, {1, 0}, 0));

  return make_report("prop_k1", ctx.spec().discriminant(), {I, J},
                     make_rational(max_abs_difference(lhs, rhs)));
}

IdentityReport verify_prop31_k1(const FieldSpec& spec, std::size_t I, std::size_t J) {
  return verify_prop31_k1(IdentityContext(spec, std::max(I, J)), I, J);
}

IdentityReport verify_prop31_k2(const IdentityContext& ctx, std::size_t I1, std::size_t I2, std::size_t J) {
  require_within(ctx, std::max({I1, I2, J}), "verify_prop31_k2");
  const std::vector<std::size_t> dims{I1, I2, J};
  const std::size_t I = std::max(I1, I2);

  MultiSeries lhs(dims);
  for (const auto& n : ctx.ideals_up_to(J)) {
    const auto v = ramanujan_profile(ctx, n, I);
    for (std::size_t i1 = 1; i1 <= I1; ++i1) {
      if (v[i1] == 0) continue;
      for (std::size_t i2 = 1; i2 <= I2; ++i2) {
        const std::array<std::size_t, 3> idx{i1, i2, static_cast<std::size_t>(n.norm())};
        lhs.at(idx) = checked_add(lhs.at(idx), checked_mul(v[i1], v[i2]));
      }
    }
  }

  // zeta_F(w) zeta_F(w+s1-1) zeta_F(w+s2-1) zeta_F(w+s1+s2-2)
  //   / (zeta_F(s1) zeta_F(s2) zeta_F(2w+s1+s2-2))
  const auto& aF = ctx.aF();
  const auto& muF = ctx.muF();
  MultiSeries rhs = MultiSeries::embed(dims, aF, {0, 0, 1}, 0);
  rhs = convolve(rhs, MultiSeries::embed(dims, aF, {1, 0, 1}, 1));
  rhs = convolve(rhs, MultiSeries::embed(dims, aF, {0, 1, 1}, 1));
  rhs = convolve(rhs, MultiSeries::embed(dims, aF, {1, 1, 1}, 2));
  rhs = convolve(rhs, MultiSeries::embed(dims, muF, {1, 0, 0}, 0));
  rhs = convolve(rhs, MultiSeries::embed(dims, muF, {0, 1, 0}, 0));
  rhs = convolve(rhs, MultiSeries::embed(dims, muF, {1, 1, 2}, 2));

  return make_report("prop_k2", ctx.spec().discriminant(), {I1, I2, J},
                     make_rational(max_abs_difference(lhs, rhs)));
}

IdentityReport verify_prop31_k2(const FieldSpec& spec, std::size_t I1, std::size_t I2, std::size_t J) {
  return verify_prop31_k2(IdentityContext(spec, std::max({I1, I2, J})), I1, I2, J);
}

std::vector<IdentityReport> run_identity_suite(const std::vector<std::int64_t>& discriminants,
                                               const IdentitySuiteConfig& config) {
  auto pairs = config.ramanujan_pairs;
  if (pairs.empty()) {
    for (int a : {0, 1, 2}) {
      for (int b : {0, 1, 2}) pairs.emplace_back(a, b);
    }
    pairs.emplace_back(1, -1);
  }
  const std::size_t ctx_bound = std::max({config.series_bound, config.inversion_norm, config.inversion_J,
                                          config.k1_grid, config.k2_grid, std::size_t{1}});

  // Contexts are built up front (serially) and only read by the checks.
  std::vector<IdentityContext> contexts;
  contexts.reserve(discriminants.size());
  for (auto d : discriminants) contexts.emplace_back(FieldSpec(d), ctx_bound);

  std::vector<std::function<IdentityReport()>> checks;
  for (std::size_t f = 0; f < contexts.size(); ++f) {
    const IdentityContext* ctx = &contexts[f];
    if (config.series_bound > 0) {
      for (int t : config.sigma_thetas) {
        checks.emplace_back([ctx, t, &config] { return verify_sigma_identity(*ctx, t, config.series_bound); });
      }
      for (auto [t1, t2] : pairs) {
        checks.emplace_back(
            [ctx, t1, t2, &config] { return verify_ramanujan_identity(*ctx, t1, t2, config.series_bound); });
      }
    }
    if (config.inversion_ideals > 0 && config.inversion_J > 0) {
      const auto pool = ctx->ideals_up_to(config.inversion_norm);
      std::mt19937_64 rng(config.seed ^ static_cast<std::uint64_t>(ctx->spec().discriminant()));
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (std::size_t i = 0; i < config.inversion_ideals; ++i) {
        const Ideal* n = &pool[pick(rng)];
        for (bool signed_sum : {true, false}) {
          checks.emplace_back(
              [ctx, n, signed_sum, &config] { return verify_inner_inversion(*ctx, *n, config.inversion_J, signed_sum); });
        }
      }
    }
    if (config.k1_grid > 0) {
      checks.emplace_back([ctx, &config] { return verify_prop31_k1(*ctx, config.k1_grid, config.k1_grid); });
    }
    if (config.k2_grid > 0) {
      checks.emplace_back(
          [ctx, &config] { return verify_prop31_k2(*ctx, config.k2_grid, config.k2_grid, config.k2_grid); });
    }
  }

  std::vector<IdentityReport> reports(checks.size());
  std::vector<std::exception_ptr> errors(checks.size());
  const auto count = static_cast<std::int64_t>(checks.size());
#ifdef _OPENMP
  const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      reports[i] = checks[i]();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

}  // namespace irs

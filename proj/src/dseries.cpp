#include "irs/dseries.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <string>

#include "irs/arith.hpp"

namespace irs {

namespace {

template <typename T>
void require_same_bound(const DirichletCoeffs<T>& f, const DirichletCoeffs<T>& g, const char* op) {
  if (f.bound() != g.bound()) {
    throw DomainError(std::string(op) + ": bound mismatch (" + std::to_string(f.bound()) + " vs " +
                      std::to_string(g.bound()) + ")");
  }
}

}  // namespace

RatCoeffs to_rational(const IntCoeffs& f) {
  RatCoeffs out(f.bound());
  for (std::size_t n = 1; n <= f.bound(); ++n) out[n] = make_rational(f[n]);
  return out;
}

IntCoeffs convolve(const IntCoeffs& f, const IntCoeffs& g) {
  require_same_bound(f, g, "convolve");
  const std::size_t N = f.bound();
  std::vector<i128> acc(N + 1, 0);
  for (std::size_t u = 1; u <= N; ++u) {
    if (f[u] == 0) continue;
    for (std::size_t v = 1, n = u; n <= N; ++v, n += u) {
      if (g[v] != 0) acc[n] = checked_add(acc[n], static_cast<i128>(f[u]) * g[v]);
    }
  }
  IntCoeffs out(N);
  for (std::size_t n = 1; n <= N; ++n) out[n] = narrow64(acc[n], "convolution coefficient");
  return out;
}

RatCoeffs convolve(const RatCoeffs& f, const RatCoeffs& g) {
  require_same_bound(f, g, "convolve");
  const std::size_t N = f.bound();
  RatCoeffs out(N);
  Rational term;
  for (std::size_t u = 1; u <= N; ++u) {
    if (sgn(f[u]) == 0) continue;
    for (std::size_t v = 1, n = u; n <= N; ++v, n += u) {
      if (sgn(g[v]) == 0) continue;
      term = f[u] * g[v];
      out[n] += term;
    }
  }
  return out;
}

IntCoeffs invert(const IntCoeffs& f) {
  if (f.bound() == 0) return f;
  const std::int64_t lead = f[1];
  if (lead != 1 && lead != -1) throw DomainError("invert: f(1) must be +-1 for integer coefficients");
  const std::size_t N = f.bound();
  IntCoeffs g(N);
  std::vector<i128> acc(N + 1, 0);  // acc[n] = sum_{uv = n, u < n} g(u) f(v)
  for (std::size_t n = 1; n <= N; ++n) {
    const i128 target = (n == 1 ? 1 : 0) - acc[n];
    g[n] = narrow64(target * lead, "inverse coefficient");  // lead = 1/lead
    if (g[n] == 0) continue;
    for (std::size_t v = 2, m = 2 * n; m <= N; ++v, m += n) {
      if (f[v] != 0) acc[m] = checked_add(acc[m], static_cast<i128>(g[n]) * f[v]);
    }
  }
  return g;
}

RatCoeffs invert(const RatCoeffs& f) {
  if (f.bound() == 0) return f;
  if (sgn(f[1]) == 0) throw DomainError("invert: f(1) = 0");
  const std::size_t N = f.bound();
  const Rational inv_lead = 1 / f[1];
  RatCoeffs g(N);
  RatCoeffs acc(N);
  Rational term;
  for (std::size_t n = 1; n <= N; ++n) {
    g[n] = ((n == 1 ? Rational(1) : Rational(0)) - acc[n]) * inv_lead;
    if (sgn(g[n]) == 0) continue;
    for (std::size_t v = 2, m = 2 * n; m <= N; ++v, m += n) {
      if (sgn(f[v]) == 0) continue;
      term = g[n] * f[v];
      acc[m] += term;
    }
  }
  return g;
}

RatCoeffs shift(const RatCoeffs& f, int k) {
  RatCoeffs g(f.bound());
  for (std::size_t n = 1; n <= f.bound(); ++n) {
    if (sgn(f[n]) != 0) g[n] = f[n] * rational_pow(n, k);
  }
  return g;
}

IntCoeffs shift(const IntCoeffs& f, int k) {
  if (k < 0) throw DomainError("shift: negative exponent needs rational coefficients");
  IntCoeffs g(f.bound());
  for (std::size_t n = 1; n <= f.bound(); ++n) {
    std::int64_t v = f[n];
    for (int i = 0; i < k && v != 0; ++i) v = checked_mul(v, static_cast<std::int64_t>(n), "shifted coefficient");
    g[n] = v;
  }
  return g;
}

Rational max_abs_difference(const RatCoeffs& f, const RatCoeffs& g) {
  require_same_bound(f, g, "max_abs_difference");
  Rational worst = 0;
  Rational diff;
  for (std::size_t n = 1; n <= f.bound(); ++n) {
    diff = abs(f[n] - g[n]);
    if (diff > worst) worst = diff;
  }
  return worst;
}

IntCoeffs sieve_aF(const FieldSpec& spec, std::size_t bound) {
  if (bound < 1) throw DomainError("sieve_aF: bound must be >= 1");
  std::vector<std::int8_t> chi(spec.modulus());
  for (std::uint64_t a = 0; a < spec.modulus(); ++a) chi[a] = static_cast<std::int8_t>(spec.chi(a));
  IntCoeffs a(bound);
  const std::size_t q = spec.modulus();
  // a_F = 1 * chi: every d with chi(d) != 0 contributes chi(d) to its multiples.
  for (std::size_t d = 1, r = 1 % q; d <= bound; ++d, r = (r + 1 == q ? 0 : r + 1)) {
    const int c = chi[r];
    if (c == 0) continue;
    for (std::size_t n = d; n <= bound; n += d) a[n] += c;
  }
  return a;
}

IntCoeffs sieve_muF(const FieldSpec& spec, std::size_t bound) {
  if (bound < 1) throw DomainError("sieve_muF: bound must be >= 1");
  // mu_F = mu * (mu chi), the inverse of 1 * chi.
  const auto mu = mobius_table(static_cast<std::uint32_t>(bound));
  IntCoeffs out(bound);
  for (std::size_t u = 1; u <= bound; ++u) {
    if (mu[u] == 0) continue;
    for (std::size_t v = 1, n = u; n <= bound; ++v, n += u) {
      if (mu[v] == 0) continue;
      out[n] += mu[u] * mu[v] * spec.chi(v);
    }
  }
  return out;
}

IntCoeffs sieve_squarefree_count(const FieldSpec& spec, std::size_t bound) {
  if (bound < 1) throw DomainError("sieve_squarefree_count: bound must be >= 1");
  // Multiplicative: at p^e the local count is 2, 1 (split, e = 1, 2),
  // 1 (inert, e = 2), 1 (ramified, e = 1), and 0 otherwise.
  const SpfTable spf(static_cast<std::uint32_t>(bound));
  IntCoeffs q(bound);
  q[1] = 1;
  for (std::size_t n = 2; n <= bound; ++n) {
    const std::uint32_t p = spf.spf(static_cast<std::uint32_t>(n));
    std::size_t rest = n;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::int64_t local = 0;
    switch (spec.chi(p)) {
      case 1:
        local = e == 1 ? 2 : (e == 2 ? 1 : 0);
        break;
      case -1:
        local = e == 2 ? 1 : 0;
        break;
      default:
        local = e == 1 ? 1 : 0;
        break;
    }
    q[n] = local * q[rest];
  }
  return q;
}

std::int64_t ideal_count(const FieldSpec& spec, std::uint64_t t) {
  if (t == 0) return 0;
  const std::uint64_t q = spec.modulus();
  std::vector<std::int64_t> prefix(q + 1, 0);  // prefix[r] = sum_{a <= r} chi(a)
  for (std::uint64_t a = 1; a <= q; ++a) prefix[a] = prefix[a - 1] + spec.chi(a);
  auto chi_sum = [&](std::uint64_t y) { return prefix[y % q]; };  // full periods sum to 0
  const std::uint64_t r = isqrt(t);
  i128 total = 0;
  for (std::uint64_t d = 1; d <= r; ++d) total += static_cast<i128>(spec.chi(d)) * static_cast<i128>(t / d);
  for (std::uint64_t k = 1; k <= r; ++k) total += chi_sum(t / k);
  total -= static_cast<i128>(r) * chi_sum(r);
  return narrow64(total, "ideal count");
}

std::int64_t SummatoryTables::A_at(std::uint64_t t) const {
  if (t > bound) throw GuardError("A_F requested at " + std::to_string(t) + " beyond table bound " + std::to_string(bound));
  return A[t];
}

std::int64_t SummatoryTables::M_at(std::uint64_t t) const {
  if (t > bound) throw GuardError("M_F requested at " + std::to_string(t) + " beyond table bound " + std::to_string(bound));
  return M[t];
}

std::int64_t SummatoryTables::A_at(double t) const {
  if (t < 0) return 0;
  return A_at(static_cast<std::uint64_t>(t));
}

SummatoryTables tables_from_coefficients(std::int64_t discriminant, std::vector<std::int64_t> aF,
                                         std::vector<std::int64_t> muF) {
  if (aF.size() != muF.size() || aF.size() < 2) throw DomainError("tables: coefficient arrays must match, bound >= 1");
  SummatoryTables t;
  t.discriminant = discriminant;
  t.bound = aF.size() - 1;
  t.aF = std::move(aF);
  t.muF = std::move(muF);
  t.aF[0] = 0;
  t.muF[0] = 0;
  t.A.assign(t.bound + 1, 0);
  t.M.assign(t.bound + 1, 0);
  for (std::size_t n = 1; n <= t.bound; ++n) {
    t.A[n] = checked_add(t.A[n - 1], t.aF[n]);
    t.M[n] = checked_add(t.M[n - 1], t.muF[n]);
  }
  return t;
}

SummatoryTables build_tables(const FieldSpec& spec, std::size_t bound) {
  const auto a = sieve_aF(spec, bound);
  const auto mu = sieve_muF(spec, bound);
  std::vector<std::int64_t> av(bound + 1, 0);
  std::vector<std::int64_t> mv(bound + 1, 0);
  for (std::size_t n = 1; n <= bound; ++n) {
    av[n] = a[n];
    mv[n] = mu[n];
  }
  return tables_from_coefficients(spec.discriminant(), std::move(av), std::move(mv));
}

namespace {

constexpr std::array<char, 5> kMagic = {'I', 'R', 'S', 'V', '1'};

void put_u64(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b.data(), 8);
}

std::uint64_t get_u64(std::istream& is) {
  std::array<unsigned char, 8> b{};
  is.read(reinterpret_cast<char*>(b.data()), 8);
  if (!is) throw DomainError("table cache: truncated file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

}  // namespace

void save_tables(const SummatoryTables& tables, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw DomainError("table cache: cannot open " + path.string() + " for writing");
  os.write(kMagic.data(), kMagic.size());
  put_u64(os, static_cast<std::uint64_t>(tables.discriminant));
  put_u64(os, tables.bound);
  for (std::size_t n = 1; n <= tables.bound; ++n) put_u64(os, static_cast<std::uint64_t>(tables.aF[n]));
  for (std::size_t n = 1; n <= tables.bound; ++n) put_u64(os, static_cast<std::uint64_t>(tables.muF[n]));
  if (!os) throw DomainError("table cache: write failed for " + path.string());
}

SummatoryTables load_tables(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DomainError("table cache: cannot open " + path.string());
  std::array<char, 5> magic{};
  is.read(magic.data(), magic.size());
  if (!is || magic != kMagic) throw DomainError("table cache: bad magic in " + path.string());
  const auto disc = static_cast<std::int64_t>(get_u64(is));
  const std::uint64_t bound = get_u64(is);
  if (bound < 1) throw DomainError("table cache: bound must be >= 1");
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (!ec && size != 5 + 16 + 16 * bound) throw DomainError("table cache: size does not match bound");
  std::vector<std::int64_t> a(bound + 1, 0);
  std::vector<std::int64_t> mu(bound + 1, 0);
  for (std::size_t n = 1; n <= bound; ++n) a[n] = static_cast<std::int64_t>(get_u64(is));
  for (std::size_t n = 1; n <= bound; ++n) mu[n] = static_cast<std::int64_t>(get_u64(is));
  return tables_from_coefficients(disc, std::move(a), std::move(mu));
}

}  // namespace irs

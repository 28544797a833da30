#include "irs/csum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "irs/arith.hpp"
#include "irs/ramanujan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irs {

namespace {

void require_k(int k) {
  if (k != 1 && k != 2) throw DomainError("k must be 1 or 2");
}

void require_table(const SummatoryTables& tables, std::uint64_t need, const char* what) {
  if (tables.bound < need) {
    throw GuardError(std::string(what) + ": table bound " + std::to_string(tables.bound) + " < required " +
                     std::to_string(need));
  }
}

i128 power_k(i128 s, int k) { return k == 1 ? s : checked_mul(s, s, "C_{F,2} term"); }

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

// Divisor norms <= X of one ideal, as (norm, multiplicity).
using NormList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

// The ideals above one prime power p^e || n, grouped by their truncated
// divisor-norm list. weight = how many ideals share that list.
struct LocalOption {
  NormList norms;
  std::int64_t weight;
};

// Fills options for p^e. Returns false if no ideal has norm p^e.
bool local_options(int chi, std::uint64_t p, unsigned e, std::uint64_t X, std::vector<LocalOption>& options) {
  options.clear();
  auto add = [&options](NormList&& norms, std::int64_t weight) {
    for (auto& o : options) {
      if (o.norms == norms) {
        o.weight += weight;
        return;
      }
    }
    options.push_back(LocalOption{std::move(norms), weight});
  };
  if (chi == -1) {
    if (e % 2 != 0) return false;
    NormList norms;
    std::uint64_t q = 1;
    for (unsigned t = 0; t <= e / 2 && q <= X; ++t) {
      norms.emplace_back(q, 1);
      if (q > X / (p * p)) break;
      q *= p * p;
    }
    add(std::move(norms), 1);
    return true;
  }
  if (chi == 0) {
    NormList norms;
    std::uint64_t q = 1;
    for (unsigned t = 0; t <= e; ++t) {
      norms.emplace_back(q, 1);
      if (q > X / p) break;
      q *= p;
    }
    add(std::move(norms), 1);
    return true;
  }
  // Split: P^a P'^(e-a); divisors P^i P'^j with norm p^(i+j).
  for (unsigned a = 0; a <= e; ++a) {
    const unsigned b = e - a;
    NormList norms;
    std::uint64_t q = 1;
    for (unsigned t = 0; t <= e; ++t) {
      const int lo = std::max(0, static_cast<int>(t) - static_cast<int>(b));
      const int hi = std::min(static_cast<int>(t), static_cast<int>(a));
      if (hi >= lo) norms.emplace_back(q, static_cast<std::uint64_t>(hi - lo + 1));
      if (q > X / p) break;
      q *= p;
    }
    add(std::move(norms), 1);
  }
  return true;
}

// Per-thread work area for the k = 2 kernel.
struct Workspace {
  std::vector<std::pair<std::uint32_t, unsigned>> factors;
  std::vector<std::vector<LocalOption>> options;  // slot per branching prime, reused
  std::vector<NormList> levels;                   // divisor lists per recursion depth
};

struct KernelInput {
  const FieldSpec* spec;
  const SummatoryTables* tables;
  std::uint64_t X;
};

i128 sum_over_options(const KernelInput& in, Workspace& ws, std::size_t depth, std::size_t branching,
                      std::int64_t weight) {
  const NormList& current = ws.levels[depth];
  if (depth == branching) {
    i128 s = 0;
    for (const auto& [d, count] : current) {
      s += static_cast<i128>(count) * static_cast<i128>(d) * in.tables->M[in.X / d];
    }
    return checked_mul(checked_mul(s, s, "C_{F,2} term"), static_cast<i128>(weight), "C_{F,2} term");
  }
  i128 total = 0;
  for (const auto& opt : ws.options[depth]) {
    NormList& next = ws.levels[depth + 1];
    next.clear();
    for (const auto& [d, c] : current) {
      for (const auto& [q, cq] : opt.norms) {
        if (q > in.X / d) break;  // opt.norms increasing in q
        next.emplace_back(d * q, c * cq);
      }
    }
    total = checked_add(total, sum_over_options(in, ws, depth + 1, branching, weight * opt.weight));
  }
  return total;
}

i128 k2_for_norm(const KernelInput& in, const SpfTable& spf, std::uint32_t n, Workspace& ws) {
  spf.factor(n, ws.factors);
  // Primes whose ideals all truncate to the trivial divisor only scale the
  // weight; the rest branch over their option groups.
  std::size_t branching = 0;
  std::int64_t weight = 1;
  for (const auto& [p, e] : ws.factors) {
    if (ws.options.size() <= branching) ws.options.emplace_back();
    auto& opts = ws.options[branching];
    if (!local_options(in.spec->chi(p), p, e, in.X, opts)) return 0;
    if (opts.size() == 1 && opts[0].norms.size() == 1) {
      weight *= opts[0].weight;
      continue;
    }
    ++branching;
  }
  if (ws.levels.size() < branching + 1) ws.levels.resize(branching + 1);
  ws.levels[0].assign(1, {1, 1});
  return sum_over_options(in, ws, 0, branching, weight);
}

i128 c_sum_k2_parallel(const FieldSpec& spec, std::uint64_t X, std::uint64_t Y, const SummatoryTables& tables,
                       int threads) {
  if (Y > UINT32_MAX) throw GuardError("c_sum_fast: Y exceeds the factor-table range");
  const SpfTable spf(static_cast<std::uint32_t>(Y));
  const KernelInput in{&spec, &tables, X};
  const int nthreads = resolve_threads(threads);
  std::vector<i128> partial(static_cast<std::size_t>(nthreads), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nthreads));
  const auto last = static_cast<std::int64_t>(Y);

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
  {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
#else
    const int tid = 0;
#endif
    Workspace ws;
    i128 acc = 0;
    try {
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4096) nowait
#endif
      for (std::int64_t n = 1; n <= last; ++n) {
        acc = checked_add(acc, k2_for_norm(in, spf, static_cast<std::uint32_t>(n), ws));
      }
    } catch (...) {
      errors[static_cast<std::size_t>(tid)] = std::current_exception();
    }
    partial[static_cast<std::size_t>(tid)] = acc;
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  i128 total = 0;
  for (const auto& p : partial) total = checked_add(total, p);
  return total;
}

}  // namespace

std::int64_t inner_sum(const Ideal& n, std::uint64_t X, const SummatoryTables& tables) {
  require_table(tables, X, "inner_sum");
  if (n.discriminant() != tables.discriminant) throw FieldMismatch("inner_sum: tables built for another field");
  i128 s = 0;
  for (const auto& d : divisors(n)) {
    if (d.norm() <= X) s += static_cast<i128>(d.norm()) * tables.M[X / d.norm()];
  }
  return narrow64(s, "inner sum");
}

i128 c_sum_bruteforce(const FieldSpec& spec, int k, std::uint64_t X, std::uint64_t Y) {
  require_k(k);
  if (X < 1 || Y < 1) throw DomainError("c_sum_bruteforce: X, Y must be >= 1");
  const auto ms = enumerate_ideals(spec, X);
  const auto pairs = static_cast<u128>(ms.size()) * static_cast<u128>(ideal_count(spec, Y));
  if (pairs > kBruteForcePairLimit) {
    throw GuardError("c_sum_bruteforce: " + to_string(static_cast<i128>(pairs)) + " pairings exceed the guard");
  }
  i128 total = 0;
  for_each_ideal(spec, Y, [&](const Ideal& n) {
    i128 s = 0;
    for (const auto& m : ms) s += ramanujan_sum(m, n);
    total = checked_add(total, power_k(s, k));
  });
  return total;
}

i128 c_sum_reference(const FieldSpec& spec, int k, std::uint64_t X, std::uint64_t Y, const SummatoryTables& tables) {
  require_k(k);
  require_table(tables, X, "c_sum_reference");
  i128 total = 0;
  for_each_ideal(spec, Y, [&](const Ideal& n) { total = checked_add(total, power_k(inner_sum(n, X, tables), k)); });
  return total;
}

i128 c_sum_fast(const FieldSpec& spec, int k, std::uint64_t X, std::uint64_t Y, const SummatoryTables& tables,
                int threads) {
  require_k(k);
  if (X < 1 || Y < 1) throw DomainError("c_sum_fast: X, Y must be >= 1");
  if (tables.discriminant != spec.discriminant()) throw FieldMismatch("c_sum_fast: tables built for another field");
  if (k == 2) {
    require_table(tables, X, "c_sum_fast");
    return c_sum_k2_parallel(spec, X, Y, tables, threads);
  }
  require_table(tables, std::max(X, Y), "c_sum_fast");
  i128 total = 0;
  for (std::uint64_t u = 1; u <= X; ++u) {
    if (tables.aF[u] == 0) continue;
    const i128 term = static_cast<i128>(tables.aF[u]) * static_cast<i128>(u) * tables.M[X / u];
    total = checked_add(total, checked_mul(term, static_cast<i128>(tables.A[Y / u])));
  }
  return total;
}

i128 classical_c_sum(int k, std::uint64_t X, std::uint64_t Y) {
  require_k(k);
  if (X < 1 || Y < 1) throw DomainError("classical_c_sum: X, Y must be >= 1");
  if (X > UINT32_MAX) throw GuardError("classical_c_sum: X too large");
  const auto mu = mobius_table(static_cast<std::uint32_t>(X));
  std::vector<std::int64_t> mertens(X + 1, 0);
  for (std::uint64_t i = 1; i <= X; ++i) mertens[i] = mertens[i - 1] + mu[i];

  if (k == 1) {
    i128 total = 0;
    for (std::uint64_t d = 1; d <= X; ++d) {
      total += static_cast<i128>(d) * mertens[X / d] * static_cast<i128>(Y / d);
    }
    return total;
  }
  // S(n) = sum_{d | n, d <= X} d M(X/d), sieved over multiples.
  std::vector<std::int64_t> S(Y + 1, 0);
  for (std::uint64_t d = 1; d <= std::min(X, Y); ++d) {
    const std::int64_t w = static_cast<std::int64_t>(d) * mertens[X / d];
    if (w == 0) continue;
    for (std::uint64_t n = d; n <= Y; n += d) S[n] += w;
  }
  i128 total = 0;
  for (std::uint64_t n = 1; n <= Y; ++n) total = checked_add(total, static_cast<i128>(S[n]) * S[n]);
  return total;
}

i128 classical_c_sum_bruteforce(int k, std::uint64_t X, std::uint64_t Y) {
  require_k(k);
  if (static_cast<u128>(X) * Y > kBruteForcePairLimit) throw GuardError("classical_c_sum_bruteforce: too large");
  i128 total = 0;
  for (std::uint64_t n = 1; n <= Y; ++n) {
    i128 s = 0;
    for (std::uint64_t m = 1; m <= X; ++m) s += classical_ramanujan(m, n);
    total = checked_add(total, power_k(s, k));
  }
  return total;
}

double x4_coefficient(const FieldConstants& c) {
  return c.zetaF_0.get_d() * c.rho_F * c.rho_F / (4 * c.zetaF_2 * c.zetaF_2);
}

double main_term(int k, double X, double Y, const FieldConstants& c) {
  require_k(k);
  if (k == 1) return c.rho_F * Y;
  const double x2 = X * X;
  return c.rho_F * c.rho_F * x2 * Y / (2 * c.zetaF_2) + x4_coefficient(c) * x2 * x2;
}

double envelope(int k, double X, double Y) {
  require_k(k);
  const double L = std::log(Y);
  if (k == 1) return X * std::sqrt(Y) * std::pow(L, 7) + X * X;
  return std::pow(X, 24.0 / 5) * std::pow(Y, -2.0 / 5) + X * X * std::pow(Y, 2.0 / 3) * std::pow(L, 5) +
         std::pow(X, 1.5) * Y * std::pow(L, 3);
}

TheoremReport theorem_report(const FieldSpec& spec, int k, std::uint64_t X, std::uint64_t Y,
                             const SummatoryTables& tables, const FieldConstants& consts, int threads) {
  require_k(k);
  TheoremReport r;
  r.D = spec.discriminant();
  r.k = k;
  r.X = X;
  r.Y = Y;
  r.computed = c_sum_fast(spec, k, X, Y, tables, threads);
  const auto x = static_cast<double>(X);
  const auto y = static_cast<double>(Y);
  r.main_term = main_term(k, x, y, consts);
  r.residual = static_cast<double>(static_cast<long double>(r.computed) - static_cast<long double>(r.main_term));
  r.envelope = envelope(k, x, y);
  r.ratio = r.residual / r.envelope;
  r.relative_error = std::fabs(static_cast<double>(static_cast<long double>(r.computed) / r.main_term - 1));
  if (X >= Y) {
    r.warning = "X >= Y: outside the theorem range";
  } else if (k == 2 && static_cast<u128>(X) * X >= Y) {
    r.warning = "Y <= X^2: theorem hypothesis fails";
  }
  return r;
}

void GridConfig::validate() const {
  if (k != 1 && k != 2) throw DomainError("grid: k must be 1 or 2");
  if (!(delta > 2)) throw DomainError("grid: delta must be > 2");
  if (!(ratio > 1)) throw DomainError("grid: ratio must be > 1");
  if (!(y_start >= 1)) throw DomainError("grid: y-start must be >= 1");
  if (count < 1) throw DomainError("grid: count must be >= 1");
  if (!(y_start * std::pow(ratio, count - 1) < 4e9)) throw DomainError("grid: largest Y exceeds 4e9");
}

std::vector<std::uint64_t> GridConfig::y_values() const {
  std::vector<std::uint64_t> ys;
  for (unsigned i = 0; i < count; ++i) {
    ys.push_back(static_cast<std::uint64_t>(std::llround(static_cast<long double>(y_start) * std::pow(static_cast<long double>(ratio), i))));
  }
  return ys;
}

std::uint64_t floor_power(std::uint64_t Y, double exponent) {
  return static_cast<std::uint64_t>(std::floor(std::pow(static_cast<long double>(Y), static_cast<long double>(exponent)) + 1e-9L));
}

std::uint64_t GridConfig::x_for(std::uint64_t Y) const { return std::max<std::uint64_t>(1, floor_power(Y, 1.0 / delta)); }

std::vector<TheoremReport> run_grid(const GridConfig& grid) {
  grid.validate();
  const FieldSpec spec(grid.discriminant);
  const auto ys = grid.y_values();
  std::uint64_t need = 1;
  for (auto y : ys) need = std::max({need, grid.x_for(y), grid.k == 1 ? y : std::uint64_t{1}});
  const auto tables = build_tables(spec, need);
  const auto consts = field_constants(spec);
  std::vector<TheoremReport> out;
  for (auto y : ys) out.push_back(theorem_report(spec, grid.k, grid.x_for(y), y, tables, consts, grid.threads));
  return out;
}

}  // namespace irs

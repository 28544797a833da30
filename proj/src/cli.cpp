#include "irs/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "irs/constants.hpp"
#include "irs/csum.hpp"
#include "irs/dseries.hpp"
#include "irs/errors.hpp"
#include "irs/identities.hpp"
#include "irs/ideal.hpp"

namespace irs::cli {

namespace {

using nlohmann::ordered_json;

const std::vector<std::int64_t> kDefaultDiscriminants = {-4, -3, -7, -8, 5, 8, 13};

std::string real(double v) { return fmt::format("{}", v); }

ordered_json to_json(const IdentityReport& r) {
  return ordered_json{{"name", r.name},
                      {"D", r.discriminant},
                      {"bounds", r.bounds},
                      {"max_abs_discrepancy", to_string(r.max_abs_discrepancy)},
                      {"pass", r.pass}};
}

ordered_json to_json(const FieldConstants& c) {
  return ordered_json{{"D", c.D},
                      {"rho_F", c.rho_F},
                      {"zetaF_2", c.zetaF_2},
                      {"zetaF_0", to_string(c.zetaF_0)},
                      {"tolerance", c.tolerance}};
}

ordered_json to_json(const TheoremReport& r) {
  // computed is exact and may exceed 64 bits, so it travels as a string.
  return ordered_json{{"D", r.D},
                      {"k", r.k},
                      {"X", r.X},
                      {"Y", r.Y},
                      {"computed", to_string(r.computed)},
                      {"main_term", r.main_term},
                      {"residual", r.residual},
                      {"envelope", r.envelope},
                      {"ratio", r.ratio},
                      {"warning", r.warning}};
}

// Opens the requested output or falls back to the given stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw DomainError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

SummatoryTables tables_for(const FieldSpec& spec, std::uint64_t need, const std::string& cache, std::ostream& err) {
  if (!cache.empty() && std::filesystem::exists(cache)) {
    auto t = load_tables(cache);
    if (t.discriminant == spec.discriminant() && t.bound >= need) return t;
    err << "cache " << cache << " does not cover D=" << spec.discriminant() << " up to " << need
        << "; rebuilding\n";
  }
  auto t = build_tables(spec, need);
  if (!cache.empty()) save_tables(t, cache);
  return t;
}

int run_identities(const RunConfig& c, std::ostream& out, std::ostream& err) {
  IdentitySuiteConfig suite;
  suite.series_bound = c.bound;
  suite.inversion_ideals = c.inversion_ideals;
  suite.inversion_norm = std::min<std::uint64_t>(1000, c.bound);
  suite.inversion_J = std::min<std::uint64_t>(1000, c.bound);
  suite.k1_grid = std::min<std::uint64_t>(200, c.bound);
  suite.k2_grid = std::min<std::uint64_t>(40, c.bound);
  suite.seed = c.seed;
  suite.threads = resolve_threads(c.threads);
  const auto discs = c.discriminants.empty() ? kDefaultDiscriminants : c.discriminants;
  const auto reports = run_identity_suite(discs, suite);

  Output o(c.output, out);
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (c.format.value_or(Format::Json) == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    o.get() << arr.dump(2) << '\n';
  } else {
    o.get() << "name,D,bounds,max_abs_discrepancy,pass\n";
    for (const auto& r : reports) {
      std::string b;
      for (auto v : r.bounds) b += (b.empty() ? "" : "x") + std::to_string(v);
      o.get() << '"' << r.name << "\"," << r.discriminant << ',' << b << ',' << to_string(r.max_abs_discrepancy) << ','
              << (r.pass ? "true" : "false") << '\n';
    }
  }
  if (!all_pass) {
    err << "identity suite: at least one discrepancy is nonzero\n";
    return kIdentityFailed;
  }
  return kOk;
}

int run_constants(const RunConfig& c, std::ostream& out) {
  Output o(c.output, out);
  ordered_json arr = ordered_json::array();
  for (auto d : c.discriminants) arr.push_back(to_json(field_constants(FieldSpec(d), c.tol)));
  o.get() << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  return kOk;
}

int run_theorem(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Output o(c.output, out);
  const bool json = c.format.value_or(Format::Csv) == Format::Json;
  ordered_json arr = ordered_json::array();
  if (!json) o.get() << "D,X,Y," << (c.k == 1 ? "C1" : "C2") << ",main,residual,envelope,ratio\n";
  for (auto d : c.discriminants) {
    GridConfig grid;
    grid.discriminant = d;
    grid.y_start = c.y_start;
    grid.ratio = c.ratio;
    grid.count = c.count;
    grid.delta = c.delta;
    grid.k = c.k;
    grid.threads = resolve_threads(c.threads);
    grid.validate();

    const FieldSpec spec(d);
    std::uint64_t need = 1;
    for (auto y : grid.y_values()) need = std::max({need, grid.x_for(y), c.k == 1 ? y : std::uint64_t{1}});
    const auto tables = tables_for(spec, need, c.cache, err);
    const auto consts = field_constants(spec, c.tol);
    for (auto y : grid.y_values()) {
      const auto r = theorem_report(spec, c.k, grid.x_for(y), y, tables, consts, grid.threads);
      if (!r.warning.empty()) err << "warning: D=" << d << " X=" << r.X << " Y=" << r.Y << ": " << r.warning << '\n';
      if (json) {
        arr.push_back(to_json(r));
      } else {
        o.get() << r.D << ',' << r.X << ',' << r.Y << ',' << to_string(r.computed) << ',' << real(r.main_term) << ','
                << real(r.residual) << ',' << real(r.envelope) << ',' << real(r.ratio) << '\n';
      }
    }
  }
  if (json) o.get() << arr.dump(2) << '\n';
  return kOk;
}

int run_enumerate(const RunConfig& c, std::ostream& out) {
  if (c.bound > kBruteForcePairLimit) throw GuardError("enumerate: bound exceeds " + std::to_string(kBruteForcePairLimit));
  Output o(c.output, out);
  const bool json = c.format.value_or(Format::Csv) == Format::Json;
  ordered_json arr = ordered_json::array();
  if (!json) o.get() << "D,norm,count\n";
  for (auto d : c.discriminants) {
    const FieldSpec spec(d);
    std::vector<std::uint64_t> hist(c.bound + 1, 0);
    for_each_ideal(spec, c.bound, [&hist](const Ideal& a) { ++hist[a.norm()]; });
    for (std::uint64_t n = 1; n <= c.bound; ++n) {
      if (json) {
        arr.push_back(ordered_json{{"D", d}, {"norm", n}, {"count", hist[n]}});
      } else {
        o.get() << d << ',' << n << ',' << hist[n] << '\n';
      }
    }
  }
  if (json) o.get() << arr.dump(2) << '\n';
  return kOk;
}

int run_sieve_cache(const RunConfig& c, std::ostream& err) {
  const std::string path = !c.cache.empty() ? c.cache : c.output;
  if (path.empty()) throw DomainError("sieve-cache needs --cache <path>");
  if (c.discriminants.size() != 1) throw DomainError("sieve-cache takes exactly one --disc");
  const auto t = build_tables(FieldSpec(c.discriminants.front()), c.bound);
  save_tables(t, path);
  err << "wrote " << path << " (D=" << t.discriminant << ", bound=" << t.bound << ", A=" << t.A[t.bound] << ")\n";
  return kOk;
}

// Reads "2000", "1e6", "1.5e3" as an exact positive integer.
std::uint64_t integral(double v, const char* what) {
  if (!(v >= 1) || v > 9.0e15 || std::floor(v) != v) {
    throw DomainError(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IRS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 4096) return static_cast<int>(v);
  }
  return 0;
}

void RunConfig::validate() const {
  static const std::vector<std::string> known = {"identities", "constants", "theorem1", "theorem2", "enumerate",
                                                 "sieve-cache"};
  if (std::find(known.begin(), known.end(), subcommand) == known.end()) {
    throw DomainError("unknown subcommand '" + subcommand + "'");
  }
  if (subcommand != "identities" && discriminants.empty()) throw DomainError("--disc is required");
  for (auto d : discriminants) {
    if (!is_fundamental_discriminant(d)) throw DomainError("not a fundamental discriminant: " + std::to_string(d));
  }
  if (bound < 1) throw DomainError("--bound must be >= 1");
  if (!(tol > 0)) throw DomainError("--tol must be > 0");
  if (threads < 0) throw DomainError("--threads must be >= 0");
  if (subcommand == "theorem1" || subcommand == "theorem2") {
    GridConfig g;
    g.y_start = y_start;
    g.ratio = ratio;
    g.count = count;
    g.delta = delta;
    g.k = k;
    g.validate();
  }
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan sums over ideals of quadratic fields: identity checks, constants and main-term grids"};
  app.require_subcommand(1);
  app.footer(
      "Envelopes use natural logarithms. theorem1/theorem2 CSV columns: D,X,Y,C1|C2,main,residual,envelope,ratio.\n"
      "Exit status: 0 ok, 1 failed identity, 2 configuration error, 3 overflow or scale guard.\n"
      "IRS_THREADS sets the default thread count.");

  RunConfig cfg;
  std::vector<std::int64_t> discs;
  double bound = 0;
  double y_start = cfg.y_start;
  std::string format;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--disc", discs, "Fundamental discriminant(s)")->allow_extra_args(false);
    sub->add_option("-o,--out", cfg.output, "Output file (default stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", cfg.threads, "Thread count (default IRS_THREADS or OpenMP default)");
  };

  auto* ident = app.add_subcommand("identities", "Exact coefficient checks of every Dirichlet-series identity");
  add_common(ident);
  ident->add_option("--bound", bound, "Truncation N for the sigma and Ramanujan identities (default 2000)");
  ident->add_option("--ideals", cfg.inversion_ideals, "Random ideals for the inversion checks (default 50)");
  ident->add_option("--seed", cfg.seed, "Seed for the random ideals");

  auto* consts = app.add_subcommand("constants", "rho_F, zeta_F(2), zeta_F(0) as JSON");
  add_common(consts);
  consts->add_option("--tol", cfg.tol, "Absolute tolerance (default 1e-12)");

  for (const char* name : {"theorem1", "theorem2"}) {
    auto* th = app.add_subcommand(name, std::string(name) == "theorem1" ? "C_{F,1}(X,Y) against rho_F Y on a Y grid"
                                                                         : "C_{F,2}(X,Y) against its two main terms");
    add_common(th);
    th->add_option("--y-start", y_start, "First Y (default 1e4)");
    th->add_option("--ratio", cfg.ratio, "Geometric ratio between grid points (default 4)");
    th->add_option("--count", cfg.count, "Number of grid points (default 6)");
    th->add_option("--delta", cfg.delta, "X = floor(Y^(1/delta)), delta > 2 (default 2.8)");
    th->add_option("--cache", cfg.cache, "Table cache file to reuse or create");
    th->add_option("--tol", cfg.tol, "Tolerance for the constants");
  }

  auto* en = app.add_subcommand("enumerate", "Norm histogram of the ideal enumeration as CSV");
  add_common(en);
  en->add_option("--bound", bound, "Norm bound")->required();

  auto* sc = app.add_subcommand("sieve-cache", "Build a_F, mu_F tables and write the binary cache");
  add_common(sc);
  sc->add_option("--bound", bound, "Table bound")->required();
  sc->add_option("--cache", cfg.cache, "Cache file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return ParseResult{std::nullopt, code == 0 ? kOk : kConfigError};
  }

  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  cfg.discriminants = discs;
  cfg.y_start = y_start;
  if (cfg.subcommand == "theorem2") cfg.k = 2;
  if (!format.empty()) cfg.format = format == "json" ? Format::Json : Format::Csv;
  try {
    if (bound != 0) cfg.bound = integral(bound, "--bound");
    cfg.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ParseResult{std::nullopt, kConfigError};
  }
  return ParseResult{cfg, kOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    if (config.subcommand == "identities") return run_identities(config, out, err);
    if (config.subcommand == "constants") return run_constants(config, out);
    if (config.subcommand == "theorem1" || config.subcommand == "theorem2") return run_theorem(config, out, err);
    if (config.subcommand == "enumerate") return run_enumerate(config, out);
    return run_sieve_cache(config, err);
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kOverflow;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return kOverflow;
  } catch (const std::bad_alloc&) {
    err << "guard: out of memory\n";
    return kOverflow;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace irs::cli

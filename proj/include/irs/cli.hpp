#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace irs::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailed = 1,
  kConfigError = 2,
  kOverflow = 3,
};

enum class Format { Csv, Json };

struct RunConfig {
  std::string subcommand;
  std::vector<std::int64_t> discriminants;
  std::uint64_t bound = 2000;
  // theorem grids
  double y_start = 1e4;
  double ratio = 4;
  unsigned count = 6;
  double delta = 2.8;
  int k = 1;
  // identities
  std::uint64_t inversion_ideals = 50;
  std::uint64_t seed = 20240611;
  double tol = 1e-12;
  std::string output;  // empty = stdout
  std::optional<Format> format;
  int threads = 0;  // 0 = IRS_THREADS, else OpenMP default
  std::string cache;

  /// Throws irs::DomainError describing the first invalid field.
  void validate() const;
};

/// Parses argv. Returns the config, or an exit code when parsing ends the
/// run (help requested: 0, bad arguments: 2). Diagnostics go to err.
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kOk;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one subcommand and returns its exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Thread count from --threads, then IRS_THREADS, then 0 (OpenMP default).
int resolve_threads(int requested);

}  // namespace irs::cli

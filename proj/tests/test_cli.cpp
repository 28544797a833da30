#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "irs/cli.hpp"
#include "irs/dseries.hpp"

using namespace irs;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "irs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  const auto parsed = cli::parse_args(static_cast<int>(argv.size()), argv.data(), out, err);
  r.code = parsed.config ? cli::run(*parsed.config, out, err) : parsed.exit_code;
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / (std::string("irs_cli_") + name);
}

}  // namespace

TEST_CASE("constants") {
  const auto r = invoke({"constants", "--disc", "5"});
  CHECK(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["D"] == 5);
  CHECK(j["zetaF_0"] == "0");
  CHECK(j["rho_F"].get<double>() == doctest::Approx(0.4304089409640));

  const auto two = nlohmann::json::parse(invoke({"constants", "--disc", "-4", "--disc", "-3"}).out);
  REQUIRE(two.size() == 2);
  CHECK(two[0]["zetaF_0"] == "-1/4");
  CHECK(two[1]["zetaF_0"] == "-1/6");
}

TEST_CASE("identities") {
  const auto r = invoke({"identities", "--disc", "-4", "--bound", "300", "--ideals", "4"});
  CHECK(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 5 + 10 + 8 + 2);
  for (const auto& e : j) {
    CHECK(e["pass"] == true);
    CHECK(e["max_abs_discrepancy"] == "0");
  }
  const auto csv = invoke({"identities", "--disc", "8", "--bound", "100", "--ideals", "1", "--format", "csv"});
  CHECK(csv.code == cli::kOk);
  CHECK(first_line(csv.out) == "name,D,bounds,max_abs_discrepancy,pass");
}

TEST_CASE("theorem grids") {
  const auto r = invoke({"theorem1", "--disc", "-4", "--y-start", "1e3", "--ratio", "4", "--count", "3", "--delta",
                         "2.8"});
  CHECK(r.code == cli::kOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "D,X,Y,C1,main,residual,envelope,ratio");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 7);
    CHECK(line.rfind("-4,", 0) == 0);
  }
  CHECK(rows == 3);

  const auto t2 = invoke({"theorem2", "--disc", "5", "--y-start", "1e4", "--count", "2", "--delta", "2.2222222222222223"});
  CHECK(t2.code == cli::kOk);
  CHECK(first_line(t2.out) == "D,X,Y,C2,main,residual,envelope,ratio");

  const auto js = invoke({"theorem1", "--disc", "-3", "--y-start", "1e3", "--count", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(js.out).size() == 2);
}

TEST_CASE("output is identical across thread counts") {
  std::string reference;
  for (const char* threads : {"1", "2", "4"}) {
    const auto r = invoke({"theorem2", "--disc", "-7", "--y-start", "1e4", "--ratio", "3", "--count", "3", "--delta",
                           "2.2222222222222223", "--threads", threads});
    REQUIRE(r.code == cli::kOk);
    if (reference.empty()) reference = r.out;
    CHECK(r.out == reference);
  }
  ::setenv("IRS_THREADS", "3", 1);
  CHECK(cli::resolve_threads(0) == 3);
  CHECK(cli::resolve_threads(2) == 2);
  ::setenv("IRS_THREADS", "junk", 1);
  CHECK(cli::resolve_threads(0) == 0);
  ::unsetenv("IRS_THREADS");
}

TEST_CASE("enumerate and sieve-cache") {
  const auto r = invoke({"enumerate", "--disc", "-4", "--bound", "5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "D,norm,count\n-4,1,1\n-4,2,1\n-4,3,0\n-4,4,1\n-4,5,2\n");

  const auto path = temp_path("tables.bin");
  std::filesystem::remove(path);
  const auto c = invoke({"sieve-cache", "--disc", "13", "--bound", "1e4", "--cache", path.string()});
  CHECK(c.code == cli::kOk);
  const auto t = load_tables(path);
  CHECK(t.discriminant == 13);
  CHECK(t.bound == 10000);

  // A theorem run can reuse the cache; output must match a fresh run.
  const std::vector<std::string> grid = {"theorem1", "--disc", "13", "--y-start", "1e3", "--count", "2"};
  auto with_cache = grid;
  with_cache.insert(with_cache.end(), {"--cache", path.string()});
  CHECK(invoke(with_cache).out == invoke(grid).out);
  std::filesystem::remove(path);

  const auto file = temp_path("out.csv");
  CHECK(invoke({"enumerate", "--disc", "5", "--bound", "10", "-o", file.string()}).code == cli::kOk);
  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header == "D,norm,count");
  in.close();
  std::filesystem::remove(file);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(invoke({}).code == cli::kConfigError);
  CHECK(invoke({"bogus"}).code == cli::kConfigError);
  CHECK(invoke({"constants"}).code == cli::kConfigError);
  CHECK(invoke({"constants", "--disc", "12"}).code == cli::kOk);
  CHECK(invoke({"constants", "--disc", "7"}).code == cli::kConfigError);
  CHECK(invoke({"constants", "--disc", "-4", "--tol", "0"}).code == cli::kConfigError);
  CHECK(invoke({"theorem1", "--disc", "-4", "--delta", "2"}).code == cli::kConfigError);
  CHECK(invoke({"theorem1", "--disc", "-4", "--ratio", "0.5"}).code == cli::kConfigError);
  CHECK(invoke({"enumerate", "--disc", "-4"}).code == cli::kConfigError);
  CHECK(invoke({"enumerate", "--disc", "-4", "--bound", "2.5"}).code == cli::kConfigError);
  CHECK(invoke({"constants", "--disc", "-4", "--format", "xml"}).code == cli::kConfigError);
  const auto e = invoke({"constants", "--disc", "7"});
  CHECK(e.err.find("fundamental") != std::string::npos);
}

TEST_CASE("scale guards exit with 3") {
  const auto r = invoke({"enumerate", "--disc", "-4", "--bound", "1e9"});
  CHECK(r.code == cli::kOverflow);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("a cache that is too short is rebuilt") {
  const auto path = temp_path("short.bin");
  save_tables(build_tables(FieldSpec(-4), 100), path);
  const auto r = invoke({"theorem1", "--disc", "-4", "--y-start", "1e4", "--count", "1", "--cache", path.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.err.find("rebuilding") != std::string::npos);
  CHECK(load_tables(path).bound == 10000);
  std::filesystem::remove(path);
}

TEST_CASE("the installed binary") {
  const std::string cmd = std::string(IRS_TOOL_PATH) + " constants --disc -4 > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string bad = std::string(IRS_TOOL_PATH) + " constants --disc 7 > /dev/null 2>&1";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == cli::kConfigError);
  const std::string help = std::string(IRS_TOOL_PATH) + " --help 2>&1 | grep -q 'natural log'";
  CHECK(std::system(help.c_str()) == 0);
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "siegelchar/json_io.hpp"

namespace siegelchar::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kSuiteFailure = 1,
  kParseError = 2,
  kPreconditionFailed = 3,
  kInternalMismatch = 4,
};

struct RunConfig {
  std::size_t g = 1;
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::size_t word_length = 8;
  double tol = kDefaultTol;
  double tail_tol = kDefaultTailTol;
  std::string output = "-";
  bool timestamp = true;
};

/// Throws Error(Parse) on a config that cannot run (non-positive tolerances,
/// zero trials or degree). tol <= tail_tol is allowed and reported as TooTight
/// by the numeric suite.
void validate(const RunConfig& config);

/// Word length used by the numeric suite; longer words overflow the binary64
/// exponent range of the theta sums.
inline constexpr std::size_t kNumericWordCap = 8;

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> diagnostics;
  json_io::Json detail = json_io::Json::object();

  bool ok() const noexcept { return failed == 0; }
  json_io::Json to_json() const;
};

SuiteResult suite_homomorphism(const RunConfig& config);   // A
SuiteResult suite_triviality(const RunConfig& config);     // B
SuiteResult suite_numeric(const RunConfig& config);        // C
SuiteResult suite_equivalence(const RunConfig& config);    // D
SuiteResult suite_lemmas(const RunConfig& config);         // E

/// Runs all five suites (in parallel up to SIEGEL_CHAR_THREADS threads) and
/// assembles the report in suite order.
json_io::Json run_verify(const RunConfig& config);

/// Every generator against every m in {0,1}^{2g}, both evaluation paths.
json_io::Json generator_table(std::size_t g);
std::string generator_table_markdown(const json_io::Json& table);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace siegelchar::cli

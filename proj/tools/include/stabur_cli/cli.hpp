#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabur/entropy.hpp"

namespace stabur::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Thrown for malformed invocations; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string suite;
  std::string entropy = "shannon";
  double q = 0.0;
  bool q_given = false;
  int samples = -1;  ///< -1 selects the command's default
  int restarts = 20;
  std::uint64_t seed = 42;
  int jobs = 1;
  int max_n = 8;  ///< largest n cross-checked against the dense oracle
  std::string out;
};

/// q is required iff the entropy is tsallis.
EntropySpec entropy_spec(const RunConfig& config);

/// Double rounded to 12 significant digits, as emitted in JSON.
double presented(double value);

/// Each command returns its JSON report; "ok" false means a failed check.
Json cmd_bound(const RunConfig& config);
Json cmd_tightness(const RunConfig& config);
Json cmd_matching(const RunConfig& config);
Json cmd_boundary(const RunConfig& config, std::string& csv);
Json cmd_verify(const RunConfig& config);

inline const std::vector<std::string> kSuites{"pauli",    "overlap",  "tightness", "anticommuting",
                                              "matching", "recurrence", "all"};

/// Parses argv (without the program name), dispatches, prints to out/err and
/// returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabur::cli

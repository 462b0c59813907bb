#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modcartan::verify {

enum class CheckStatus { Pass, Fail, Skipped, Error };

const char* to_string(CheckStatus s) noexcept;
/// Throws ConfigError for unknown names.
CheckStatus parse_status(const std::string& s);

struct Check {
  std::string name;
  CheckStatus status;
  std::string evidence;  // a JSON value, serialized
};

struct SuiteReport {
  std::string suite;
  std::string group;
  std::string coeff;
  std::uint64_t seed = 1;
  std::vector<Check> checks;
  /// Observations that are reported but never count as failures.
  std::vector<std::string> anomalies;
  double elapsed_ms = 0;

  bool failed() const;   // some check failed
  bool errored() const;  // some check could not be computed
  bool skipped() const;  // every check was skipped
  /// "pass", "fail", "error" or "skipped".
  std::string status() const;
};

/// {suite, inputs: {group, coeff, seed}, status, checks: [{name, status,
/// evidence}], anomalies, elapsed_ms}; `stable` drops elapsed_ms.
std::string to_json(const SuiteReport& r, bool stable = false, int indent = -1);
std::string to_json(const std::vector<SuiteReport>& rs, bool stable = false, int indent = -1);
/// Inverse of to_json for a single report; throws ConfigError.
SuiteReport report_from_json(const std::string& text);

/// One line per check, for terminal output.
std::string to_table(const SuiteReport& r);

}  // namespace modcartan::verify

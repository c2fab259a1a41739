#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace lieprop::cli {

enum Exit : int { kOk = 0, kFalse = 1, kUnknown = 2, kUsage = 64, kFormat = 65 };

struct Options {
  std::vector<std::string> argv;  ///< echoed into the report
  std::vector<std::string> inputs;
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<long> budget;
  std::optional<long> height;

  std::string property;  // check
  std::string vector;    // element
  std::string family;    // construct
  std::vector<std::string> params;
  std::uint32_t p = 0;   // depth-fp
  std::string a, b;      // quat
  std::string zoo = "default";
};

/// A finished command: the machine rendering, the human one, and the exit code.
struct Outcome {
  nlohmann::ordered_json report;
  std::string text;
  int exit = kOk;
  /// construct: algebra file bytes written instead of the report.
  std::optional<std::string> raw;
};

Outcome run_check(const Options& o);
Outcome run_analyze(const Options& o);
Outcome run_element(const Options& o);
Outcome run_rank(const Options& o);
Outcome run_construct(const Options& o);
Outcome run_depth_fp(const Options& o);
Outcome run_quat(const Options& o);
Outcome run_verify_suite(const Options& o);

/// Raised for arguments that parse but make no sense; maps to exit 64.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The input file failed parsing or validation; maps to exit 65.
struct InputFormat : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lieprop::cli

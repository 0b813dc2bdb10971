#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "grpwild/error.hpp"
#include "grpwild/wildness.hpp"

namespace grpwild::cli {

inline constexpr const char* kToolName = "grpwild";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kExitVerified = 0,
  kExitRefuted = 1,
  kExitInconclusive = 2,
  kExitUsage = 3,
};

/// Bad command-line input.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::optional<std::uint64_t> prime;
  WildMode mode = WildMode::kWitness;
  unsigned depth = 3;
  std::uint64_t max_enum = Limits{}.max_enum;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::optional<std::string> cache_dir;
  std::optional<std::string> json_path;
  bool timings = false;
  std::string d0 = "inn";
  std::string d1 = "aut";
  std::optional<std::string> element;
  std::size_t samples = 20;

  Limits limits() const;
};

struct CommandResult {
  /// Empty on usage errors.
  nlohmann::ordered_json report;
  int exit_code = kExitUsage;
};

/// Runs one command. Diagnostics go to stderr; the caller prints the report.
CommandResult run_command(const std::string& command,
                          const std::optional<std::string>& expr,
                          const Config& config);

nlohmann::ordered_json to_json(const WildReport& r, const Group& g);
nlohmann::ordered_json to_json(const TripletReport& r);

/// Entry point shared by the executable and tests.
int run_main(int argc, char** argv);

}  // namespace grpwild::cli

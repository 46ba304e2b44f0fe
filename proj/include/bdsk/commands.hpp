#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bdsk {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFails = 1,
  kExitInputError = 2,
  kExitSizeLimit = 3,
  kExitDisagreement = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CommandOptions {
  std::string command;
  std::optional<std::string> input;  // path
  std::string construction = "vertex";
  std::optional<std::string> output;
  std::optional<std::string> dot;
  std::size_t count = 500;
  std::uint64_t seed = kDefaultSeed;
  std::size_t jobs = 1;
  bool timing = false;
};

const std::vector<std::string>& command_names();

/// The structured report is authoritative; text() renders it.
struct VerdictReport {
  nlohmann::ordered_json json;
  int exit_code = kExitOk;

  std::string text() const;
};

/// Runs one command. Library errors propagate; map them with
/// describe_current_exception().
VerdictReport run_command(const CommandOptions& options);

/// Maps the exception being handled onto an exit code and message.
std::pair<int, std::string> describe_current_exception();

}  // namespace bdsk

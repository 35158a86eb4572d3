#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace moebius::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kMalformedInput = 2,
  kPrecondition = 3,
};

enum class Format { text, json };

struct RunConfig {
  /// One or two words: "validate", "hyperbolic perturb", ...
  std::vector<std::string> command;
  std::vector<std::filesystem::path> inputs;
  std::optional<std::string> scale;
  std::optional<std::string> eps;
  std::uint64_t seed = 1;
  std::optional<std::string> h;
  Format format = Format::text;
  unsigned jobs = 1;
};

/// Runs one subcommand and returns its exit code. Reports go to `out`,
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 into a RunConfig and runs it. Usage errors exit 2.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moebius::cli

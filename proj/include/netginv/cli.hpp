#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace netginv::cli {

enum class Command { Laplacian, GroupInverse, Connect, Kirchhoff, Resistance, Verify, Bench };
enum class OutputFormat { Text, Json };

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kParseError = 2,
  kNumericalFailure = 3,
};

struct RunConfig {
  Command command = Command::Laplacian;
  /// Positional arguments after the subcommand: file paths, then vertex
  /// indices for `resistance`, or n1 n2 edges for `bench`.
  std::vector<std::string> inputs;
  double lambda = 0.0;
  double tolerance = 1e-8;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 1;
  std::size_t repeats = 5;
  std::optional<std::string> output_path;
};

std::optional<Command> parse_command(const std::string& name);

/// Runs one command. Results go to `out` (or to config.output_path when set),
/// diagnostics to `err`. Returns one of the ExitCode values.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace netginv::cli

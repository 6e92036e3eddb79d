#include "netginv/cli.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
  using netginv::cli::Command;
  using netginv::cli::OutputFormat;

  netginv::cli::RunConfig config;
  CLI::App app{"Group inverses, effective resistances and Kirchhoff indices of connected networks"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  app.add_option("--lambda", config.lambda, "Spectral shift for Schrodinger matrices")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", config.tolerance, "Tolerance for verify")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", config.seed, "Random seed for bench");
  app.add_option("--repeats", config.repeats, "Timed repetitions for bench")->check(CLI::PositiveNumber);
  app.add_option("--output", output, "Write results to this file instead of stdout");

  const std::map<std::string, std::string> commands = {
      {"laplacian", "Print the Laplacian (or Schrodinger matrix with --lambda / weights) of <network>"},
      {"ginv", "Print the group inverse of <network> with verification residuals"},
      {"connect", "Print the composite group inverse for <network1> <network2> <connections>"},
      {"kirchhoff", "Print the Kirchhoff index of <network> or of a composite"},
      {"resistance", "Print the effective resistance between <x> and <y>"},
      {"verify", "Compare the block-formula path against the spectral oracle"},
      {"bench", "Time the composite path against the spectral oracle: <n1> <n2> <edges>"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", config.inputs, "Positional arguments")->required();
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : netginv::cli::kParseError;
  }

  config.command = *netginv::cli::parse_command(app.get_subcommands().front()->get_name());
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (!output.empty()) config.output_path = output;
  return netginv::cli::run(config, std::cout, std::cerr);
}

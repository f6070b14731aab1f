#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "wordhopf/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact quasi-shuffle word-algebra engine: solves "
               "Dyson-Schwinger fixed-point systems order by order, maps the "
               "solutions to polynomials in L and checks leading-log power "
               "laws."};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::string mode = "derived";
  int max_degree = 4;
  int generators = 2;
  std::uint64_t seed = 42;

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve the configured system and write the solution JSON");
  solve->add_option("--config", config_path, "Path to the run config JSON")
      ->required();
  solve->add_option("--out", out_path, "Output path for the solution JSON")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the algebraic law suites and report pass/fail per law");
  verify->add_option("--max-degree", max_degree,
                     "Word length bound for the exhaustive suites");
  verify->add_option("--generators", generators, "Alphabet size");
  verify->add_option("--seed", seed, "Seed for the sampled couplings");

  CLI::App* leading = app.add_subcommand(
      "leading-log", "Print the log-expansion tables of the solved system");
  leading->add_option("--config", config_path, "Path to the run config JSON")
      ->required();
  leading->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* compare = app.add_subcommand(
      "compare", "Compare solved leading logs against a closed form");
  compare->add_option("--config", config_path, "Path to the run config JSON")
      ->required();
  compare->add_option("--mode", mode, "Closed form to compare against")
      ->check(CLI::IsMember({"derived", "paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (solve->parsed()) {
    return wordhopf::cmd_solve(config_path, out_path, std::cerr);
  }
  if (verify->parsed()) {
    return wordhopf::cmd_verify(max_degree, generators, seed, std::cout,
                                std::cerr);
  }
  if (leading->parsed()) {
    return wordhopf::cmd_leading_log(config_path, format, std::cout,
                                     std::cerr);
  }
  if (compare->parsed()) {
    return wordhopf::cmd_compare(config_path, mode, std::cout, std::cerr);
  }
  return 2;
}

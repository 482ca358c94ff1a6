#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdsenum/cli.hpp"

int main(int argc, char** argv) {
  using namespace mdsenum::cli;

  CLI::App app{"Enumerate minimal dominating sets, minimal edge dominating sets and maximal "
               "independent sets"};
  std::vector<std::string> mode_names;
  for (auto [name, mode] : kModeNames) mode_names.emplace_back(name);

  RunConfig config;
  std::string mode;
  std::string input;
  std::size_t limit = 0;
  app.add_option("--mode", mode, "Enumeration mode")->required()->check(CLI::IsMember(mode_names));
  app.add_option("--input", input, "Edge-list file (default: standard input)");
  auto* limit_opt =
      app.add_option("--limit", limit, "Stop after this many results")
          ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  app.add_flag("--count", config.count_only, "Print only the number of results");
  app.add_flag("--stats", config.stats, "Print delay and stack statistics to stderr");
  app.add_flag("--force-general", config.force_general,
               "eds: use the general line-graph generator for bipartite roots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  config.mode = *parse_mode(mode);
  if (!input.empty()) config.input = input;
  if (limit_opt->count() > 0) config.limit = limit;

  std::ios::sync_with_stdio(false);
  return run(config, std::cin, std::cout, std::cerr);
}

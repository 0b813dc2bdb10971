#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "grpwild_cli/commands.hpp"

namespace grpwild::cli {

int run_main(int argc, char** argv) {
  CLI::App app{"Finite group wildness verifier"};
  app.set_version_flag("--version", kToolVersion);
  Config config;
  std::string command;
  std::optional<std::string> expr;
  std::string mode = "witness";
  std::optional<std::uint64_t> prime;
  std::optional<std::string> cache_dir, json_path, element;

  app.add_option("command", command,
                 "construct | verify-pwild | xi | verify-triplet | theorem1 | lemma5-demo")
      ->required();
  app.add_option("expr", expr, "group expression, e.g. \"G(2, C3)\", \"Sak(S3)\", \"A5 x C2\"");
  app.add_option("--prime", prime, "prime p for verify-pwild");
  app.add_option("--mode", mode, "witness or exact")
      ->check(CLI::IsMember({"witness", "exact"}));
  app.add_option("--depth", config.depth, "witness search depth")->check(CLI::Range(0u, 64u));
  app.add_option("--max-enum", config.max_enum, "largest group enumerated element by element")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", config.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", config.seed, "random seed");
  app.add_option("--cache-dir", cache_dir, "cache directory (default: $GRPWILD_CACHE)");
  app.add_option("--json", json_path, "also write the report to this file");
  app.add_option("--d0", config.d0, "D0 generators: inn, aut, trivial, file:PATH (comma list)");
  app.add_option("--d1", config.d1, "extra D1 generators, same syntax as --d0");
  app.add_option("--element", element, "element index for lemma5-demo");
  app.add_option("--samples", config.samples, "random intermediate D1 per group for theorem1");
  app.add_flag("--timings", config.timings, "include wall-clock timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  config.mode = mode == "exact" ? WildMode::kExact : WildMode::kWitness;
  config.prime = prime;
  config.cache_dir = cache_dir;
  config.json_path = json_path;
  config.element = element;

  const CommandResult r = run_command(command, expr, config);
  if (r.report.is_null()) return r.exit_code;
  const std::string line = r.report.dump();
  std::cout << line << "\n";
  if (config.json_path) {
    std::ofstream f(*config.json_path, std::ios::trunc);
    if (!f) {
      std::cerr << "error: cannot write " << *config.json_path << "\n";
      return kExitUsage;
    }
    f << line << "\n";
  }
  return r.exit_code;
}

}  // namespace grpwild::cli

#include <cstdlib>
#include <iostream>

#include <CLI11/CLI11.hpp>

#include "commands.hpp"

namespace {

gtsh::Int default_bound() {
  if (const char* env = std::getenv("GTSH_BOUND")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed GTSH_BOUND=" << env << "\n";
    }
  }
  return 24;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral GT-shadows: enumeration, composition and verification"};
  app.require_subcommand(1);

  gtsh::cli::CommandConfig config;
  config.bound = default_bound();

  for (const auto& name : gtsh::cli::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--n", config.n, "modulus of the target K^(n)");
    sub->add_option("--q", config.q, "finer modulus for reduce/fibers");
    sub->add_option("--alpha", config.alpha, "2-adic level for profinite");
    sub->add_option("--a", config.a, "shadow coordinates m,k");
    sub->add_option("--b", config.b, "second shadow coordinates m,k");
    sub->add_option("--m", config.m, "m selector");
    sub->add_option("--k", config.k, "k selector");
    sub->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--bound", config.bound, "enumeration bound (env GTSH_BOUND)");
    sub->add_flag("--check", config.check, "cross-validate against an independent computation");
    sub->callback([&config, name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gtsh::cli::kUsageError;
  }

  const auto result = gtsh::cli::run(config);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "gtsh: " << result.error << "\n";
  return result.exit_code;
}

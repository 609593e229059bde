#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "app.hpp"

#ifndef RRLOC_FIXTURE_DIR
#define RRLOC_FIXTURE_DIR "data/fixtures"
#endif

int main(int argc, char** argv) {
  using rrloc::cli::RunConfig;
  CLI::App app{"Riemann-Roch numbers of coadjoint orbits and symplectic fibrations"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.fixture_dir = RRLOC_FIXTURE_DIR;
  std::string output;
  app.add_option("--seed", config.seed, "Seed for generic-coordinate retries")->envname("RRLOC_SEED");
  app.add_option("--retries", config.max_retries, "Maximum genericity retries")->check(CLI::Range(1, 1000));
  app.add_option("--fixtures", config.fixture_dir, "Directory of fibration fixtures");
  app.add_option("-o,--output", output, "Write the JSON report here instead of stdout");

  auto with_group_weight = [&](CLI::App* sub) {
    sub->add_option("--group", config.group, "Root system, e.g. A2, B3, G2")->required();
    sub->add_option("--weight", config.weight, "Dynkin labels, e.g. 2,1")->required();
  };

  auto* dim = app.add_subcommand("dim", "Dimension of an irreducible representation");
  with_group_weight(dim);
  auto* vol = app.add_subcommand("orbit-volume", "Symplectic volume of a regular coadjoint orbit");
  with_group_weight(vol);
  auto* chr = app.add_subcommand("character", "Character as a truncated power series");
  with_group_weight(chr);
  chr->add_option("--trunc", config.trunc, "Truncation degree")->default_val(0);
  auto* rr = app.add_subcommand("rr-orbit", "Riemann-Roch number of a flag manifold by localization");
  with_group_weight(rr);
  rr->add_option("--k", config.k, "Level k or range a..b");

  auto* jk = app.add_subcommand("jk-residue", "Iterated residue of a problem file");
  jk->add_option("--input", config.input, "Problem JSON")->required()->check(CLI::ExistingFile);

  auto* fib = app.add_subcommand("fibration", "Riemann-Roch number of a reduced space");
  fib->add_option("--input", config.input, "Fixture JSON")->required()->check(CLI::ExistingFile);
  fib->add_option("--route", config.route, "base, residue or both")
      ->check(CLI::IsMember({"base", "residue", "both"}));
  fib->add_option("--k", config.k, "Level k or range a..b; defaults to the fixture's levels");
  fib->add_option("--trunc", config.trunc, "Truncation degree for the base route");

  auto* ver = app.add_subcommand("verify", "Run the built-in verification suites");
  ver->add_option("--suite", config.suite, "bwb, identity, residue, fibration, asymptotics or all")
      ->check(CLI::IsMember({"bwb", "identity", "residue", "fibration", "asymptotics", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  config.command = app.get_subcommands().front()->get_name();

  const auto result = rrloc::cli::run(config);
  if (output.empty()) {
    std::cout << result.output << "\n";
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return 1;
    }
    out << result.output << "\n";
  }
  if (!result.diagnostic.empty()) std::cerr << result.diagnostic << "\n";
  return result.exit_code;
}

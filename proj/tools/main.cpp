#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "aspherika/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "aspherika: certifies asphericity of the relative presentation of an "
      "equation over a torsion-free group, via weight functions on its star "
      "graph"};
  app.require_subcommand(1);

  aspherika::RunConfig cfg;
  auto patternCheck = CLI::IsMember({"P1", "P2", "P3"});

  auto addInputs = [&](CLI::App* cmd) {
    cmd->add_option("--equation", cfg.equationPath,
                    "equation word file, e.g. 'a1 t a2 t^-1 ...'")
        ->required();
    cmd->add_option("--constraints", cfg.constraintsPath,
                    "coefficient facts: 'a = b', 'a != 1', 'a = 1'");
    cmd->add_option("--pattern", cfg.pattern,
                    "substitute the named relator pattern first")
        ->check(patternCheck);
  };
  auto addBound = [&](CLI::App* cmd) {
    cmd->add_option("--bound", cfg.bound,
                    "cycle length bound (default: twice the class count, or "
                    "ASPHERIKA_BOUND)")
        ->check(CLI::PositiveNumber);
  };
  auto addJson = [&](CLI::App* cmd) {
    cmd->add_flag("--json", cfg.json, "machine readable report");
  };

  auto* check = app.add_subcommand(
      "check", "run the weight test with the given weights");
  addInputs(check);
  check->add_option("--weights", cfg.weightsPath,
                    "weight file: 'class <which> = p/q', 'default = p/q'");
  check->add_flag("--family-weights", cfg.familyWeights,
                  "use the canonical weights of the pattern (needs --pattern)");
  addBound(check);
  addJson(check);

  auto* search = app.add_subcommand(
      "search", "look for weights that pass the test");
  addInputs(search);
  addBound(search);
  addJson(search);

  auto* graph = app.add_subcommand("graph", "write the star graph as DOT");
  addInputs(graph);
  graph->add_option("--weights", cfg.weightsPath, "weight file to display");
  graph->add_flag("--family-weights", cfg.familyWeights,
                  "display the canonical weights of the pattern");
  graph->add_option("--dot", cfg.dotPath, "output file (default: stdout)");

  auto* suite = app.add_subcommand(
      "suite", "run the generated family cases and report each verdict");
  suite->add_option("--manifest", cfg.manifestPath,
                    "case list, one 'P1 n=8 k=4,7' per line (default: the "
                    "full built-in grid)");
  addBound(suite);
  addJson(suite);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (check->parsed()) cfg.command = aspherika::RunConfig::Command::Check;
  if (search->parsed()) cfg.command = aspherika::RunConfig::Command::Search;
  if (graph->parsed()) cfg.command = aspherika::RunConfig::Command::Graph;
  if (suite->parsed()) cfg.command = aspherika::RunConfig::Command::Suite;

  return aspherika::run(cfg, std::cout, std::cerr);
}

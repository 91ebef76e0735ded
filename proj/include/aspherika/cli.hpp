#pragma once

#include <iosfwd>
#include <string>

namespace aspherika {

// One invocation of the tool, already parsed.  run() loads the inputs,
// executes the command and writes the report to out (messages about bad
// input go to err).
struct RunConfig {
  enum class Command { Check, Search, Graph, Suite };

  Command command = Command::Check;
  std::string equationPath;     // check, search, graph
  std::string constraintsPath;  // optional coefficient facts
  std::string weightsPath;      // explicit weight file
  bool familyWeights = false;   // derive the canonical weights of the pattern
  std::string pattern;          // "P1", "P2" or "P3"; empty = no substitution
  std::string manifestPath;     // suite; empty = the built-in grid
  int bound = 0;                // 0 = ASPHERIKA_BOUND, else the default rule
  bool json = false;
  std::string dotPath;          // graph; empty = write DOT to out
};

// Exit status: 0 when the verdict is ASPHERICAL (every case, for suite),
// 2 INDETERMINATE, 3 FAILED or nothing found, 1 bad usage or bad input.
int run(RunConfig const& cfg, std::ostream& out, std::ostream& err);

}  // namespace aspherika

#pragma once

#include <vector>

#include "aspherika/rational.hpp"

namespace aspherika {

// Maximize objective . x over x >= 0 subject to the rows.  Senses are -1 for
// <=, 0 for ==, +1 for >=.  Sizes here stay in the dozens, so the solver is
// a dense two-phase tableau; Bland's rule keeps it finite.
struct LinearProgram {
  int vars = 0;
  std::vector<Rational> objective;

  struct Row {
    std::vector<Rational> coef;
    int sense = -1;
    Rational rhs;
  };
  std::vector<Row> rows;

  explicit LinearProgram(int n) : vars(n), objective(static_cast<std::size_t>(n)) {}
  void add_row(std::vector<Rational> coef, int sense, Rational rhs);
};

struct LpSolution {
  bool feasible = false;
  bool unbounded = false;
  std::vector<Rational> x;
  Rational value;
};

LpSolution solve_lp(LinearProgram const& lp);

}  // namespace aspherika

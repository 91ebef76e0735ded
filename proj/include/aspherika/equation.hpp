#pragma once

#include <string>
#include <vector>

#include "aspherika/constraints.hpp"
#include "aspherika/word.hpp"

namespace aspherika {

// An equation over the coefficient group G, written
//
//   g_1 t^e1 g_2 t^e2 ... g_n t^en = 1
//
// where each g_i is a (possibly empty) block of coefficient letters and each
// e_i is +1 or -1.  The solvability question is whether it has a solution
// for t in some overgroup of G.
struct Equation {
  Word word;                 // the full left-hand side as given
  std::vector<Word> blocks;  // blocks[i] sits in front of the i-th t letter
  std::vector<int> exps;     // exps[i] is the exponent of the i-th t letter

  int n() const { return static_cast<int>(exps.size()); }

  int exponent_sum() const {
    int s = 0;
    for (int e : exps) s += e;
    return s;
  }

  // 1-based accessors matching the subscripts above.
  Word const& block(int i) const { return blocks.at(static_cast<std::size_t>(i - 1)); }
  int exp(int i) const { return exps.at(static_cast<std::size_t>(i - 1)); }
};

// Checks the shape and registers what it forces into the store:
//  - the word is nonempty, contains no x, and ends with a t letter;
//  - every coefficient name is registered;
//  - wherever consecutive t exponents cancel (cyclically), the block between
//    them must not be trivial: a block reducing to nothing is a ShapeError,
//    and a block reducing to a single letter gets a nontrivial fact (the
//    equation could otherwise be shortened, so a solution forces g != 1).
Equation validate_equation(Word const& w, ConstraintStore& store);
Equation validate_equation(std::string const& text, ConstraintStore& store);

}  // namespace aspherika

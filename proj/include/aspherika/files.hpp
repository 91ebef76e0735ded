#pragma once

#include <string>

#include "aspherika/constraints.hpp"
#include "aspherika/star_graph.hpp"
#include "aspherika/weights.hpp"
#include "aspherika/word.hpp"

namespace aspherika {

// Reads a word file: whitespace separated letter tokens, possibly spread over
// several lines. '#' starts a comment that runs to the end of the line.
Word load_word_file(std::string const& path);

// Reads constraint directives into the store, one per line:
//   a = b      the two coefficients denote the same group element
//   a != 1     the coefficient is known nontrivial
//   a = 1      the coefficient is trivial
// '#' starts a comment. Errors carry the 1-based line number.
void load_constraints_file(std::string const& path, ConstraintStore& store);

// Reads a weight file for the classes of g:
//   class <word> = p/q        matches the unique class whose label equals the
//                             word (up to the store, either orientation)
//   class <v>><w> = p/q       matches the unique trivially labelled class
//                             with endpoints {v, w}, e.g.  class x>t^-1 = 0
//   default = p/q             value for every class not named explicitly
// Every class must end up covered; ambiguous or unmatched selectors are
// rejected.
WeightAssignment load_weights_file(std::string const& path, StarGraph const& g,
                                   ConstraintStore const& store);

}  // namespace aspherika

#pragma once

#include <string>
#include <vector>

#include "aspherika/asphericity.hpp"

namespace aspherika {

enum class SearchOutcome {
  Found,       // a certifying weight assignment exists and is returned
  Infeasible,  // the constraints rule every assignment out
  Exhausted,   // no certificate reachable this way (cuts or iterations ran out)
};

std::string search_outcome_name(SearchOutcome o);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Exhausted;
  WeightAssignment weights;  // meaningful when Found
  AsphericityReport report;  // the last verdict (certifying when Found)
  int iterations = 0;
  int cuts = 0;
};

// Looks for weights passing the test by iterating an exact linear program.
// The base program encodes the per-relator totals and 0 <= theta <= 2; every
// enumerated cycle whose label is not settled nontrivial contributes a cut
// demanding weight at least 2 on its classes.  Cuts only ever exclude
// assignments that could not certify anyway, so an infeasible program means
// no weight assignment can pass with the facts at hand.
SearchResult search_weights(StarGraph const& g, int bound, ConstraintStore const& store,
                            int maxIterations = 100);

}  // namespace aspherika

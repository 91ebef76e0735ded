#pragma once

#include <string>
#include <vector>

#include "aspherika/constraints.hpp"
#include "aspherika/cycles.hpp"
#include "aspherika/star_graph.hpp"
#include "aspherika/weights.hpp"

namespace aspherika {

enum class Verdict {
  Aspherical,     // all three weight conditions certified
  Indeterminate,  // no violation found, but something stayed unresolved
  Failed,         // a condition is violated outright
};

std::string verdict_name(Verdict v);

struct AsphericityReport {
  Verdict verdict = Verdict::Indeterminate;
  std::vector<Rational> condition1;  // per relator, sum of (1 - theta)
  std::vector<int> negativeClasses;  // condition 3 offenders
  bool scanned = false;              // cycle enumeration ran (needs theta >= 0)
  CycleScan scan;
  // Coefficient words that would each need to be nontrivial in the group for
  // the verdict to improve: one per unresolved cycle label, deduplicated.
  std::vector<Word> requiredConditions;
  std::vector<std::string> notes;
};

// Runs the weight test on a star graph: per-relator totals, sign check, and
// the bounded cycle scan.  Failed beats Indeterminate beats Aspherical; the
// verdict is Aspherical only when the scan was complete (no wild zero
// subgraph, no unclassified family, bound at least the completeness bound)
// and every short cycle label came out nontrivial.
AsphericityReport check_asphericity(StarGraph const& g, WeightAssignment const& w,
                                    int bound, ConstraintStore const& store);

}  // namespace aspherika

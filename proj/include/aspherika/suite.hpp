#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aspherika/asphericity.hpp"
#include "aspherika/equation.hpp"
#include "aspherika/presentation.hpp"

namespace aspherika {

// One member of a covered family: the t count and the anchor positions, where
// consecutive anchors sit exactly 3 apart so the windows tile a single run.
struct FamilySpec {
  PatternKind kind = PatternKind::P1;
  int n = 0;
  std::vector<int> ks;

  int m() const { return static_cast<int>(ks.size()); }
};

// Checks the anchor range of the kind, the spacing, and for the tailed kind
// the room for the trailing inverted letter.  Throws Error with the reason.
void validate_family(FamilySpec const& spec);

std::string family_name(FamilySpec const& spec);  // "P1 n=8 k=4,7"

// How repeated occurrences name their coefficients: Reused writes the first
// window's names again, Distinct invents fresh names and declares them equal.
// The two must build the same presentation up to naming.
enum class Naming { Reused, Distinct };

struct GeneratedCase {
  std::string equationText;
  std::vector<std::pair<std::string, std::string>> equalities;  // Distinct only
};

GeneratedCase generate_case(FamilySpec const& spec, Naming naming);

// The weight assignment the family is certified with: 1 everywhere except a
// fixed set of coefficient classes (plus one trivially labeled class for the
// kinds whose window word has interior identity edges), resolved by their
// labels.  A rule that matches no class or several is a ResolutionError.
WeightAssignment family_weights(StarGraph const& g, Equation const& eq,
                                PatternMatch const& match, ConstraintStore const& store);

struct CaseRun {
  FamilySpec spec;
  std::string equationText;
  ConstraintStore store;
  Equation equation;
  PatternMatch match;
  Presentation presentation;
  StarGraph graph;
  WeightAssignment weights;
  int bound = 0;
  AsphericityReport report;
};

// Generate, validate, match, substitute, and run the weight test with the
// family weights.  bound 0 means the default rule.
CaseRun run_case(FamilySpec const& spec, Naming naming, int bound = 0);

// Every legal spec with nMin <= n <= nMax and 1 <= m <= mMax, ordered by
// kind, then n, then m, then first anchor.
std::vector<FamilySpec> family_grid(int nMin, int nMax, int mMax);

// One spec per line, "P1 n=8 k=4,7"; blank lines and # comments skipped.
// Positions in errors are 1-based line numbers.
std::vector<FamilySpec> parse_manifest(std::string const& text);

}  // namespace aspherika

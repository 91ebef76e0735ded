#pragma once

#include <vector>

#include "aspherika/constraints.hpp"
#include "aspherika/star_graph.hpp"
#include "aspherika/weights.hpp"
#include "aspherika/word.hpp"

namespace aspherika {

// A place in a finding where a zero-weight cycle is traversed in full.
// Inserting extra copies of that cycle there yields closed reduced walks of
// the same weight, one per copy count; family is the combined status of all
// those insertions.
struct PumpSite {
  std::size_t at = 0;      // dart index where the run starts
  std::size_t runLen = 0;  // darts in the maximal run
  int component = 0;       // zero component owning the cycle
  LabelStatus family;
};

// One reduced closed walk of weight < 2, canonical under rotation.
struct CycleFinding {
  std::vector<int> darts;
  Rational weight;
  Word label;           // dart labels, concatenated
  LabelStatus concrete; // status of the label itself
  std::vector<PumpSite> pumps;
  LabelStatus status;   // worst of concrete and every pump family
  bool multiExposure = false;  // two or more disjoint runs: the joint
                               // multi-parameter family is not classified
};

// The powers of the cycle of one unicyclic zero component.
struct ComponentFamily {
  int component = 0;
  Word core;  // cycle label, reduced
  LabelStatus status;
};

struct CycleScan {
  int bound = 0;  // length actually enumerated (capped when the zero
                  // subgraph is wild, since no bound certifies it anyway)
  long long completenessBound = 0;  // walks longer than this repeat a zero cycle
  bool boundBelowCompleteness = false;
  bool guardTripped = false;  // enumeration hit the step guard; the findings
                              // are a prefix of the full scan
  bool wildZero = false;      // a zero component of rank >= 2 exists
  bool multiExposure = false; // some finding has two or more disjoint runs
  ZeroAnalysis zero;
  std::vector<CycleFinding> findings;
  std::vector<ComponentFamily> families;
};

// All cyclically reduced closed dart walks of weight < 2 and length <= bound,
// one representative per rotation class, ordered by length then darts.
// Demands nonnegative weights and bound >= the longest relator's generator
// count (BoundError otherwise); a step guard throws BoundError on blowup.
std::vector<std::vector<int>> enumerate_short_cycles(StarGraph const& g,
                                                     WeightAssignment const& w, int bound);

// Bound used when the caller does not pick one: twice the class count, or
// the longest relator if that is more.
int default_cycle_bound(StarGraph const& g);

// Status of the family of cyclic coefficient words core^j flank, j >= 1.
// FreelyTrivial if some member collapses, NonAdmissible only when every
// member is certified nontrivial (torsion freeness carries single-letter
// powers to every exponent), Indeterminate otherwise.
LabelStatus classify_power_family(Word const& core, Word const& flank,
                                  ConstraintStore const& store);

// Enumeration plus the zero-cycle analysis that makes it conclusive: pump
// detection in every finding, per-component power families, and the length
// B beyond which every weight < 2 walk is a pumped copy of a shorter one.
CycleScan scan_cycles(StarGraph const& g, WeightAssignment const& w, int bound,
                      ConstraintStore const& store);

}  // namespace aspherika

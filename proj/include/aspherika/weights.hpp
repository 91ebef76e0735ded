#pragma once

#include <vector>

#include "aspherika/rational.hpp"
#include "aspherika/star_graph.hpp"

namespace aspherika {

// A weight per edge class.  A dart and its pair always share their class
// weight, so this is a function on unoriented edges.
struct WeightAssignment {
  std::vector<Rational> theta;

  Rational const& of_class(int cls) const { return theta.at(static_cast<std::size_t>(cls)); }
  Rational const& of_dart(StarGraph const& g, int dart) const {
    return of_class(g.darts.at(static_cast<std::size_t>(dart)).cls);
  }
};

WeightAssignment uniform_weights(StarGraph const& g, Rational value);

// Sum of (1 - theta) over the forward darts of each relator.  The test
// demands every entry be at least 2.
std::vector<Rational> condition1_totals(StarGraph const& g, WeightAssignment const& w);

// Class ids carrying a negative weight.  The test demands none.
std::vector<int> negative_weight_classes(StarGraph const& g, WeightAssignment const& w);

// The subgraph spanned by weight-zero classes, split into connected
// components.  Zero-weight cycles are the only way a short closed walk can
// beat the weight bound by repetition, so the shape of this subgraph decides
// whether cycle enumeration up to a finite bound is conclusive:
//   rank 0 (tree)       no closed walk stays at weight 0
//   rank 1 (unicyclic)  every reduced zero walk is a power of the one cycle
//   rank >= 2           zero walks of unbounded variety exist
struct ZeroComponent {
  int id = 0;
  std::vector<Vertex> vertices;
  std::vector<int> classes;  // zero classes inside
  int rank = 0;              // edges - vertices + 1
  std::vector<int> gamma;    // the unique cycle as a dart path, rank 1 only
};

struct ZeroAnalysis {
  std::vector<ZeroComponent> components;
  bool wild = false;  // some component has rank >= 2
};

ZeroAnalysis analyze_zero_subgraph(StarGraph const& g, WeightAssignment const& w);

}  // namespace aspherika

#pragma once

#include <string>
#include <vector>

#include "aspherika/constraints.hpp"
#include "aspherika/presentation.hpp"
#include "aspherika/rational.hpp"
#include "aspherika/word.hpp"

namespace aspherika {

// A vertex of the star graph: a generator or its inverse.
struct Vertex {
  char gen = 0;  // 't' or 'x'
  int exp = 1;

  friend bool operator==(Vertex const&, Vertex const&) = default;
  friend bool operator<(Vertex const& a, Vertex const& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.exp > b.exp;  // positive vertex before its inverse
  }
};

std::string vertex_label(Vertex v);  // t, t^-1, x, x^-1
std::string vertex_id(Vertex v);     // t, t_inv, x, x_inv

// One directed edge of the star graph.  Every generator letter of every
// relator, read in both orientations, contributes exactly one dart: the dart
// at generator position p runs from the inverse of the previous generator
// letter (cyclically) to the letter at p, labelled by the coefficients
// strictly between the two positions.
struct Dart {
  int id = 0;
  int relator = 0;
  bool forward = true;
  int position = 0;  // letter index in the oriented relator
  Vertex source, target;
  Word label;
  int pair = 0;  // the same edge read in the opposite orientation
  int cls = 0;
};

// An unoriented edge: a dart together with its pair.  Weights live here.
struct EdgeClass {
  int id = 0;
  int dart = 0;    // representative: the smaller dart id
  int coDart = 0;  // its pair
  Vertex source, target;  // of the representative
  Word label;
};

struct StarGraph {
  std::vector<Vertex> vertices;  // sorted, only vertices that occur
  std::vector<Dart> darts;
  std::vector<EdgeClass> classes;
  std::vector<int> relatorGenCount;      // generator letters per relator
  std::vector<std::vector<int>> out;     // out[v] = darts leaving vertices[v]

  int vertex_index(Vertex v) const;
  std::vector<int> const& darts_from(Vertex v) const { return out.at(static_cast<std::size_t>(vertex_index(v))); }
};

// Builds the star graph of a presentation over t, x.  Relators must be
// cyclically reduced and contain at least one generator letter each.
// Invariants checked on the result: pairing is an involution that swaps
// endpoints and inverts labels, and there are exactly two darts per
// generator letter.
StarGraph build_star_graph(Presentation const& pres, ConstraintStore const& store);

// Graphviz rendering, one edge per class.  When theta is nonempty it must
// assign a weight to every class and the labels carry " / w=<value>".
std::string to_dot(StarGraph const& g, std::vector<Rational> const& theta = {});

}  // namespace aspherika

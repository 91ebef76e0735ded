#include "doctest.h"

#include <map>

#include "aspherika/equation.hpp"
#include "aspherika/presentation.hpp"
#include "aspherika/star_graph.hpp"
#include "aspherika/weights.hpp"

using namespace aspherika;

namespace {

struct Built {
  ConstraintStore store;
  StarGraph graph;
};

Built build(char const* text, PatternKind kind,
            std::vector<std::pair<char const*, char const*>> const& equalities) {
  Built b;
  for (auto const& [l, r] : equalities) b.store.declare_equal(l, r);
  Equation eq = validate_equation(text, b.store);
  PatternMatch m = detect_pattern(eq, kind, b.store);
  b.graph = build_star_graph(substitute(eq, m, b.store), b.store);
  return b;
}

Built p1_example() {
  return build("g1 t g2 t^-1 g3 t g4 t g5 t^-1 g6 t g7 t g8 t", PatternKind::P1,
               {{"g5", "g2"}, {"g6", "g3"}});
}

// Weight 0 on the classes whose label prints as one of the given strings,
// weight 1 elsewhere.
WeightAssignment zeros_on(StarGraph const& g, std::set<std::string> const& labels) {
  WeightAssignment w = uniform_weights(g, Rational(1));
  for (EdgeClass const& c : g.classes)
    if (labels.count(str(c.label))) w.theta[static_cast<std::size_t>(c.id)] = Rational(0);
  return w;
}

std::string gamma_labels(StarGraph const& g, ZeroComponent const& comp) {
  Word label;
  for (int dart : comp.gamma) {
    Word const& piece = g.darts[static_cast<std::size_t>(dart)].label;
    label.insert(label.end(), piece.begin(), piece.end());
  }
  return str(label);
}

}  // namespace

TEST_CASE("condition 1 totals under the published zero pattern") {
  Built b = p1_example();
  WeightAssignment w = zeros_on(b.graph, {"g1", "g2", "g3", "g7"});
  auto totals = condition1_totals(b.graph, w);
  REQUIRE(totals.size() == 2);
  CHECK(totals[0] == Rational(2));
  CHECK(totals[1] == Rational(2));
}

TEST_CASE("condition 1 flags a deficient relator") {
  Built b = p1_example();
  // Only one zero in the first relator, none elsewhere: r1 total is 1.
  WeightAssignment w = uniform_weights(b.graph, Rational(1));
  auto totals = condition1_totals(b.graph, w);
  CHECK(totals[0] == Rational(0));
  WeightAssignment half = uniform_weights(b.graph, Rational(1, 2));
  totals = condition1_totals(b.graph, half);
  CHECK(totals[0] == Rational(2));
  CHECK(totals[1] == Rational(2));
}

TEST_CASE("negative weights are reported by class id") {
  Built b = p1_example();
  WeightAssignment w = uniform_weights(b.graph, Rational(1));
  w.theta[3] = Rational(-1, 4);
  w.theta[6] = Rational(-2);
  CHECK(negative_weight_classes(b.graph, w) == std::vector<int>{3, 6});
  CHECK(negative_weight_classes(b.graph, uniform_weights(b.graph, Rational(0))).empty());
}

TEST_CASE("size mismatches are rejected") {
  Built b = p1_example();
  WeightAssignment w;
  w.theta.assign(3, Rational(1));
  CHECK_THROWS_AS(condition1_totals(b.graph, w), ConsistencyError);
  CHECK_THROWS_AS(negative_weight_classes(b.graph, w), ConsistencyError);
}

TEST_CASE("zero subgraph of the P1 example: two unicyclic components") {
  Built b = p1_example();
  WeightAssignment w = zeros_on(b.graph, {"g1", "g2", "g3", "g7"});
  ZeroAnalysis z = analyze_zero_subgraph(b.graph, w);
  CHECK_FALSE(z.wild);
  REQUIRE(z.components.size() == 2);

  // Components are ordered by smallest vertex: {t, x^-1} before {t^-1, x}.
  ZeroComponent const& first = z.components[0];
  REQUIRE(first.vertices.size() == 2);
  CHECK(vertex_label(first.vertices[0]) == "t");
  CHECK(vertex_label(first.vertices[1]) == "x^-1");
  CHECK(first.rank == 1);
  REQUIRE(first.gamma.size() == 1);  // the g3 loop at t
  CHECK(gamma_labels(b.graph, first) == "g3");

  ZeroComponent const& second = z.components[1];
  CHECK(vertex_label(second.vertices[0]) == "t^-1");
  CHECK(vertex_label(second.vertices[1]) == "x");
  CHECK(second.rank == 1);
  REQUIRE(second.gamma.size() == 1);  // the g2 loop at t^-1
  CHECK(gamma_labels(b.graph, second) == "g2");
}

TEST_CASE("zero subgraph of the P2 example: a two-edge cycle") {
  Built b = build(
      "g1 t g2 t^-1 g3 t g4 t g5 t^-1 g6 t g7 t g8 t^-1 g9 t g10 t g11 t g12 t g13 t",
      PatternKind::P2, {{"g6", "g3"}, {"g9", "g3"}, {"g7", "g4"}, {"g10", "g4"}});
  // Zeros: the blocks around the first window, the block after the last one,
  // and the empty-labelled edge x -> t^-1.
  WeightAssignment w = zeros_on(b.graph, {"g2", "g3", "g11"});
  for (EdgeClass const& c : b.graph.classes)
    if (c.label.empty() && vertex_label(c.source) == "x")
      w.theta[static_cast<std::size_t>(c.id)] = Rational(0);

  auto totals = condition1_totals(b.graph, w);
  REQUIRE(totals.size() == 2);
  CHECK(totals[0] == Rational(2));
  CHECK(totals[1] == Rational(2));

  ZeroAnalysis z = analyze_zero_subgraph(b.graph, w);
  CHECK_FALSE(z.wild);
  REQUIRE(z.components.size() == 2);
  // {t, x^-1}: g11 edge plus the g3 loop at t.
  CHECK(z.components[0].rank == 1);
  CHECK(gamma_labels(b.graph, z.components[0]) == "g3");
  // {t^-1, x}: the g2 edge and the empty edge close a 2-cycle.
  CHECK(z.components[1].rank == 1);
  REQUIRE(z.components[1].gamma.size() == 2);
  CHECK(gamma_labels(b.graph, z.components[1]) == "g2");
}

TEST_CASE("forests are rank 0 and carry no cycle") {
  Built b = p1_example();
  // Only the g1 edge and the g7 edge: two disjoint single-edge trees.
  WeightAssignment w = zeros_on(b.graph, {"g1", "g7"});
  ZeroAnalysis z = analyze_zero_subgraph(b.graph, w);
  CHECK_FALSE(z.wild);
  REQUIRE(z.components.size() == 2);
  for (auto const& comp : z.components) {
    CHECK(comp.rank == 0);
    CHECK(comp.gamma.empty());
  }
}

TEST_CASE("an all-zero assignment is wild") {
  Built b = p1_example();
  WeightAssignment w = uniform_weights(b.graph, Rational(0));
  ZeroAnalysis z = analyze_zero_subgraph(b.graph, w);
  CHECK(z.wild);
  REQUIRE(z.components.size() == 1);
  CHECK(z.components[0].rank == 5);  // 8 edges, 4 vertices
  CHECK(z.components[0].gamma.empty());
}

TEST_CASE("no zero classes, no components") {
  Built b = p1_example();
  ZeroAnalysis z = analyze_zero_subgraph(b.graph, uniform_weights(b.graph, Rational(1)));
  CHECK(z.components.empty());
  CHECK_FALSE(z.wild);
}

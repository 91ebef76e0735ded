#include "doctest.h"

#include "aspherika/asphericity.hpp"
#include "aspherika/equation.hpp"
#include "aspherika/presentation.hpp"

using namespace aspherika;

namespace {

struct Built {
  ConstraintStore store;
  StarGraph graph;
};

Built p1_example() {
  Built b;
  b.store.declare_equal("g5", "g2");
  b.store.declare_equal("g6", "g3");
  Equation eq = validate_equation("g1 t g2 t^-1 g3 t g4 t g5 t^-1 g6 t g7 t g8 t", b.store);
  PatternMatch m = detect_pattern(eq, PatternKind::P1, b.store);
  b.graph = build_star_graph(substitute(eq, m, b.store), b.store);
  return b;
}

WeightAssignment p1_weights(StarGraph const& g) {
  WeightAssignment w = uniform_weights(g, Rational(1));
  for (EdgeClass const& c : g.classes) {
    std::string lab = str(c.label);
    if (lab == "g1" || lab == "g2" || lab == "g3" || lab == "g7")
      w.theta[static_cast<std::size_t>(c.id)] = Rational(0);
  }
  return w;
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(verdict_name(Verdict::Aspherical) == "ASPHERICAL");
  CHECK(verdict_name(Verdict::Indeterminate) == "INDETERMINATE");
  CHECK(verdict_name(Verdict::Failed) == "FAILED");
}

TEST_CASE("the P1 example certifies as aspherical") {
  Built b = p1_example();
  AsphericityReport rep = check_asphericity(b.graph, p1_weights(b.graph), 16, b.store);
  CHECK(rep.verdict == Verdict::Aspherical);
  CHECK(rep.scanned);
  REQUIRE(rep.condition1.size() == 2);
  CHECK(rep.condition1[0] == Rational(2));
  CHECK(rep.condition1[1] == Rational(2));
  CHECK(rep.negativeClasses.empty());
  CHECK(rep.requiredConditions.empty());
  CHECK(rep.notes.empty());
}

TEST_CASE("a too-small bound degrades the verdict, not the findings") {
  Built b = p1_example();
  AsphericityReport rep = check_asphericity(b.graph, p1_weights(b.graph), 4, b.store);
  CHECK(rep.verdict == Verdict::Indeterminate);
  CHECK(rep.scan.boundBelowCompleteness);
  CHECK(rep.requiredConditions.empty());
  REQUIRE(rep.notes.size() == 1);
  CHECK(rep.notes[0].find("completeness bound 7") != std::string::npos);
}

TEST_CASE("a freely trivial cycle label fails the test") {
  // One commutator relator: the star graph is a single zero-weight square
  // whose cycle label is empty, so repetition gives arbitrarily long trivial
  // labels and the presentation cannot pass.
  ConstraintStore s;
  Presentation p;
  p.relators.push_back(parse_word("t x t^-1 x^-1"));
  StarGraph g = build_star_graph(p, s);
  AsphericityReport rep = check_asphericity(g, uniform_weights(g, Rational(0)), 8, s);
  CHECK(rep.verdict == Verdict::Failed);
  CHECK(rep.scanned);
  REQUIRE(rep.condition1.size() == 1);
  CHECK(rep.condition1[0] == Rational(4));
  bool noted = false;
  for (auto const& n : rep.notes) noted |= n.find("empty word") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("a relator total below 2 fails even with clean cycles") {
  Built b = p1_example();
  AsphericityReport rep = check_asphericity(b.graph, uniform_weights(b.graph, Rational(1)), 8, b.store);
  CHECK(rep.verdict == Verdict::Failed);
  CHECK(rep.scanned);
  CHECK(rep.condition1[0] == Rational(0));
  REQUIRE(rep.notes.size() == 2);
  CHECK(rep.notes[0].find("relator 0") != std::string::npos);
  CHECK(rep.notes[1].find("relator 1") != std::string::npos);
}

TEST_CASE("negative weights fail without scanning") {
  Built b = p1_example();
  WeightAssignment w = p1_weights(b.graph);
  // Dropping a zero class below 0 raises both relator totals, so the only
  // violation left is the sign itself.
  std::size_t g2cls = 0;
  for (EdgeClass const& c : b.graph.classes)
    if (str(c.label) == "g2") g2cls = static_cast<std::size_t>(c.id);
  w.theta[g2cls] = Rational(-1, 2);
  AsphericityReport rep = check_asphericity(b.graph, w, 8, b.store);
  CHECK(rep.verdict == Verdict::Failed);
  CHECK_FALSE(rep.scanned);
  REQUIRE(rep.negativeClasses.size() == 1);
  CHECK(rep.negativeClasses[0] == static_cast<int>(g2cls));
  REQUIRE(rep.notes.size() == 1);
  CHECK(rep.notes[0].find("negative weight -1/2") != std::string::npos);
}

TEST_CASE("unresolved labels surface as required conditions") {
  ConstraintStore s;
  Equation eq = validate_equation("a^-1 t a t", s);
  StarGraph g = build_star_graph(from_equation(eq, s), s);
  AsphericityReport rep = check_asphericity(g, uniform_weights(g, Rational(0)), 4, s);
  CHECK(rep.verdict == Verdict::Indeterminate);
  // Concrete labels a^2, a^4 and their inverses, plus a^6 from the pumped
  // family of the length 4 finding (and its inverse), deduplicated.
  REQUIRE(rep.requiredConditions.size() == 6);
  CHECK(str(rep.requiredConditions[0]) == "a a");
  CHECK(str(rep.requiredConditions[1]) == "a a a a");
  CHECK(str(rep.requiredConditions[2]) == "a a a a a a");
  CHECK(str(rep.requiredConditions[3]) == "a^-1 a^-1");
  CHECK(str(rep.requiredConditions[4]) == "a^-1 a^-1 a^-1 a^-1");
  CHECK(str(rep.requiredConditions[5]) == "a^-1 a^-1 a^-1 a^-1 a^-1 a^-1");
  // Knowing a is nontrivial resolves every one of them.
  ConstraintStore known;
  known.declare_nontrivial("a");
  Equation eq2 = validate_equation("a^-1 t a t", known);
  StarGraph g2 = build_star_graph(from_equation(eq2, known), known);
  AsphericityReport rep2 = check_asphericity(g2, uniform_weights(g2, Rational(0)), 4, known);
  CHECK(rep2.verdict == Verdict::Aspherical);
  CHECK(rep2.requiredConditions.empty());
}

TEST_CASE("a wild zero subgraph is reported, not guessed at") {
  Built b = p1_example();
  AsphericityReport rep = check_asphericity(b.graph, uniform_weights(b.graph, Rational(0)), 4, b.store);
  CHECK(rep.verdict == Verdict::Indeterminate);
  CHECK(rep.scan.wildZero);
  bool noted = false;
  for (auto const& n : rep.notes) noted |= n.find("independent cycles") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("a guard-tripped scan degrades the verdict and says so") {
  std::string text;
  for (int i = 1; i <= 24; ++i)
    text += "g" + std::to_string(i) + (i == 2 ? " t^-1 " : " t ");
  Built b;
  Equation eq = validate_equation(text, b.store);
  PatternMatch m = detect_pattern(eq, PatternKind::P1, b.store);
  b.graph = build_star_graph(substitute(eq, m, b.store), b.store);
  AsphericityReport rep = check_asphericity(b.graph, uniform_weights(b.graph, Rational(0)),
                                            default_cycle_bound(b.graph), b.store);
  CHECK(rep.verdict == Verdict::Indeterminate);
  CHECK(rep.scan.guardTripped);
  bool noted = false;
  for (auto const& n : rep.notes) noted |= n.find("step guard") != std::string::npos;
  CHECK(noted);
}

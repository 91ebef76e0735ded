#include "aspherika/files.hpp"

#include <filesystem>
#include <fstream>

#include "aspherika/asphericity.hpp"
#include "aspherika/errors.hpp"
#include "aspherika/suite.hpp"
#include "doctest.h"

using namespace aspherika;

namespace {

std::string write_temp(std::string const& name, std::string const& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << text;
  return path.string();
}

}  // namespace

TEST_CASE("word files join lines and drop comments") {
  auto path = write_temp("files_word.eq",
                         "# leading comment\n"
                         "a1 t a2 t^-1\n"
                         "a3 t  # trailing comment\n"
                         "\n"
                         "a4 t\n");
  Word w = load_word_file(path);
  CHECK(str(w) == "a1 t a2 t^-1 a3 t a4 t");
}

TEST_CASE("missing files are reported by name") {
  CHECK_THROWS_WITH_AS(load_word_file("/nonexistent/word.eq"),
                       doctest::Contains("/nonexistent/word.eq"), Error);
}

TEST_CASE("constraint files feed the store") {
  auto path = write_temp("files_constraints.txt",
                         "# facts\n"
                         "a5 = a2\n"
                         "a2 != 1\n"
                         "a9 = 1\n");
  ConstraintStore store;
  load_constraints_file(path, store);
  CHECK(store.same_class("a5", "a2"));
  CHECK(store.is_nontrivial("a5"));
  CHECK(store.is_trivial("a9"));
}

TEST_CASE("constraint grammar errors carry the line number") {
  ConstraintStore store;
  auto bad = write_temp("files_constraints_bad.txt", "a = b\n\nb == c\n");
  CHECK_THROWS_WITH_AS(load_constraints_file(bad, store),
                       doctest::Contains("(at position 3)"), ParseError);

  auto conflict =
      write_temp("files_constraints_conflict.txt", "a != 1\na = 1\n");
  ConstraintStore store2;
  CHECK_THROWS_WITH_AS(load_constraints_file(conflict, store2),
                       doctest::Contains("(at position 2)"), ParseError);
}

TEST_CASE("weight files resolve labels like the generated assignments") {
  CaseRun run = run_case(FamilySpec{PatternKind::P1, 8, {4, 7}},
                         Naming::Reused);
  auto path = write_temp("files_weights_p1.txt",
                         "class a1 = 0\n"
                         "class a2 = 0\n"
                         "class a3 = 0\n"
                         "class a7 = 0\n"
                         "default = 1\n");
  WeightAssignment w = load_weights_file(path, run.graph, run.store);
  CHECK(w.theta == run.weights.theta);

  auto rep = check_asphericity(run.graph, w, run.bound, run.store);
  CHECK(rep.verdict == Verdict::Aspherical);
}

TEST_CASE("weight files can name identity classes by their endpoints") {
  CaseRun run = run_case(FamilySpec{PatternKind::P2, 13, {4, 7, 10}},
                         Naming::Reused);
  auto path = write_temp("files_weights_p2.txt",
                         "class a2 = 0\n"
                         "class a3 = 0\n"
                         "class a11 = 0\n"
                         "class x>t^-1 = 0\n"
                         "default = 1\n");
  WeightAssignment w = load_weights_file(path, run.graph, run.store);
  CHECK(w.theta == run.weights.theta);
}

TEST_CASE("weight selectors must name exactly one class") {
  ConstraintStore store;
  auto eq = validate_equation(parse_word("a^-1 t a t"), store);
  auto g = build_star_graph(from_equation(eq, store), store);

  // Both classes carry the label a (one as a, one as a^-1), so naming the
  // word is ambiguous.
  auto ambiguous = write_temp("files_weights_ambiguous.txt",
                              "class a = 0\ndefault = 1\n");
  CHECK_THROWS_WITH_AS(load_weights_file(ambiguous, g, store),
                       doctest::Contains("more than one class"),
                       ResolutionError);

  auto unmatched = write_temp("files_weights_unmatched.txt",
                              "class b = 0\ndefault = 1\n");
  CHECK_THROWS_WITH_AS(load_weights_file(unmatched, g, store),
                       doctest::Contains("names no class"), ResolutionError);

  auto onlyDefault = write_temp("files_weights_default.txt",
                                "default = 1/2\n");
  WeightAssignment w = load_weights_file(onlyDefault, g, store);
  CHECK(w.theta == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("weight files must cover every class") {
  CaseRun run = run_case(FamilySpec{PatternKind::P1, 8, {4, 7}},
                         Naming::Reused);
  auto path = write_temp("files_weights_partial.txt", "class a1 = 0\n");
  CHECK_THROWS_WITH_AS(load_weights_file(path, run.graph, run.store),
                       doctest::Contains("no weight"), ResolutionError);

  auto twice = write_temp("files_weights_twice.txt",
                          "class a1 = 0\nclass a1 = 1\ndefault = 1\n");
  CHECK_THROWS_WITH_AS(load_weights_file(twice, run.graph, run.store),
                       doctest::Contains("assigned twice"), ResolutionError);

  auto badValue = write_temp("files_weights_badvalue.txt",
                             "class a1 = zero\ndefault = 1\n");
  CHECK_THROWS_WITH_AS(load_weights_file(badValue, run.graph, run.store),
                       doctest::Contains("(at position 1)"), ParseError);
}

TEST_CASE("weight files accept negative values") {
  ConstraintStore store;
  auto eq = validate_equation(parse_word("a^-1 t a t"), store);
  auto g = build_star_graph(from_equation(eq, store), store);
  auto path = write_temp("files_weights_negative.txt", "default = -1/2\n");
  WeightAssignment w = load_weights_file(path, g, store);
  CHECK(w.of_class(0) == Rational(-1, 2));
}

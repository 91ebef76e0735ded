#include "aspherika/presentation.hpp"

#include <algorithm>

#include "aspherika/errors.hpp"

namespace aspherika {

std::string pattern_name(PatternKind k) {
  switch (k) {
    case PatternKind::P1: return "P1";
    case PatternKind::P2: return "P2";
    case PatternKind::P3: return "P3";
  }
  return "?";
}

PatternKind pattern_from_name(std::string const& name) {
  if (name == "P1" || name == "p1") return PatternKind::P1;
  if (name == "P2" || name == "p2") return PatternKind::P2;
  if (name == "P3" || name == "p3") return PatternKind::P3;
  throw Error("unknown pattern '" + name + "', expected P1, P2 or P3");
}

int window_start(PatternKind kind, int k) {
  return kind == PatternKind::P1 ? k - 3 : k - 2;
}

std::array<int, 3> window_shape(PatternKind kind) {
  switch (kind) {
    case PatternKind::P1: return {1, -1, 1};
    case PatternKind::P2: return {-1, 1, 1};
    case PatternKind::P3: return {1, 1, -1};
  }
  return {};
}

Word window_word(PatternKind kind, Word const& a, Word const& b) {
  auto shape = window_shape(kind);
  Word w;
  w.push_back(Letter::generator('t', shape[0]));
  w.insert(w.end(), a.begin(), a.end());
  w.push_back(Letter::generator('t', shape[1]));
  w.insert(w.end(), b.begin(), b.end());
  w.push_back(Letter::generator('t', shape[2]));
  return w;
}

namespace {

// Largest admissible anchor k for the given t count, from the k <= ... rows
// of the table in the header.
int max_anchor(PatternKind kind, int n) {
  switch (kind) {
    case PatternKind::P1: return n;
    case PatternKind::P2: return n - 1;
    case PatternKind::P3: return n - 2;
  }
  return 0;
}

bool shape_at(Equation const& eq, PatternKind kind, int start) {
  auto shape = window_shape(kind);
  for (int i = 0; i < 3; ++i)
    if (eq.exp(start + i) != shape[static_cast<std::size_t>(i)]) return false;
  return true;
}

}  // namespace

PatternMatch detect_pattern(Equation const& eq, PatternKind kind, ConstraintStore const& store) {
  int n = eq.n();
  int minStart = 1;
  int maxStart = window_start(kind, max_anchor(kind, n));

  int first = 0;
  for (int s = minStart; s <= maxStart; ++s) {
    if (shape_at(eq, kind, s)) {
      first = s;
      break;
    }
  }
  if (first == 0)
    throw NoMatchError("no " + pattern_name(kind) + " window in the equation");

  PatternMatch match;
  match.kind = kind;
  match.n = n;
  match.a = eq.block(first + 1);
  match.b = eq.block(first + 2);
  match.ks.push_back(first + (kind == PatternKind::P1 ? 3 : 2));

  int s = first + 3;
  while (s <= maxStart && shape_at(eq, kind, s)) {
    int occurrence = match.m() + 1;
    if (!words_equal(eq.block(s + 1), match.a, store) ||
        !words_equal(eq.block(s + 2), match.b, store))
      throw HypothesisError("window " + std::to_string(occurrence) +
                                " repeats the shape with different coefficients",
                            occurrence);
    match.ks.push_back(s + (kind == PatternKind::P1 ? 3 : 2));
    s += 3;
  }

  // Everything outside the windows must be a plain t, except the t^-1 that
  // must close a P3 run.
  int lastStart = window_start(kind, match.ks.back());
  int tail = kind == PatternKind::P3 ? match.ks.back() + 1 : 0;
  for (int i = 1; i <= n; ++i) {
    // The windows occupy the contiguous run [first, lastStart + 2].
    if (i >= first && i <= lastStart + 2) continue;
    if (i == tail) {
      if (eq.exp(i) != -1)
        throw ShapeError("a P3 run must be followed by t^-1 at position " + std::to_string(i));
      continue;
    }
    if (eq.exp(i) != 1)
      throw ShapeError("unexpected exponent -1 outside the matched windows at position " +
                       std::to_string(i));
  }
  return match;
}

Presentation from_equation(Equation const& eq, ConstraintStore const& store) {
  Presentation p;
  p.relators.push_back(cyclic_reduce(eq.word, store));
  return p;
}

namespace {

Word build_walk(Equation const& eq, PatternMatch const& match) {
  std::vector<int> starts;
  for (int k : match.ks) starts.push_back(window_start(match.kind, k));
  Word r1;
  int i = 1;
  auto next = starts.begin();
  while (i <= eq.n()) {
    Word const& blk = eq.block(i);
    r1.insert(r1.end(), blk.begin(), blk.end());
    if (next != starts.end() && *next == i) {
      r1.push_back(Letter::generator('x'));
      ++next;
      i += 3;
    } else {
      r1.push_back(Letter::generator('t', eq.exp(i)));
      i += 1;
    }
  }
  return r1;
}

}  // namespace

Presentation substitute(Equation const& eq, PatternMatch const& match,
                        ConstraintStore const& store) {
  Presentation p;
  Word r2 = window_word(match.kind, match.a, match.b);
  r2.push_back(Letter::generator('x', -1));
  p.relators.push_back(cyclic_reduce(build_walk(eq, match), store));
  p.relators.push_back(cyclic_reduce(r2, store));
  roundtrip_check(eq, match, p, store);
  return p;
}

void roundtrip_check(Equation const& eq, PatternMatch const& match,
                     Presentation const& pres, ConstraintStore const& store) {
  if (pres.relators.size() != 2)
    throw ConsistencyError("substituted presentation must have exactly two relators");
  Word window = window_word(match.kind, match.a, match.b);
  Word expanded;
  for (Letter const& l : pres.relators[0]) {
    if (l.is_generator('x')) {
      Word piece = l.exp == 1 ? window : invert(window);
      expanded.insert(expanded.end(), piece.begin(), piece.end());
    } else {
      expanded.push_back(l);
    }
  }
  if (!cyclically_equivalent(expanded, eq.word, store, false))
    throw ConsistencyError("substitution does not reproduce the equation: expanded " +
                           str(expanded) + " vs " + str(eq.word));
}

}  // namespace aspherika

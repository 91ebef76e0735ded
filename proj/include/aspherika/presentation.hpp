#pragma once

#include <array>
#include <string>
#include <vector>

#include "aspherika/constraints.hpp"
#include "aspherika/equation.hpp"
#include "aspherika/word.hpp"

namespace aspherika {

// The three recognized window shapes.  Each window spans three consecutive
// t positions whose exponents follow the listed signs; a and b name the
// coefficient blocks at the second and third window position.
//
//   P1:  t  a t^-1 b t      window (k-3, k-2, k-1), needs 4 <= k,  k <= n
//   P2:  t^-1 a t  b t      window (k-2, k-1, k),   needs 3 <= k,  k <= n-1
//   P3:  t  a t  b t^-1     window (k-2, k-1, k),   needs 3 <= k,  k <= n-2
//                           and additionally exp(k+1) = -1 after the last
//                           occurrence
enum class PatternKind { P1, P2, P3 };

std::string pattern_name(PatternKind k);
PatternKind pattern_from_name(std::string const& name);

struct PatternMatch {
  PatternKind kind;
  std::vector<int> ks;  // 1-based anchor positions, consecutive entries 3 apart
  Word a, b;            // coefficient blocks of the first occurrence
  int n = 0;            // t count of the matched equation

  int m() const { return static_cast<int>(ks.size()); }
};

// 1-based position of the first t letter of the window anchored at k.
int window_start(PatternKind kind, int k);

// Exponent signs of the three window positions.
std::array<int, 3> window_shape(PatternKind kind);

// The word the new generator x stands for, e.g. t a t^-1 b t for P1.
Word window_word(PatternKind kind, Word const& a, Word const& b);

// Finds all occurrences of the given shape: the leftmost admissible window
// anchors the match, further occurrences must follow at spacing exactly 3
// with equal coefficient blocks (HypothesisError when a shape-matching
// window disagrees), every position outside the windows must carry exponent
// +1 except the mandatory -1 tail after a P3 run (ShapeError otherwise).
// Throws NoMatchError when no admissible window exists.
PatternMatch detect_pattern(Equation const& eq, PatternKind kind, ConstraintStore const& store);

// A presentation relative to G with generators t, x and cyclically reduced
// relators.
struct Presentation {
  std::vector<Word> relators;
};

// The one-relator presentation of the equation itself, generator t only.
Presentation from_equation(Equation const& eq, ConstraintStore const& store);

// Rewrites the equation through x = window_word: r1 is the walk over the
// equation with each window collapsed to x, r2 is window_word x^-1.  The
// result is checked against the equation by re-expanding x (ConsistencyError
// if the relators fail to reproduce it up to rotation).
Presentation substitute(Equation const& eq, PatternMatch const& match,
                        ConstraintStore const& store);

// Re-expands x in r1 and compares against the equation word as cyclic words.
void roundtrip_check(Equation const& eq, PatternMatch const& match,
                     Presentation const& pres, ConstraintStore const& store);

}  // namespace aspherika

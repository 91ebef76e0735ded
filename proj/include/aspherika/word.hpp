#pragma once

#include <string>
#include <vector>

#include "aspherika/constraints.hpp"
#include "aspherika/errors.hpp"

namespace aspherika {

// One letter of a word in <t, x> * G: a generator t or x, a named coefficient
// from G, or the literal identity.  exp is always +1 or -1; the identity only
// ever carries +1.
struct Letter {
  enum class Kind { Generator, Coefficient, Identity };

  Kind kind = Kind::Identity;
  char gen = 0;      // 't' or 'x' when kind == Generator
  std::string name;  // when kind == Coefficient
  int exp = 1;

  static Letter generator(char g, int e = 1) {
    Letter l;
    l.kind = Kind::Generator;
    l.gen = g;
    l.exp = e;
    return l;
  }
  static Letter coefficient(std::string n, int e = 1) {
    Letter l;
    l.kind = Kind::Coefficient;
    l.name = std::move(n);
    l.exp = e;
    return l;
  }
  static Letter identity() { return Letter{}; }

  bool is_generator(char g) const { return kind == Kind::Generator && gen == g; }

  Letter inverse() const {
    Letter l = *this;
    if (l.kind != Kind::Identity) l.exp = -l.exp;
    return l;
  }
};

using Word = std::vector<Letter>;

// Exact letterwise equality, raw names (no constraint lookup).
bool exact_equal(Letter const& a, Letter const& b);
bool exact_equal(Word const& a, Word const& b);

// Do a and b cancel when adjacent, under the store's equalities?
bool cancels(Letter const& a, Letter const& b, ConstraintStore const& store);

// Is l erased by reduction: the identity letter, or a coefficient whose class
// is declared trivial?
bool erasable(Letter const& l, ConstraintStore const& store);

Word invert(Word const& w);
Word concat(Word a, Word const& b);

// Stack reduction: drops erasable letters, cancels adjacent inverse pairs.
Word free_reduce(Word const& w, ConstraintStore const& store);

// Free reduction followed by cancelling first against last until stable.
Word cyclic_reduce(Word const& w, ConstraintStore const& store);

// As cyclic_reduce, and also yields p with w = p . core . p^-1 (as reduced
// words).  p collects the letters stripped off the front.
Word cyclic_reduce_tracked(Word const& w, ConstraintStore const& store, Word* conjugator);

// Reduced-word equality under the store (canonical coefficient names).
bool words_equal(Word const& a, Word const& b, ConstraintStore const& store);

// Equality of cyclic words: some rotation of cyclic_reduce(a) matches
// cyclic_reduce(b); with allow_inversion, the inverse of b is tried too.
bool cyclically_equivalent(Word const& a, Word const& b, ConstraintStore const& store,
                           bool allow_inversion);

std::string str(Letter const& l);
// Space-separated letters; the empty word prints as "1".
std::string str(Word const& w);

// Parses a whitespace-separated word.  Tokens: t, x, 1, or a coefficient
// name [A-Za-z][A-Za-z0-9_]*, each optionally suffixed ^-1 (except 1).
// Positions in errors are 1-based character offsets.
Word parse_word(std::string const& text);

// What the constraint facts say about a coefficient word as an element of G.
struct LabelStatus {
  enum class Kind {
    FreelyTrivial,   // reduces to the empty word, trivial in every G
    NonAdmissible,   // a nonzero power of a declared-nontrivial element:
                     // nontrivial whenever G is torsion free
    Indeterminate,   // triviality depends on G beyond the declared facts
  };

  Kind kind;
  std::string base;  // canonical element, NonAdmissible only
  int power = 0;     // signed exponent, NonAdmissible only
  Word required;     // the reduced word whose triviality is undecided

  bool freely_trivial() const { return kind == Kind::FreelyTrivial; }
  bool non_admissible() const { return kind == Kind::NonAdmissible; }
  bool indeterminate() const { return kind == Kind::Indeterminate; }
};

// Classifies a word of coefficient letters up to conjugacy.  Generator
// letters are rejected with ConsistencyError (labels live in G).
LabelStatus label_status(Word const& w, ConstraintStore const& store);

}  // namespace aspherika

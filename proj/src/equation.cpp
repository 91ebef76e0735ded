#include "aspherika/equation.hpp"

#include "aspherika/errors.hpp"

namespace aspherika {

Equation validate_equation(Word const& w, ConstraintStore& store) {
  if (w.empty()) throw ShapeError("empty equation");

  Equation eq;
  eq.word = w;
  Word current;
  for (Letter const& l : w) {
    switch (l.kind) {
      case Letter::Kind::Generator:
        if (l.gen == 'x')
          throw ShapeError("equations are written over t only; x appears after substitution");
        eq.blocks.push_back(current);
        eq.exps.push_back(l.exp);
        current.clear();
        break;
      case Letter::Kind::Coefficient:
        store.ensure(l.name);
        current.push_back(l);
        break;
      case Letter::Kind::Identity:
        break;  // harmless filler, contributes nothing to the block
    }
  }
  if (!current.empty())
    throw ShapeError("equation must end with a t letter, found trailing coefficients");
  if (eq.exps.empty()) throw ShapeError("equation contains no t letter");

  // Pinch positions: t^e g t^-e forces g != 1, else the equation shortens
  // and the case analysis does not apply.  Cyclic, so the block in front of
  // the first t is pinched by the last exponent against the first.
  int n = eq.n();
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (eq.exps[static_cast<std::size_t>(i)] + eq.exps[static_cast<std::size_t>(j)] != 0)
      continue;
    Word reduced = free_reduce(eq.blocks[static_cast<std::size_t>(j)], store);
    if (reduced.empty())
      throw ShapeError("trivial coefficient pinched between t^" +
                       std::to_string(eq.exps[static_cast<std::size_t>(i)]) + " and t^" +
                       std::to_string(eq.exps[static_cast<std::size_t>(j)]) + " at position " +
                       std::to_string(j + 1));
    if (reduced.size() == 1) store.declare_nontrivial(reduced.front().name);
  }
  return eq;
}

Equation validate_equation(std::string const& text, ConstraintStore& store) {
  return validate_equation(parse_word(text), store);
}

}  // namespace aspherika

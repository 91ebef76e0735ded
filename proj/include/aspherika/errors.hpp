#pragma once

#include <stdexcept>
#include <string>

namespace aspherika {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical problem in an input text.  position is a 1-based
// character offset into the offending text.
struct ParseError : Error {
  ParseError(std::string const& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}

  std::size_t position;
};

// Structural violation: bad alternation, trivial pinch coefficient, relator
// shape, and similar.
struct ShapeError : Error {
  using Error::Error;
};

// Contradictory or ill-formed facts in a constraint store.
struct ConstraintError : Error {
  using Error::Error;
};

// No window of the requested pattern occurs in the equation.
struct NoMatchError : Error {
  using Error::Error;
};

// A window matches the exponent shape but its coefficients disagree with the
// first occurrence.  occurrence is the 1-based ordinal of the bad window.
struct HypothesisError : Error {
  HypothesisError(std::string const& msg, int occurrence)
      : Error(msg), occurrence(occurrence) {}

  int occurrence;
};

// Data passed between pipeline stages does not line up.
struct ConsistencyError : Error {
  using Error::Error;
};

// A weight-class description does not identify exactly one class.
struct ResolutionError : Error {
  using Error::Error;
};

// Cycle enumeration bound rejected or exhausted.
struct BoundError : Error {
  using Error::Error;
};

}  // namespace aspherika

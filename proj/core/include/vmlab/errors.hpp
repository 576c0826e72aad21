#pragma once

#include <stdexcept>
#include <string>

namespace vmlab {

// Error vocabulary shared by all modules. Everything derives from
// std::runtime_error so callers that do not care can catch one type.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown vertex id, malformed parameter, symbol outside the signature.
struct DomainError : Error {
  using Error::Error;
};

// A precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

// A configured cap (order, depth, quantifier rank, ...) was exceeded.
// Never silently truncates: a partial run must not look like an answer.
struct CapacityError : Error {
  using Error::Error;
};

// Input data (files, models, subdivision maps) fails consistency checks.
struct ValidationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, int position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  int pos;
};

struct EvalError : Error {
  using Error::Error;
};

// Local complementation of a non-independent set. The notation G*X is
// considered faulty in that case, so this is a hard error.
struct FaultyComplementation : PreconditionError {
  explicit FaultyComplementation(const std::string& what, int step_index = -1)
      : PreconditionError(what), step(step_index) {}
  int step;  // 0-based step (or relation) index, -1 if not applicable
};

// A postcondition that the construction is supposed to guarantee failed.
// Reported, never swallowed.
struct InternalInvariantError : Error {
  using Error::Error;
};

}  // namespace vmlab

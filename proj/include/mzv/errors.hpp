#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzv {

/// Base class for domain errors of the word algebra. Everything thrown on
/// bad *mathematical* input derives from this; programming errors (overflow,
/// bad sizes) use the std exceptions directly.
struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operand lies outside Q + Hy: some word ends in x, so the harmonic
/// products and the index-translation maps are not defined on it.
struct NotInH1 : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// An operand lies outside Q + xHy, where evaluation and recomposition
/// require convergent words.
struct NotInH0 : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// A composition with k1 = 1 was passed where an admissible one is required.
struct NotAdmissible : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Plain (unregularized) evaluation was requested for a divergent sum.
struct Divergent : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Expression or serialization input that does not match the grammar.
/// `position` is a 0-based byte offset into the offending text.
struct ParseError : AlgebraError {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& message)
      : AlgebraError(message + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace mzv

#ifndef CREDAL_ERRORS_HPP
#define CREDAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace credal {

// Base class for all precondition and domain errors raised by the library.
struct CredalError : std::runtime_error {
  explicit CredalError(const std::string& what) : std::runtime_error(what) {}
};

struct OrderViolation : CredalError {
  using CredalError::CredalError;
};
struct RangeViolation : CredalError {
  using CredalError::CredalError;
};
struct SpaceMismatch : CredalError {
  using CredalError::CredalError;
};
struct DegenerateDenominator : CredalError {
  using CredalError::CredalError;
};
struct PositivityViolation : CredalError {
  using CredalError::CredalError;
};
struct CEViolation : CredalError {
  using CredalError::CredalError;
};
// Raised when a comparison cannot be decided within tracked error bounds.
struct Indeterminate : CredalError {
  using CredalError::CredalError;
};
struct NonConvergence : CredalError {
  using CredalError::CredalError;
};
struct NoUpperBound : CredalError {
  using CredalError::CredalError;
};
struct EmptyAdmissibleSet : CredalError {
  using CredalError::CredalError;
};
struct EmptyRow : CredalError {
  using CredalError::CredalError;
};
struct CoveringViolation : CredalError {
  using CredalError::CredalError;
};
struct Reducible : CredalError {
  using CredalError::CredalError;
};
struct Periodic : CredalError {
  using CredalError::CredalError;
};
struct DegenerateChain : CredalError {
  using CredalError::CredalError;
};
struct AllVerticesDegenerate : CredalError {
  using CredalError::CredalError;
};
struct SchemaMismatch : CredalError {
  using CredalError::CredalError;
};
struct ParseError : CredalError {
  using CredalError::CredalError;
};

}  // namespace credal

#endif  // CREDAL_ERRORS_HPP

#ifndef CELLFORMS_ERRORS_HPP
#define CELLFORMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cellforms {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed polygons, out-of-range n, overlapping shuffle factors,
// evaluation at a pole, inadmissible insertions. The CLI maps these to exit 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

class MalformedPolygonError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivergentInsertionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Randomized exact computations that failed to agree across seeds or charts.
class UnstableError : public Error {
 public:
  using Error::Error;
};

class UnstableRankError : public UnstableError {
 public:
  using UnstableError::UnstableError;
};

// Quadrature did not reach the requested tolerance. CLI exit 3.
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

// Something that a proven theorem rules out happened; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cellforms

#endif  // CELLFORMS_ERRORS_HPP

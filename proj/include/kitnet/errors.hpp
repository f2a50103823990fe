#pragma once

#include <stdexcept>
#include <string>

namespace kitnet {

// Requested Hilbert-space dimension exceeds the configured maximum.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative eigensolver failed to reach tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_norm(residual) {}
  double residual_norm;
};

// Operator does not commute with the symmetry required by the operation.
class SymmetryViolationError : public std::runtime_error {
 public:
  explicit SymmetryViolationError(const std::string& what) : std::runtime_error(what) {}
};

// Density matrix fails trace/hermiticity/positivity checks.
class InvalidStateError : public std::runtime_error {
 public:
  explicit InvalidStateError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter outside the mathematical domain of a closed-form expression.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Operation defined only for one boundary condition.
class UnsupportedBoundaryError : public std::invalid_argument {
 public:
  explicit UnsupportedBoundaryError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace kitnet

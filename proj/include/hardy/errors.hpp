#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hardy {

// Model construction or evaluation was handed a non-normalized state,
// non-orthonormal basis or malformed table.
class InvalidModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A setting pair has no positive-probability outcome (free choice violated).
class InconsistentModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnknownWorldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Base for everything the formula front end can reject.
class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public FormulaError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : FormulaError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SemanticError : public FormulaError {
 public:
  using FormulaError::FormulaError;
};

// `=>` used anywhere but at the root, or passed to a world-level evaluator.
class NestingError : public FormulaError {
 public:
  using FormulaError::FormulaError;
};

}  // namespace hardy

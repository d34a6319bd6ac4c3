#ifndef OSBORN_ERRORS_HPP
#define OSBORN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace osborn {

/// Raised for malformed external input (files, literals, grids).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class RaggedInput : public InputError {
 public:
  using InputError::InputError;
};

/// A row or column of a candidate Cayley table repeats a value.
class NotLatinSquare : public InputError {
 public:
  enum class Axis { row, column };

  NotLatinSquare(Axis axis, std::size_t line, std::size_t value);

  Axis axis() const { return axis_; }
  std::size_t line() const { return line_; }
  std::size_t value() const { return value_; }

 private:
  Axis axis_;
  std::size_t line_;
  std::size_t value_;
};

class NoIdentity : public InputError {
 public:
  NoIdentity() : InputError("table has no two-sided identity element") {}
};

class PointCountMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A supplied generator is not an automorphism of the loop.
class NotAnAutomorphism : public InputError {
 public:
  NotAnAutomorphism(std::size_t index, const std::string& what)
      : InputError(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Base of every "problem too large for the configured limits" error.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchBoundExceeded : public BoundError {
 public:
  SearchBoundExceeded(std::size_t n, std::size_t bound);
};

class ClosureBoundExceeded : public BoundError {
 public:
  using BoundError::BoundError;
};

class BudgetExceeded : public BoundError {
 public:
  BudgetExceeded(std::size_t holomorph_order, std::size_t budget);
  std::size_t holomorph_order() const { return order_; }

 private:
  std::size_t order_;
};

class BoundExceeded : public BoundError {
 public:
  using BoundError::BoundError;
};

/// A nucleus isomorphism (psi, delta, phi, sigma, beta) failed on a concrete loop.
class IsoViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace osborn

#endif  // OSBORN_ERRORS_HPP

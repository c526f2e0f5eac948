#pragma once

#include <stdexcept>
#include <string>

namespace anick {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

/// Rewriting did not terminate within the presentation's step budget.
class StepBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotAChain : public Error {
 public:
  using Error::Error;
};

class NonScalarMatchWeight : public Error {
 public:
  using Error::Error;
};

class MatchingInconsistency : public Error {
 public:
  using Error::Error;
};

class CycleDetected : public Error {
 public:
  using Error::Error;
};

class DepthBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class NegativeDimension : public Error {
 public:
  using Error::Error;
};

}  // namespace anick

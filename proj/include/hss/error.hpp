#pragma once

#include <stdexcept>
#include <string>

namespace hss {

/// Bad input supplied by a caller: malformed files, words, flags.
/// The CLI maps these to exit code 2.
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UserError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UserError(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InadmissibleWord : public UserError {
 public:
  InadmissibleWord(const std::string& what, int condition)
      : UserError(what), condition_(condition) {}
  /// Which admissibility condition failed (1, 2 or 3); 0 for finality/shape errors.
  int condition() const noexcept { return condition_; }

 private:
  int condition_;
};

class ValidationError : public UserError {
 public:
  using UserError::UserError;
};

class DimensionMismatch : public UserError {
 public:
  using UserError::UserError;
};

class BoxTooSmall : public UserError {
 public:
  using UserError::UserError;
};

/// A broken internal invariant. The CLI maps these to exit code 1.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by induced_map when the source subquotient is not carried into the target.
class IllDefinedMap : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace hss

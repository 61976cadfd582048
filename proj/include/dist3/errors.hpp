#pragma once

#include <stdexcept>
#include <string>

namespace dist3 {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text/JSON or a value outside an operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

// Polynomial text that does not conform to the grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Mixing elements of different coefficient fields.
class FieldMismatchError : public InputError {
 public:
  using InputError::InputError;
};

// The configured S-pair reduction budget was exhausted.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// The singular locus has dimension >= 2, so the form does not define a
// distribution (the cokernel would not be torsion-free).
class NotDistributionError : public Error {
 public:
  using Error::Error;
};

}  // namespace dist3

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopftrees {

// Malformed textual input. `offset` is the 0-based character position of the
// first offending symbol.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        message_(what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  // The description without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

// A degree or size bound was exceeded. Raised instead of truncating.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Operation applied outside its domain (B_- of the unit, mismatched algebra
// tags, too few variables for the series oracle, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hopftrees

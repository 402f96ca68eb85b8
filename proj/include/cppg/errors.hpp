#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cppg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group parameters outside the family's valid range.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// A construction or closure would exceed the configured order cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A search or comparison was asked for more than its configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class MalformedScheme : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cppg

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieforge {

// Malformed presentation or element text. line/column are 1-based and 0
// when the error is structural rather than syntactic.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Bad degree or element argument to a query (degree < 1, inhomogeneous
// element, generator out of range, ...).
class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lieforge

#pragma once

#include <stdexcept>
#include <string>

namespace tensalg {

enum class ErrorKind {
  kSideMismatch,
  kDimension,
  kIndexRange,
  kCapExceeded,
  kSelfDualRequired,
  kNotProjected,
  kPrecondition,
  kParse,
  kType,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::kParse, what), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tensalg

#pragma once

#include <stdexcept>
#include <string>

namespace tg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// A transposition the algebra gives no relation for (same-grade swaps,
// the pairs (xi, a) and (xb, ad), undefined convention entries).
struct UndefinedRelation : Error {
  using Error::Error;
};

struct GuardExceeded : Error {
  using Error::Error;
};

struct SingularSystem : Error {
  using Error::Error;
};

struct TypeMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace tg

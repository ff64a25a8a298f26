#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacobi {

// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of incompatible sizes (e.g. a permutation of the wrong length).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive oracle was asked for an instance above its size guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// The input is structurally degenerate: an empty row, no finite
// transversal, an infinite beta. The CLI maps these to exit status 2.
class DegenerateError : public Error {
 public:
  DegenerateError(const std::string& what, std::vector<std::size_t> rows = {},
                  std::vector<std::size_t> columns = {})
      : Error(what), rows_(std::move(rows)), columns_(std::move(columns)) {}

  // 0-based witness rows / columns (Hall violator when applicable).
  const std::vector<std::size_t>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& columns() const noexcept { return columns_; }

 private:
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> columns_;
};

// The attachment process of the resolvent computation cannot progress.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::vector<std::size_t> stuck_rows)
      : Error(what), stuck_rows_(std::move(stuck_rows)) {}

  const std::vector<std::size_t>& stuck_rows() const noexcept { return stuck_rows_; }

 private:
  std::vector<std::size_t> stuck_rows_;
};

// Malformed text input. Line and column are 1-based; line is 0 when the
// input is a single expression.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// A polynomial was evaluated at a point missing one of its variables.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace jacobi

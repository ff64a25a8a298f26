#pragma once

// Recursive-descent parser shared by parse_polynomial and the system reader.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "jacobi/diffpoly.hpp"

namespace jacobi::detail {

// Maps an identifier to its variable index, or nullopt when unknown.
using VariableResolver = std::function<std::optional<std::size_t>(std::string_view)>;

class ExpressionParser {
 public:
  // `line` and `column_offset` only shift reported positions.
  ExpressionParser(std::string_view text, VariableResolver resolve, std::size_t line = 0,
                   std::size_t column_offset = 0)
      : text_(text), resolve_(std::move(resolve)), line_(line), offset_(column_offset) {}

  // Parses the full text as one expression.
  DiffPolynomial parse_all();

  // Parses one expression and stops at the first character that cannot
  // continue it; position() then points at it.
  DiffPolynomial parse_expression();

  std::size_t position() const noexcept { return pos_; }
  void skip_space();
  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const;

 private:
  DiffPolynomial parse_term();
  DiffPolynomial parse_factor();
  DiffPolynomial parse_primary();
  std::string parse_digits();
  std::uint32_t parse_small_integer(const char* what);

  std::string_view text_;
  VariableResolver resolve_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace jacobi::detail

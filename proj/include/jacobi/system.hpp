#pragma once

// Square systems u_1 = 0, ..., u_n = 0 of differential polynomials.
//
// Text format, one equation per line:
//
//   # comment
//   u1: x1'' - x2' = 0
//   u2: x2^(2) = x3        (an equation lhs = rhs stands for lhs - rhs)
//
// The "name:" prefix is optional. Unknowns are the identifiers of the
// expressions, numbered in order of first appearance.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jacobi/diffpoly.hpp"
#include "jacobi/order_matrix.hpp"

namespace jacobi {

struct DiffSystem {
  std::vector<std::string> variables;
  std::vector<std::string> equation_names;
  std::vector<DiffPolynomial> equations;

  std::size_t n() const noexcept { return equations.size(); }
  // Index of a variable given by name or by 1-based number; throws Error.
  std::size_t variable_index(std::string_view name_or_number) const;
};

// Throws ParseError with line/column, or DimensionError when the number of
// equations differs from the number of unknowns.
DiffSystem parse_system(std::string_view text);

// Builds a system from expressions over fixed variable names.
DiffSystem make_system(std::vector<std::string> variables, const std::vector<std::string>& equations);

std::string to_string(const DiffSystem& system);

// a_ij = order of u_i in x_j (−∞ when x_j is absent).
OrderMatrix order_matrix_of(const DiffSystem& system);

}  // namespace jacobi

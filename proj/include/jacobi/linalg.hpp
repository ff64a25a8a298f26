#pragma once

#include <cstddef>
#include <vector>

#include "jacobi/diffpoly.hpp"

namespace jacobi {

// Dense square matrix of exact rationals, row-major.
struct RationalMatrix {
  std::size_t n = 0;
  std::vector<Rational> entries;

  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t size) : n(size), entries(size * size) {}

  Rational& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// The determinant of the 0×0 matrix is 1.
Rational determinant(RationalMatrix m);

// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

}  // namespace jacobi

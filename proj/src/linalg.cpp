#include "jacobi/linalg.hpp"

#include <utility>

namespace jacobi {

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.n;
  if (n == 0) return 1;
  Rational sign = 1, previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(RationalMatrix m) {
  const std::size_t n = m.n;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t p = r;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(r, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace jacobi

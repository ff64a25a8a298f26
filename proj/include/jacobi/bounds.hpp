#pragma once

// Order bounds besides the strong Jacobi number: the weak (absent = 0)
// Jacobi number, Greenspan's bound, the Bézout-dual bound, and the exact
// order of a linear constant-coefficient system, deg det P(λ).

#include <cstddef>
#include <string>
#include <vector>

#include "jacobi/diffpoly.hpp"
#include "jacobi/linalg.hpp"
#include "jacobi/order_matrix.hpp"

namespace jacobi {

// Univariate polynomial with rational coefficients, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  static UniPoly monomial(const Rational& c, std::size_t degree);

  // −∞ for the zero polynomial.
  OrderValue degree() const noexcept;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational evaluate(const Rational& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Square matrix P(λ) of univariate polynomials.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t n() const noexcept { return n_; }
  UniPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const UniPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  // deg P_ij, −∞ for zero entries.
  OrderMatrix degree_matrix() const;

 private:
  std::size_t n_;
  std::vector<UniPoly> entries_;
};

// r_j = max_i a_ij; η_i = min over finite a_ij of (r_j − a_ij);
// G = Σ_j r_j − max_i η_i. Throws DegenerateError on an empty row or column.
OrderValue greenspan(const OrderMatrix& a);

// Σ_i max_j a_ij; −∞ when some row is empty.
OrderValue bezout_dual(const OrderMatrix& a);

// Jacobi number of to_weak(a); always finite.
OrderValue lando_weak_number(const OrderMatrix& a);

inline constexpr std::size_t kLinearOrderMaxN = 8;

// Exact deg det P(λ) by interpolating det P at λ = 0..J, J the Jacobi
// number of the degree matrix; −∞ when det P ≡ 0. Throws SizeGuardError for n > 8.
OrderValue linear_system_order(const PolyMatrix& p);

// Coefficients of λ^(α_i + β_j) in P_ij for the minimal canon of the degree
// matrix; when nonsingular, deg det P equals the Jacobi number.
RationalMatrix leading_coefficient_matrix(const PolyMatrix& p);

struct BoundsReport {
  OrderValue jacobi_strong;
  OrderValue jacobi_weak;
  OrderValue greenspan;
  OrderValue bezout_dual;
  std::vector<std::string> relations;
  // Why a bound is unavailable, one line per missing bound.
  std::vector<std::string> unavailable;
};

BoundsReport bounds_report(const OrderMatrix& a);

}  // namespace jacobi

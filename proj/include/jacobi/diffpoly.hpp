#pragma once

// Differential polynomials with exact rational coefficients.
//
// Indeterminates are derivatives x_j^(k) of the unknowns; each is treated as
// an independent variable by partial_derivative, while total_derivative
// applies d/dt with d/dt x_j^(k) = x_j^(k+1).

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jacobi/order_matrix.hpp"

namespace jacobi {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// x_var^(order); var is 0-based.
struct DerivativeVar {
  std::size_t var = 0;
  std::uint32_t order = 0;

  friend auto operator<=>(const DerivativeVar&, const DerivativeVar&) = default;
};

// Sorted product of powers; exponents are positive.
using Monomial = std::vector<std::pair<DerivativeVar, std::uint32_t>>;

using Point = std::map<DerivativeVar, Rational>;

class DiffPolynomial {
 public:
  DiffPolynomial() = default;  // zero

  static DiffPolynomial constant(const Rational& c);
  static DiffPolynomial variable(DerivativeVar v, std::uint32_t power = 1);
  static DiffPolynomial term(const Rational& c, Monomial m);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant term (0 when absent).
  Rational constant_term() const;
  // Coefficient of an exact monomial (0 when absent).
  Rational coefficient(const Monomial& m) const;
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  std::set<DerivativeVar> variables() const;
  // Throws EvaluationError when the point misses a variable.
  Rational evaluate(const Point& point) const;

  DiffPolynomial& operator+=(const DiffPolynomial& other);
  DiffPolynomial& operator-=(const DiffPolynomial& other);
  DiffPolynomial& operator*=(const Rational& c);
  friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { return a += b; }
  friend DiffPolynomial operator-(DiffPolynomial a, const DiffPolynomial& b) { return a -= b; }
  friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b);
  friend DiffPolynomial operator*(DiffPolynomial a, const Rational& c) { return a *= c; }
  DiffPolynomial operator-() const;
  DiffPolynomial pow(std::uint32_t k) const;

  friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

Monomial multiply(const Monomial& a, const Monomial& b);

// d/dt by the Leibniz rule.
DiffPolynomial total_derivative(const DiffPolynomial& p);
DiffPolynomial total_derivative(const DiffPolynomial& p, std::uint32_t times);

// ∂p/∂v, every derivative an independent indeterminate.
DiffPolynomial partial_derivative(const DiffPolynomial& p, DerivativeVar v);

// Highest k with x_var^(k) in p; −∞ when x_var is absent.
OrderValue order_in(const DiffPolynomial& p, std::size_t var);

// Expression grammar:
//   expr       := ['+'|'-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := primary ('^' integer)*
//   primary    := rational | derivative | '(' expr ')'
//   rational   := integer ['/' integer]
//   derivative := ident "'"* | ident '^(' integer ')'
// Throws ParseError (column is 1-based) on malformed text or an unknown name.
DiffPolynomial parse_polynomial(std::string_view text, std::span<const std::string> variables);

// Inverse of parse_polynomial: parse_polynomial(to_string(p, v), v) == p.
std::string to_string(const DiffPolynomial& p, std::span<const std::string> variables);
std::string to_string(DerivativeVar d, std::span<const std::string> variables);

}  // namespace jacobi

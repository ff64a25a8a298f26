#include "jacobi/bounds.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "jacobi/canon.hpp"
#include "jacobi/error.hpp"
#include "jacobi/linalg.hpp"

namespace jacobi {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

OrderValue UniPoly::degree() const noexcept {
  if (coeffs_.empty()) return kNegInf;
  return static_cast<std::int64_t>(coeffs_.size() - 1);
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(k) + b.coefficient(k);
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t x = 0; x < a.coeffs_.size(); ++x)
    for (std::size_t y = 0; y < b.coeffs_.size(); ++y) v[x + y] += a.coeffs_[x] * b.coeffs_[y];
  return UniPoly(std::move(v));
}

OrderMatrix PolyMatrix::degree_matrix() const {
  OrderMatrix d(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) d.set(i, j, (*this)(i, j).degree());
  return d;
}

OrderValue greenspan(const OrderMatrix& a) {
  const std::size_t n = a.n();
  std::vector<std::int64_t> r(n);
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const OrderValue m = a.column_max(j);
    if (m.is_neg_infinity()) throw DegenerateError("column " + std::to_string(j + 1) + " has no finite entry", {}, {j});
    r[j] = m.value();
    sum += r[j];
  }
  std::int64_t max_eta = std::numeric_limits<std::int64_t>::min();
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t eta = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_finite()) eta = std::min(eta, r[j] - a(i, j).value());
    if (eta == std::numeric_limits<std::int64_t>::max()) {
      throw DegenerateError("row " + std::to_string(i + 1) + " has no finite entry", {i});
    }
    max_eta = std::max(max_eta, eta);
  }
  return sum - max_eta;
}

OrderValue bezout_dual(const OrderMatrix& a) {
  OrderValue sum = 0;
  for (std::size_t i = 0; i < a.n(); ++i) sum += a.row_max(i);
  return sum;
}

OrderValue lando_weak_number(const OrderMatrix& a) { return minimal_canon(to_weak(a)).jacobi_number; }

OrderValue linear_system_order(const PolyMatrix& p) {
  const std::size_t n = p.n();
  if (n > kLinearOrderMaxN) throw SizeGuardError("linear system order is limited to n <= 8");
  const OrderValue bound = jacobi_number(p.degree_matrix());
  if (bound.is_neg_infinity()) return kNegInf;
  const std::int64_t J = bound.value();

  // det P(x) at x = 0..J, then Newton divided differences in place; the
  // degree is the index of the last nonzero Newton coefficient.
  std::vector<Rational> c(static_cast<std::size_t>(J) + 1);
  for (std::int64_t x = 0; x <= J; ++x) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = p(i, j).evaluate(Rational(x));
    c[static_cast<std::size_t>(x)] = determinant(std::move(m));
  }
  for (std::size_t level = 1; level < c.size(); ++level)
    for (std::size_t k = c.size() - 1; k >= level; --k) c[k] = (c[k] - c[k - 1]) / Rational(static_cast<long>(level));

  for (std::size_t k = c.size(); k-- > 0;)
    if (c[k] != 0) return static_cast<std::int64_t>(k);
  return kNegInf;
}

RationalMatrix leading_coefficient_matrix(const PolyMatrix& p) {
  const CanonResult canon = minimal_canon(p.degree_matrix());
  RationalMatrix m(p.n());
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = 0; j < p.n(); ++j) {
      const std::int64_t k = canon.alpha[i] + canon.beta[j].value();
      if (k >= 0) m(i, j) = p(i, j).coefficient(static_cast<std::size_t>(k));
    }
  return m;
}

BoundsReport bounds_report(const OrderMatrix& a) {
  BoundsReport report;
  const FiniteMatching matching = finite_matching(a);
  if (matching.perfect()) {
    report.jacobi_strong = minimal_canon(a).jacobi_number;
  } else {
    report.unavailable.push_back("jacobiStrong: no finite transversal");
  }
  report.jacobi_weak = lando_weak_number(a);
  try {
    report.greenspan = greenspan(a);
  } catch (const DegenerateError& e) {
    report.unavailable.push_back(std::string("greenspan: ") + e.what());
  }
  report.bezout_dual = bezout_dual(a);
  if (report.bezout_dual.is_neg_infinity()) report.unavailable.push_back("bezoutDual: a row has no finite entry");

  const std::array<std::pair<const char*, OrderValue>, 4> named{{{"jacobiStrong", report.jacobi_strong},
                                                                  {"jacobiWeak", report.jacobi_weak},
                                                                  {"greenspan", report.greenspan},
                                                                  {"bezoutDual", report.bezout_dual}}};
  for (std::size_t x = 0; x < named.size(); ++x) {
    for (std::size_t y = x + 1; y < named.size(); ++y) {
      const auto& [nx, vx] = named[x];
      const auto& [ny, vy] = named[y];
      if (vx.is_neg_infinity() || vy.is_neg_infinity()) continue;
      const char* op = vx < vy ? " < " : (vx == vy ? " = " : " > ");
      report.relations.push_back(std::string(nx) + op + ny);
    }
  }
  return report;
}

}  // namespace jacobi

#include <algorithm>
#include <random>

#include "doctest.h"
#include "jacobi/bounds.hpp"
#include "jacobi/canon.hpp"
#include "jacobi/error.hpp"
#include "oracles.hpp"

using namespace jacobi;
namespace jt = jacobi::testing;

namespace {

const OrderValue X = kNegInf;

OrderMatrix golden_matrix() { return OrderMatrix::from_rows({{2, 1, X}, {X, 2, 0}, {X, 0, 1}}); }

UniPoly poly(std::initializer_list<int> coefficients) {
  std::vector<Rational> c;
  for (int x : coefficients) c.emplace_back(x);
  return UniPoly(c);
}

OrderMatrix permuted(const OrderMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  OrderMatrix out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out.set(i, j, a(rows[i], cols[j]));
  return out;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("univariate polynomials") {
    CHECK(poly({}).degree() == kNegInf);
    CHECK(poly({1, 0, 0}).degree() == OrderValue(0));
    CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
    CHECK((poly({0, 2}) + poly({0, -2})) == poly({}));
    CHECK(poly({1, 2, 3}).evaluate(2) == 17);
  }

  TEST_CASE("Greenspan") {
    CHECK(greenspan(golden_matrix()) == OrderValue(5));
    const auto gap = OrderMatrix::from_rows({{2, 1, 1}, {1, 0, 0}, {1, 0, 0}});
    CHECK(greenspan(gap) == OrderValue(3));
    CHECK(jacobi_number(gap) == OrderValue(2));
    CHECK(greenspan(OrderMatrix::from_rows({{7}})) == OrderValue(7));
    CHECK_THROWS_AS(greenspan(OrderMatrix::from_rows({{1, X}, {2, X}})), DegenerateError);
  }

  TEST_CASE("Bezout dual and weak number") {
    CHECK(bezout_dual(golden_matrix()) == OrderValue(5));
    CHECK(bezout_dual(OrderMatrix::from_rows({{2, 2, 2}, {X, 1, X}, {X, 0, 0}})) == OrderValue(3));
    CHECK(bezout_dual(OrderMatrix(3, 0)) == OrderValue(0));
    CHECK(lando_weak_number(golden_matrix()) == OrderValue(5));
    const auto lone = OrderMatrix::from_rows({{1, X}, {X, X}});
    CHECK(lando_weak_number(lone) == OrderValue(1));
    CHECK(jacobi_number(lone) == kNegInf);
  }

  TEST_CASE("linear system order") {
    PolyMatrix p(3);
    p(0, 0) = poly({0, 0, 1});
    p(0, 1) = poly({0, -1});
    p(1, 1) = poly({0, 0, 1});
    p(1, 2) = poly({-1});
    p(2, 1) = poly({-1});
    p(2, 2) = poly({0, 1});
    CHECK(p.degree_matrix() == golden_matrix());
    CHECK(linear_system_order(p) == OrderValue(5));

    PolyMatrix diag(3);
    diag(0, 0) = UniPoly::monomial(2, 1);
    diag(1, 1) = UniPoly::monomial(1, 4);
    diag(2, 2) = UniPoly::monomial(-5, 0);
    CHECK(linear_system_order(diag) == OrderValue(5));

    PolyMatrix rank_one(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) rank_one(i, j) = poly({0, 1});
    CHECK(linear_system_order(rank_one) == kNegInf);
    CHECK(jacobi_number(rank_one.degree_matrix()) == OrderValue(2));

    CHECK_THROWS_AS(linear_system_order(PolyMatrix(9)), SizeGuardError);
  }

  TEST_CASE("random polynomial matrices") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> deg(0, 4);
    std::bernoulli_distribution zero(0.25);
    for (int t = 0; t < 120; ++t) {
      const std::size_t n = 1 + t % 5;
      PolyMatrix p(n);
      std::vector<std::vector<UniPoly>> rows(n, std::vector<UniPoly>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (zero(rng)) continue;
          std::vector<Rational> c(deg(rng) + 1);
          for (auto& x : c) x = coeff(rng);
          p(i, j) = rows[i][j] = UniPoly(c);
        }
      const OrderValue order = linear_system_order(p);
      CHECK(order == jt::laplace_determinant(rows).degree());
      const OrderValue j = jacobi_number(p.degree_matrix());
      CHECK(order <= j);
      if (j.is_finite() && determinant(leading_coefficient_matrix(p)) != 0) CHECK(order == j);
    }
  }

  TEST_CASE("two-variable coincidence and permutation invariance") {
    std::mt19937_64 rng(62);
    for (int t = 0; t < 300; ++t) {
      const auto a2 = jt::matrix_of(jt::random_grid(rng, 2, 9, 0.0));
      CHECK(greenspan(a2) == jacobi_number(a2));

      const std::size_t n = 2 + t % 4;
      const auto a = jt::matrix_of(jt::random_grid(rng, n, 6, 0.0));
      std::vector<std::size_t> r(n), c(n);
      for (std::size_t k = 0; k < n; ++k) r[k] = c[k] = k;
      std::shuffle(r.begin(), r.end(), rng);
      std::shuffle(c.begin(), c.end(), rng);
      const auto b = permuted(a, r, c);
      CHECK(greenspan(a) == greenspan(b));
      CHECK(bezout_dual(a) == bezout_dual(b));
    }
  }

  TEST_CASE("reports") {
    auto r = bounds_report(golden_matrix());
    CHECK(r.jacobi_strong == OrderValue(5));
    CHECK(r.jacobi_weak == OrderValue(5));
    CHECK(r.greenspan == OrderValue(5));
    CHECK(r.bezout_dual == OrderValue(5));
    CHECK(r.relations.size() == 6);

    r = bounds_report(OrderMatrix::from_rows({{2, 1, 1}, {1, 0, 0}, {1, 0, 0}}));
    CHECK(std::find(r.relations.begin(), r.relations.end(), "jacobiStrong < greenspan") != r.relations.end());

    r = bounds_report(OrderMatrix::from_rows({{0}}));
    CHECK(r.jacobi_strong == OrderValue(0));
    CHECK(r.greenspan == OrderValue(0));

    r = bounds_report(OrderMatrix::from_rows({{1, X}, {X, X}}));
    CHECK(r.jacobi_strong == kNegInf);
    CHECK(r.jacobi_weak == OrderValue(1));
    CHECK(r.greenspan == kNegInf);
    CHECK_FALSE(r.unavailable.empty());

    std::mt19937_64 rng(63);
    for (int t = 0; t < 100; ++t) {
      const auto a = jt::matrix_of(jt::random_grid(rng, 2 + t % 5, 5, 0.3));
      const auto rep = bounds_report(a);
      CHECK(rep.jacobi_strong <= rep.jacobi_weak);
    }
  }
}

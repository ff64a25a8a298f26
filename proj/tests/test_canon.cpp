#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "jacobi/canon.hpp"
#include "jacobi/error.hpp"
#include "oracles.hpp"

using namespace jacobi;
namespace jt = jacobi::testing;

namespace {

const OrderValue X = kNegInf;

OrderMatrix golden_matrix() { return OrderMatrix::from_rows({{2, 1, X}, {X, 2, 0}, {X, 0, 1}}); }
OrderMatrix second_system() { return OrderMatrix::from_rows({{2, 2, 2}, {X, 1, X}, {X, 0, 0}}); }

void check_result_invariants(const OrderMatrix& a, const CanonResult& c) {
  const std::size_t n = a.n();
  REQUIRE(c.n() == n);
  CHECK(c.Lambda == *std::max_element(c.ell.begin(), c.ell.end()));
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(c.ell[i] >= 0);
    CHECK(c.alpha[i] + c.ell[i] == c.Lambda);
  }

  const OrderMatrix raised = a.raised(c.ell);
  std::set<std::size_t> rows, cols;
  OrderValue star_sum = 0;
  for (const auto& [r, col] : c.starred) {
    rows.insert(r);
    cols.insert(col);
    CHECK(raised(r, col).is_finite());
    CHECK(raised(r, col) == raised.column_max(col));
    star_sum += a(r, col);
  }
  CHECK(rows.size() == n);
  CHECK(cols.size() == n);
  CHECK(star_sum == c.jacobi_number);

  OrderValue total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    OrderValue beta = kNegInf;
    for (std::size_t i = 0; i < n; ++i) beta = std::max(beta, a(i, j) + OrderValue(-c.alpha[i]));
    CHECK(beta == c.beta[j]);
    total += beta;
  }
  for (std::int64_t x : c.alpha) total += OrderValue(x);
  CHECK(total == c.jacobi_number);
}

}  // namespace

TEST_SUITE("canon") {
  TEST_CASE("preparation pass") {
    auto p = prepare(golden_matrix());
    CHECK(p.increments == std::vector<std::int64_t>{0, 0, 0});
    CHECK(p.matrix == golden_matrix());

    p = prepare(second_system());
    CHECK(p.increments == std::vector<std::int64_t>{0, 1, 2});
    CHECK(p.matrix == OrderMatrix::from_rows({{2, 2, 2}, {X, 2, X}, {X, 2, 2}}));

    p = prepare(OrderMatrix(4, 0));
    CHECK(p.increments == std::vector<std::int64_t>(4, 0));

    CHECK_THROWS_AS(prepare(OrderMatrix::from_rows({{1, 0}, {X, X}})), DegenerateError);
  }

  TEST_CASE("is_canon") {
    const std::vector<std::int64_t> zero{0, 0, 0}, ell{0, 1, 2};
    CHECK(is_canon(golden_matrix(), zero));
    CHECK(is_canon(second_system(), ell));
    CHECK_FALSE(is_canon(second_system(), zero));
  }

  TEST_CASE("golden minimal canons") {
    auto c = minimal_canon(golden_matrix());
    CHECK(c.ell == std::vector<std::int64_t>{0, 0, 0});
    CHECK(c.Lambda == 0);
    CHECK(c.alpha == std::vector<std::int64_t>{0, 0, 0});
    CHECK(c.beta == std::vector<OrderValue>{2, 2, 1});
    CHECK(c.jacobi_number == OrderValue(5));
    check_result_invariants(golden_matrix(), c);

    c = minimal_canon(second_system());
    CHECK(c.ell == std::vector<std::int64_t>{0, 1, 2});
    CHECK(c.alpha == std::vector<std::int64_t>{2, 1, 0});
    CHECK(c.beta == std::vector<OrderValue>{0, 0, 0});
    CHECK(c.jacobi_number == OrderValue(3));

    const std::vector<std::int64_t> e{1, 2};
    c = minimal_canon(isoperimetric_matrix(e));
    CHECK(c.ell == std::vector<std::int64_t>{1, 0});
    CHECK(c.jacobi_number == OrderValue(6));
  }

  TEST_CASE("starred positions break ties deterministically") {
    const auto c = minimal_canon(OrderMatrix(3, 0));
    CHECK(c.starred == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}, {2, 2}});
    CHECK(c.starred_row(2) == 2);
    CHECK(c.starred_column(1) == 1);
  }

  TEST_CASE("no finite transversal") {
    const auto a = OrderMatrix::from_rows({{1, 0, X}, {X, X, X}, {0, 1, 2}});
    try {
      minimal_canon(a);
      FAIL("expected DegenerateError");
    } catch (const DegenerateError& e) {
      CHECK(std::string(e.what()) == "no finite transversal: rows {2} match only columns {}");
      CHECK(e.rows() == std::vector<std::size_t>{1});
    }
    CHECK(jacobi_number(OrderMatrix::from_rows({{0, X}, {0, X}})) == kNegInf);
  }

  TEST_CASE("brute-force canon search") {
    CHECK(brute_force_minimal_canon(golden_matrix(), 3) == std::vector<std::int64_t>{0, 0, 0});
    CHECK(brute_force_minimal_canon(second_system(), 4) == std::vector<std::int64_t>{0, 1, 2});
    CHECK(brute_force_minimal_canon(OrderMatrix::from_rows({{0}}), 0) == std::vector<std::int64_t>{0});
    CHECK_THROWS_AS(brute_force_minimal_canon(OrderMatrix(5, 0), 1), SizeGuardError);
    CHECK_THROWS_AS(brute_force_minimal_canon(golden_matrix(), 7), SizeGuardError);
    CHECK_THROWS_AS(brute_force_minimal_canon(second_system(), 1), Error);
  }

  TEST_CASE("trace replay and class partition") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 2 + t % 6;
      const auto a = jt::matrix_of(jt::random_feasible_grid(rng, n, 6, 0.3));
      const auto c = minimal_canon(a, {.record_trace = true});
      REQUIRE_FALSE(c.trace.empty());
      CHECK(c.trace.front().kind == TraceKind::Preparation);
      std::vector<std::int64_t> total(n, 0);
      for (const auto& step : c.trace) {
        REQUIRE(step.row_increments.size() == n);
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(step.row_increments[i] >= 0);
          total[i] += step.row_increments[i];
        }
        if (step.kind == TraceKind::RaiseThirdClass) {
          CHECK(std::any_of(step.row_increments.begin(), step.row_increments.end(), [](auto x) { return x > 0; }));
          REQUIRE(step.classes.has_value());
          for (std::size_t i = 0; i < n; ++i)
            if (step.row_increments[i] > 0) {
              const RowClass k = (*step.classes)[i];
              CHECK((k == RowClass::Third || k == RowClass::Lower));
            }
        }
      }
      CHECK(a.raised(total) == a.raised(c.ell));
      CHECK(minimal_canon(a).trace.empty());
    }
  }

  TEST_CASE("random instances: oracle, canon, idempotence") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 400; ++t) {
      const std::size_t n = 2 + t % 6;
      const auto g = jt::random_feasible_grid(rng, n, 5, 0.33);
      const auto a = jt::matrix_of(g);
      const auto c = minimal_canon(a);
      check_result_invariants(a, c);
      CHECK(c.jacobi_number == OrderValue(*jt::subset_dp_max_transversal(g)));
      CHECK(is_canon(a, c.ell));
      CHECK(jt::canon_by_definition(g, c.ell));
      const auto again = minimal_canon(a.raised(c.ell));
      CHECK(again.ell == std::vector<std::int64_t>(n, 0));
    }
  }

  TEST_CASE("componentwise minimality against exhaustive search") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 150; ++t) {
      const std::size_t n = 2 + t % 3;
      const auto g = jt::random_feasible_grid(rng, n, 4, 0.25);
      const auto c = minimal_canon(jt::matrix_of(g));
      for (const auto& lambda : jt::all_canons(g, c.Lambda + 2))
        for (std::size_t i = 0; i < n; ++i) CHECK(c.ell[i] <= lambda[i]);
    }
  }

  TEST_CASE("large dense instances agree with the trace-free path") {
    std::mt19937_64 rng(24);
    const auto a = jt::matrix_of(jt::random_grid(rng, 60, 1000, 0.0));
    const auto plain = minimal_canon(a);
    const auto traced = minimal_canon(a, {.record_trace = true});
    CHECK(plain.ell == traced.ell);
    CHECK(plain.jacobi_number == traced.jacobi_number);
    check_result_invariants(a, plain);
  }
}

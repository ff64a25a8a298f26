#include <numeric>
#include <random>

#include "doctest.h"
#include "jacobi/error.hpp"
#include "jacobi/resolvent.hpp"
#include "oracles.hpp"

using namespace jacobi;
namespace jt = jacobi::testing;

namespace {

const OrderValue X = kNegInf;

OrderMatrix golden_matrix() { return OrderMatrix::from_rows({{2, 1, X}, {X, 2, 0}, {X, 0, 1}}); }

}  // namespace

TEST_SUITE("resolvent") {
  TEST_CASE("attachment process on the golden system") {
    const auto a = golden_matrix();
    const auto plan = resolvent_orders(a, minimal_canon(a), 0);
    CHECK(plan.i0 == 0);
    CHECK(plan.h == std::vector<std::int64_t>{3, 2, 1});
    CHECK(plan.a_double_prime == OrderMatrix::from_rows({{4, 3, X}, {X, 3, 1}, {X, 0, 1}}));
    CHECK(plan.a_triple_prime == OrderMatrix::from_rows({{5, 4, X}, {X, 4, 2}, {X, 1, 2}}));
    CHECK(plan.resolvent_order == OrderValue(5));
  }

  TEST_CASE("minor transversal sums on the golden system") {
    const auto h = forma_elegans_orders(golden_matrix(), 0);
    CHECK(h == std::vector<OrderValue>{3, 2, 1});
  }

  TEST_CASE("single equation") {
    const auto a = OrderMatrix::from_rows({{4}});
    CHECK(resolvent_orders(a, minimal_canon(a), 0).h == std::vector<std::int64_t>{0});
    CHECK(forma_elegans_orders(a, 0) == std::vector<OrderValue>{0});
  }

  TEST_CASE("infeasible columns and stalls") {
    const auto a = golden_matrix();
    // Neither x2 nor x3 can serve as primitive element of the golden system.
    for (std::size_t j0 : {1, 2}) {
      try {
        resolvent_orders(a, minimal_canon(a), j0);
        FAIL("expected InfeasibleError");
      } catch (const InfeasibleError& e) {
        CHECK(e.stuck_rows() == std::vector<std::size_t>{0});
      }
    }

    const auto split = OrderMatrix::from_rows({{1, X}, {X, 1}});
    CHECK_THROWS_AS(resolvent_orders(split, minimal_canon(split), 0), InfeasibleError);
    try {
      resolvent_orders(split, minimal_canon(split), 0);
    } catch (const InfeasibleError& e) {
      CHECK(e.stuck_rows() == std::vector<std::size_t>{1});
    }
    CHECK(forma_elegans_orders(split, 0) == std::vector<OrderValue>{1, kNegInf});
  }

  TEST_CASE("random all-finite matrices: cross-oracle and caps") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 2 + t % 5;
      const auto g = jt::random_grid(rng, n, 6, 0.0);
      const auto a = jt::matrix_of(g);
      const auto canon = minimal_canon(a);
      const std::int64_t j = canon.jacobi_number.value();
      std::int64_t sum_e = 0;
      for (std::size_t i = 0; i < n; ++i) sum_e += a.row_max(i).value();

      for (std::size_t j0 = 0; j0 < n; ++j0) {
        const auto plan = resolvent_orders(a, canon, j0);
        const auto minors = forma_elegans_orders(a, j0);
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(OrderValue(plan.h[i]) == minors[i]);
          CHECK(plan.h[i] == *jt::subset_dp_max_transversal(jt::minor_of(g, i, j0)));
          CHECK(plan.h[i] <= j - a(plan.i0, j0).value() + canon.ell[i] - canon.ell[plan.i0]);
        }
        CHECK(plan.h[plan.i0] == j - a(plan.i0, j0).value());
        CHECK(std::accumulate(plan.h.begin(), plan.h.end(), std::int64_t{0}) <=
              static_cast<std::int64_t>(n - 1) * sum_e);
        CHECK(plan.a_triple_prime == a.raised(plan.h));
        CHECK(plan.a_triple_prime(plan.i0, j0) == plan.resolvent_order);
      }
    }
  }
}

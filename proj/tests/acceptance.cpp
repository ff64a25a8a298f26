// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jacobi/bounds.hpp"
#include "jacobi/canon.hpp"
#include "jacobi/diffpoly.hpp"
#include "jacobi/fixtures.hpp"
#include "jacobi/jacobian.hpp"
#include "jacobi/reduction.hpp"
#include "jacobi/resolvent.hpp"
#include "jacobi/system.hpp"
#include "oracles.hpp"

using namespace jacobi;
namespace jt = jacobi::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass;
  std::string detail;
};

const OrderValue X = kNegInf;

Verdict golden_example() {
  const auto start = Clock::now();
  const auto a = OrderMatrix::from_rows({{2, 1, X}, {X, 2, 0}, {X, 0, 1}});
  const auto canon = minimal_canon(a);
  const auto plan = resolvent_orders(a, canon, 0);
  const double t = seconds_since(start);
  const bool ok = canon.jacobi_number == OrderValue(5) && canon.ell == std::vector<std::int64_t>{0, 0, 0} &&
                  canon.beta == std::vector<OrderValue>{2, 2, 1} && plan.h == std::vector<std::int64_t>{3, 2, 1} &&
                  plan.a_double_prime == OrderMatrix::from_rows({{4, 3, X}, {X, 3, 1}, {X, 0, 1}}) &&
                  plan.a_triple_prime == OrderMatrix::from_rows({{5, 4, X}, {X, 4, 2}, {X, 1, 2}});
  char buf[96];
  std::snprintf(buf, sizeof buf, "J=5, ell=(0,0,0), beta=(2,2,1), h=(3,2,1); %.4f s", t);
  return {ok && t < 1.0, buf};
}

Verdict permutation_oracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(0x0a11);
  std::uniform_int_distribution<std::size_t> size(2, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0 / 3.0);
  int mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = size(rng);
    const auto a = jt::matrix_of(jt::random_feasible_grid(rng, n, 5, density(rng)));
    if (minimal_canon(a).jacobi_number != brute_force_jacobi_number(a)) ++mismatches;
  }
  const double t = seconds_since(start);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d/1000 mismatches; %.2f s", mismatches, t);
  return {mismatches == 0 && t < 60.0, buf};
}

Verdict minimality() {
  std::mt19937_64 rng(0x0a12);
  std::uniform_int_distribution<std::size_t> size(2, 4);
  int violations = 0;
  std::size_t canons_seen = 0;
  for (int t = 0; t < 500; ++t) {
    const auto g = jt::random_feasible_grid(rng, size(rng), 5, 0.25);
    const auto c = minimal_canon(jt::matrix_of(g));
    if (!jt::canon_by_definition(g, c.ell)) ++violations;
    for (const auto& lambda : jt::all_canons(g, c.Lambda + 2)) {
      ++canons_seen;
      for (std::size_t i = 0; i < lambda.size(); ++i)
        if (c.ell[i] > lambda[i]) {
          ++violations;
          break;
        }
    }
  }
  return {violations == 0,
          std::to_string(violations) + " violations over " + std::to_string(canons_seen) + " canons enumerated"};
}

Verdict forma_elegans() {
  std::mt19937_64 rng(0x0a13);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  int violations = 0, columns = 0;
  for (int t = 0; t < 500; ++t) {
    const auto g = jt::random_grid(rng, size(rng), 6, 0.0);
    const auto a = jt::matrix_of(g);
    const auto canon = minimal_canon(a);
    for (std::size_t j0 = 0; j0 < a.n(); ++j0, ++columns) {
      const auto h = resolvent_orders(a, canon, j0).h;
      for (std::size_t i = 0; i < a.n(); ++i) {
        const auto minor = jt::subset_dp_max_transversal(jt::minor_of(g, i, j0));
        if (!minor || *minor != h[i]) {
          ++violations;
          break;
        }
      }
    }
  }
  return {violations == 0, std::to_string(violations) + " violations over " + std::to_string(columns) + " columns"};
}

Verdict second_system() {
  const auto sys = parse_system(find_fixture("two_normal_forms.txt")->content);
  const auto canon = minimal_canon(order_matrix_of(sys));
  const auto grid = truncated_jacobian(sys, canon);
  const Rational det = determinant_at(grid, {});
  const auto plan = shortest_reduction_plan(sys, canon);
  const auto eqs = prolonged_equations(sys, plan.prolongation);

  bool normal_forms = true;
  for (const char* normal : {"x1'' + x2'' + x3''", "x2'", "x3 + x2"})
    normal_forms = normal_forms && jt::in_span(eqs, parse_polynomial(normal, sys.variables));
  const bool solvable = check_nonvanishing(solved_set_jacobian(sys, plan)).kind ==
                        JacobianStatus::Kind::NonzeroWitnessed;
  const bool ok = canon.ell == std::vector<std::int64_t>{0, 1, 2} && canon.jacobi_number == OrderValue(3) &&
                  det == 1 && plan.ell == std::vector<std::int64_t>{0, 1, 2} && eqs.size() == 6 && normal_forms &&
                  solvable;
  return {ok, "ell=(0,1,2), J=3, det=" + det.get_str() + ", u2 x1 and u3 x2, normal form in span: " +
                  (normal_forms ? "yes" : "no")};
}

Verdict golden_jacobian() {
  const auto sys = parse_system(find_fixture("jacobi_example.txt")->content);
  const auto grid = truncated_jacobian(sys, minimal_canon(order_matrix_of(sys)));
  bool identity = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) identity = identity && grid[i][j] == DiffPolynomial::constant(i == j ? 1 : 0);
  const std::vector<Point> points{
      {},
      {{{0, 2}, Rational(3)}, {{1, 1}, Rational(-7)}, {{2, 0}, Rational(1, 2)}},
      {{{0, 0}, Rational(11)}, {{1, 2}, Rational(5, 3)}, {{2, 1}, Rational(-2)}},
  };
  int ones = 0;
  for (const auto& p : points) ones += determinant_at(grid, p) == 1;
  return {identity && ones == 3, std::string("identity grid: ") + (identity ? "yes" : "no") + ", det = 1 at " +
                                     std::to_string(ones) + "/3 points"};
}

Verdict determinant_degree() {
  PolyMatrix p(3);
  p(0, 0) = UniPoly::monomial(1, 2);
  p(0, 1) = UniPoly::monomial(-1, 1);
  p(1, 1) = UniPoly::monomial(1, 2);
  p(1, 2) = UniPoly::monomial(-1, 0);
  p(2, 1) = UniPoly::monomial(-1, 0);
  p(2, 2) = UniPoly::monomial(1, 1);
  const OrderValue golden = linear_system_order(p);

  std::mt19937_64 rng(0x0a17);
  std::uniform_int_distribution<std::size_t> size(1, 5), deg(0, 4);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::bernoulli_distribution zero(0.3);
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = size(rng);
    PolyMatrix m(n);
    std::vector<std::vector<UniPoly>> rows(n, std::vector<UniPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (zero(rng)) continue;
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& x : c) x = coeff(rng);
        m(i, j) = rows[i][j] = UniPoly(c);
      }
    const OrderValue order = linear_system_order(m);
    if (order != jt::laplace_determinant(rows).degree() || order > jacobi_number(m.degree_matrix())) ++violations;
  }
  return {golden == OrderValue(5) && violations == 0,
          "characteristic matrix order " + to_string(golden) + ", " + std::to_string(violations) +
              "/200 random violations"};
}

Verdict greenspan_two() {
  std::mt19937_64 rng(0x0a18);
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto a = jt::matrix_of(jt::random_grid(rng, 2, 12, 0.0));
    if (greenspan(a) != jacobi_number(a)) ++violations;
  }
  return {violations == 0, std::to_string(violations) + "/1000 violations"};
}

double median_canon_seconds(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> runs;
  for (int r = 0; r < 5; ++r) {
    const auto a = jt::matrix_of(jt::random_grid(rng, n, 999, 0.0));
    const auto start = Clock::now();
    const auto c = minimal_canon(a);
    runs.push_back(seconds_since(start));
    if (c.n() != n) return -1;
  }
  std::sort(runs.begin(), runs.end());
  return runs[2];
}

Verdict cubic_scaling() {
  const double t256 = median_canon_seconds(256, 0x0a19);
  const double t512 = median_canon_seconds(512, 0x0a1a);
  const double ratio = t512 / t256;
  char buf[128];
  std::snprintf(buf, sizeof buf, "median n=256 %.4f s, n=512 %.4f s, ratio %.2f", t256, t512, ratio);
  return {t256 > 0 && ratio <= 12.0 && t512 < 5.0, buf};
}

Verdict operator_identities() {
  std::mt19937_64 rng(0x0a1b);
  const std::vector<std::string> vars{"x1", "x2", "x3"};
  std::uniform_int_distribution<std::size_t> var(0, 2);
  std::uniform_int_distribution<std::uint32_t> order(1, 4);
  int leibniz = 0, shift = 0, commute = 0, round_trip = 0;
  for (int t = 0; t < 500; ++t) {
    const auto p = jt::random_polynomial(rng, 3, 3, 5, 3);
    const auto q = jt::random_polynomial(rng, 3, 3, 5, 3);
    if (total_derivative(p * q) != total_derivative(p) * q + p * total_derivative(q)) ++leibniz;
    for (std::size_t j = 0; j < 3; ++j) {
      const OrderValue k = order_in(p, j);
      if (k.is_finite() && order_in(total_derivative(p), j) != k + OrderValue(1)) ++shift;
    }
    const DerivativeVar v{var(rng), order(rng)};
    if (partial_derivative(total_derivative(p), v) !=
        total_derivative(partial_derivative(p, v)) + partial_derivative(p, {v.var, v.order - 1}))
      ++commute;
    if (parse_polynomial(to_string(p, vars), vars) != p) ++round_trip;
  }
  return {leibniz + shift + commute + round_trip == 0,
          "failures: leibniz " + std::to_string(leibniz) + ", order shift " + std::to_string(shift) +
              ", commutation " + std::to_string(commute) + ", round trip " + std::to_string(round_trip)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"golden 3x3 example", golden_example},
      {"permutation oracle equivalence", permutation_oracle},
      {"minimality of ell", minimality},
      {"attachment vs minor transversal sums", forma_elegans},
      {"second system normal form", second_system},
      {"golden truncated Jacobian", golden_jacobian},
      {"determinant degree oracle", determinant_degree},
      {"two-variable Greenspan coincidence", greenspan_two},
      {"cubic scaling", cubic_scaling},
      {"differential operator identities", operator_identities},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v{false, ""};
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("criterion %2zu %s  %s: %s\n", k + 1, v.pass ? "PASS" : "FAIL", criteria[k].first, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

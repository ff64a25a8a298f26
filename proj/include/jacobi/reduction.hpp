#pragma once

// Prolongation plans: the shortest reduction to a normal form (equation u_i
// differentiated ℓ_i times) and the prolongation needed by a resolvent
// (u_i differentiated h_i times).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jacobi/canon.hpp"
#include "jacobi/diffpoly.hpp"
#include "jacobi/jacobian.hpp"
#include "jacobi/resolvent.hpp"
#include "jacobi/system.hpp"

namespace jacobi {

// Equation index with the derivative orders 0..max taken of it.
struct Prolongation {
  std::size_t equation = 0;
  std::vector<std::uint32_t> orders;
};

struct ReductionPlan {
  std::vector<std::int64_t> ell;
  std::vector<Prolongation> prolongation;
  // E: x_σ(i)^(α_i + β_σ(i) + k), 0 ≤ k ≤ ℓ_i, grouped by equation.
  std::vector<DerivativeVar> solved_set;
  // Per variable j: derivatives of x_j strictly below this order are the
  // parameters of the normal form.
  std::vector<std::int64_t> known_set_bound;
  // Per equation i: x_σ(i)^(α_i + β_σ(i)), the left side of its normal-form equation.
  std::vector<DerivativeVar> leading;
  std::vector<OrderValue> beta;
  OrderValue order_total;
};

// `canon` must be minimal_canon(order_matrix_of(system)). Throws
// DegenerateError when some β_j is −∞.
ReductionPlan shortest_reduction_plan(const DiffSystem& system, const CanonResult& canon);

// The differentiated equations u_i^(k) listed by a prolongation.
std::vector<DiffPolynomial> prolonged_equations(const DiffSystem& system, std::span<const Prolongation> prolongation);

// Square Jacobian of the prolonged equations of the plan with respect to its
// solved set; its nonvanishing lets the implicit function theorem produce the
// normal form.
PolyGrid solved_set_jacobian(const DiffSystem& system, const ReductionPlan& plan);

enum class JacobiOrder { Less, Equal, Greater };

std::string_view to_string(JacobiOrder o) noexcept;

// Total order on derivatives by k − β_j, ties broken by variable index.
// Throws DegenerateError when a compared variable has β = −∞.
JacobiOrder jacobi_order_compare(DerivativeVar d1, DerivativeVar d2, std::span<const OrderValue> beta);

// u_i with derivative orders 0..h_i; Σ (h_i + 1) equations in total.
std::vector<Prolongation> resolvent_prolongation(const DiffSystem& system, const ResolventPlan& plan);

}  // namespace jacobi

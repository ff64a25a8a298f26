#include "jacobi/reduction.hpp"

#include "jacobi/error.hpp"

namespace jacobi {
namespace {

Prolongation up_to(std::size_t equation, std::int64_t max_order) {
  Prolongation p{equation, {}};
  for (std::int64_t k = 0; k <= max_order; ++k) p.orders.push_back(static_cast<std::uint32_t>(k));
  return p;
}

}  // namespace

ReductionPlan shortest_reduction_plan(const DiffSystem& system, const CanonResult& canon) {
  const std::size_t n = system.n();
  if (canon.n() != n) throw DimensionError("canon does not match the system");
  ReductionPlan plan;
  plan.ell = canon.ell;
  plan.beta = canon.beta;
  plan.known_set_bound.assign(n, 0);
  plan.order_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = canon.starred_column(i);
    if (canon.beta[j].is_neg_infinity()) {
      throw DegenerateError("beta of column " + std::to_string(j + 1) + " is -inf", {}, {j});
    }
    const std::int64_t base = canon.alpha[i] + canon.beta[j].value();
    plan.known_set_bound[j] = base;
    plan.order_total += base;
    plan.leading.push_back({j, static_cast<std::uint32_t>(base)});
    plan.prolongation.push_back(up_to(i, canon.ell[i]));
    for (std::int64_t k = 0; k <= canon.ell[i]; ++k)
      plan.solved_set.push_back({j, static_cast<std::uint32_t>(base + k)});
  }
  return plan;
}

std::vector<DiffPolynomial> prolonged_equations(const DiffSystem& system, std::span<const Prolongation> prolongation) {
  std::vector<DiffPolynomial> out;
  for (const auto& p : prolongation) {
    if (p.equation >= system.n()) throw DimensionError("prolongation names a missing equation");
    DiffPolynomial current = system.equations[p.equation];
    std::uint32_t at = 0;
    for (std::uint32_t k : p.orders) {
      if (k < at) {
        current = system.equations[p.equation];
        at = 0;
      }
      for (; at < k; ++at) current = total_derivative(current);
      out.push_back(current);
    }
  }
  return out;
}

PolyGrid solved_set_jacobian(const DiffSystem& system, const ReductionPlan& plan) {
  const std::vector<DiffPolynomial> eqs = prolonged_equations(system, plan.prolongation);
  PolyGrid grid(eqs.size(), std::vector<DiffPolynomial>(plan.solved_set.size()));
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < plan.solved_set.size(); ++c) grid[r][c] = partial_derivative(eqs[r], plan.solved_set[c]);
  return grid;
}

std::string_view to_string(JacobiOrder o) noexcept {
  switch (o) {
    case JacobiOrder::Less: return "Less";
    case JacobiOrder::Equal: return "Equal";
    case JacobiOrder::Greater: return "Greater";
  }
  return "?";
}

JacobiOrder jacobi_order_compare(DerivativeVar d1, DerivativeVar d2, std::span<const OrderValue> beta) {
  if (d1.var >= beta.size() || d2.var >= beta.size()) throw DimensionError("variable index out of range");
  if (beta[d1.var].is_neg_infinity() || beta[d2.var].is_neg_infinity()) {
    throw DegenerateError("Jacobi ordering needs finite beta");
  }
  const std::int64_t k1 = static_cast<std::int64_t>(d1.order) - beta[d1.var].value();
  const std::int64_t k2 = static_cast<std::int64_t>(d2.order) - beta[d2.var].value();
  if (k1 != k2) return k1 < k2 ? JacobiOrder::Less : JacobiOrder::Greater;
  if (d1.var != d2.var) return d1.var < d2.var ? JacobiOrder::Less : JacobiOrder::Greater;
  return JacobiOrder::Equal;
}

std::vector<Prolongation> resolvent_prolongation(const DiffSystem& system, const ResolventPlan& plan) {
  if (plan.h.size() != system.n()) throw DimensionError("resolvent plan does not match the system");
  std::vector<Prolongation> out;
  for (std::size_t i = 0; i < system.n(); ++i) out.push_back(up_to(i, plan.h[i]));
  return out;
}

}  // namespace jacobi

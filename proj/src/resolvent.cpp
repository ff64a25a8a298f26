#include "jacobi/resolvent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "jacobi/error.hpp"

namespace jacobi {

ResolventPlan resolvent_orders(const OrderMatrix& a, const CanonResult& canon, std::size_t j0) {
  const std::size_t n = a.n();
  if (canon.n() != n) throw DimensionError("canon does not match the order matrix");
  if (j0 >= n) throw DimensionError("primitive-element column out of range");
  if (a.column_max(j0).is_neg_infinity()) {
    throw InfeasibleError("variable " + std::to_string(j0 + 1) + " does not occur in the system", {});
  }

  ResolventPlan plan;
  plan.j0 = j0;
  plan.i0 = canon.starred_row(j0);
  plan.resolvent_order = canon.jacobi_number;

  // Current matrix A' + raises, kept as the total raise per row over A.
  std::vector<std::int64_t> raise = canon.ell;
  auto value = [&](std::size_t i, std::size_t j) { return a(i, j) + OrderValue(raise[i]); };
  auto star_value = [&](std::size_t i) { return value(i, canon.starred_column(i)); };

  std::vector<bool> attached(n, false);
  attached[plan.i0] = true;
  std::size_t count = 1;

  // Row k joins when an attached row ties the starred maximum of row k in
  // that maximum's column (an underlined entry).
  auto close = [&] {
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (attached[k]) continue;
        const std::size_t c = canon.starred_column(k);
        const OrderValue target = star_value(k);
        for (std::size_t t = 0; t < n; ++t) {
          if (attached[t] && value(t, c) == target) {
            attached[k] = true;
            ++count;
            grew = true;
            break;
          }
        }
      }
    }
  };

  close();
  while (count < n) {
    std::int64_t step = std::numeric_limits<std::int64_t>::max();
    for (std::size_t k = 0; k < n; ++k) {
      if (attached[k]) continue;
      const std::size_t c = canon.starred_column(k);
      const std::int64_t target = star_value(k).value();
      for (std::size_t t = 0; t < n; ++t) {
        if (!attached[t] || value(t, c).is_neg_infinity()) continue;
        step = std::min(step, target - value(t, c).value());
      }
    }
    if (step == std::numeric_limits<std::int64_t>::max()) {
      std::vector<std::size_t> stuck;
      std::ostringstream os;
      os << "attachment stalls: rows {";
      for (std::size_t k = 0; k < n; ++k) {
        if (attached[k]) continue;
        os << (stuck.empty() ? "" : ", ") << k + 1;
        stuck.push_back(k);
      }
      os << "} cannot be attached to row " << plan.i0 + 1;
      throw InfeasibleError(os.str(), std::move(stuck));
    }
    if (step <= 0) throw Error("attachment step must be positive; is the canon minimal?");
    for (std::size_t t = 0; t < n; ++t)
      if (attached[t]) raise[t] += step;
    close();
  }
  plan.a_double_prime = a.raised(raise);

  const std::int64_t last = canon.jacobi_number.value() - star_value(plan.i0).value();
  if (last < 0) throw Error("attached star of the anchor row exceeds the Jacobi number");
  for (auto& r : raise) r += last;
  plan.a_triple_prime = a.raised(raise);
  plan.h = std::move(raise);
  return plan;
}

std::vector<OrderValue> forma_elegans_orders(const OrderMatrix& a, std::size_t j0) {
  const std::size_t n = a.n();
  if (j0 >= n) throw DimensionError("primitive-element column out of range");
  if (n == 1) return {OrderValue(0)};
  std::vector<OrderValue> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const OrderMatrix m = a.minor(i, j0);
    h[i] = n <= 8 ? brute_force_jacobi_number(m) : jacobi_number(m);
  }
  return h;
}

}  // namespace jacobi

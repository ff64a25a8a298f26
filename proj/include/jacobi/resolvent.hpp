#pragma once

// Differentiation orders for a resolvent representation.
//
// Given the minimal canon of A and a variable x_j0 used as primitive
// element, h_i is the number of times equation u_i must be differentiated.
// resolvent_orders runs the attachment process on A' = A + ℓ;
// forma_elegans_orders computes the same numbers as maximal transversal sums
// of the minors of A with row i and column j0 removed.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jacobi/canon.hpp"
#include "jacobi/order_matrix.hpp"

namespace jacobi {

struct ResolventPlan {
  std::size_t j0 = 0;  // primitive-element column
  std::size_t i0 = 0;  // row starred in column j0
  std::vector<std::int64_t> h;
  OrderMatrix a_double_prime{1};  // after all rows are attached to i0
  OrderMatrix a_triple_prime{1};  // after the final uniform raise; equals A + h
  OrderValue resolvent_order;     // J
};

// `canon` must be minimal_canon(a). Throws InfeasibleError when column j0
// has no finite entry or the attachment process stalls.
ResolventPlan resolvent_orders(const OrderMatrix& a, const CanonResult& canon, std::size_t j0);

// h_i = max transversal sum of A without row i and column j0. The 0×0 minor
// of a 1×1 matrix has sum 0.
std::vector<OrderValue> forma_elegans_orders(const OrderMatrix& a, std::size_t j0);

}  // namespace jacobi

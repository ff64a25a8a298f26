#pragma once

// Truncated Jacobian ∇ = (∂u_i / ∂x_j^(α_i+β_j)) and its determinant.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jacobi/canon.hpp"
#include "jacobi/diffpoly.hpp"
#include "jacobi/system.hpp"

namespace jacobi {

using PolyGrid = std::vector<std::vector<DiffPolynomial>>;

// `canon` must be minimal_canon(order_matrix_of(system)). Entries with a
// negative target order are zero. Throws DegenerateError when some β_j is −∞.
PolyGrid truncated_jacobian(const DiffSystem& system, const CanonResult& canon);

// Exact determinant of the grid evaluated at `point`; throws
// EvaluationError when a variable of the grid has no value.
Rational determinant_at(const PolyGrid& grid, const Point& point);

inline constexpr std::size_t kSymbolicDeterminantMaxN = 4;

// Cofactor expansion; throws SizeGuardError for n > 4.
DiffPolynomial symbolic_determinant(const PolyGrid& grid);

struct JacobianStatus {
  enum class Kind { NonzeroWitnessed, ZeroSymbolic, ProbablyZero, NotComputed };

  Kind kind = Kind::NotComputed;
  Point witness;          // NonzeroWitnessed
  Rational value;         // determinant at the witness
  std::size_t trials = 0; // evaluation points tried
};

std::string_view to_string(JacobianStatus::Kind kind) noexcept;

// Decides nonvanishing of |grid|. A nonzero value at an integer point is a
// witness. For n ≤ 4 an identically zero cofactor expansion gives
// ZeroSymbolic; for larger n, `max_trials` zero evaluations give
// ProbablyZero. Points are drawn from widening integer ranges with a fixed
// seed, so the result is reproducible.
JacobianStatus check_nonvanishing(const PolyGrid& grid, std::uint64_t seed = 0x4a61636f6269ULL,
                                  std::size_t max_trials = 64);

}  // namespace jacobi

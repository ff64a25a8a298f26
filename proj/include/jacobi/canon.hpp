#pragma once

// Jacobi's canon algorithm.
//
// A multiplier vector λ ∈ N^n is a canon for A when the raised matrix
// (a_ij + λ_i) holds n transversal maxima: one entry per row, in distinct
// columns, each maximal in its column. The componentwise-minimal canon ℓ is
// unique; from it
//
//   Λ = max_i ℓ_i,   α_i = Λ − ℓ_i,   β_j = max_i (a_ij − α_i),
//   J = Σ_i α_i + Σ_j β_j = max_σ Σ_i a_{i,σ(i)}.
//
// minimal_canon runs in O(n³): a preparation pass, then one augmentation per
// missing transversal maximum, raising the rows that can reach an unstarred
// row ("third class") by the smallest amount that creates a new tie with a
// starred maximum.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "jacobi/order_matrix.hpp"

namespace jacobi {

enum class TraceKind { Preparation, Augment, RaiseThirdClass };

// Row partition at a raise step. Lower rows hold no transversal maximum;
// first-class rows are reachable from a starred maximum in an unmatched
// column; third-class rows reach a lower row; the rest are second class.
enum class RowClass { First, Second, Third, Lower };

std::string_view to_string(TraceKind kind) noexcept;
std::string_view to_string(RowClass c) noexcept;

struct TraceStep {
  TraceKind kind;
  std::vector<std::int64_t> row_increments;
  std::optional<std::vector<RowClass>> classes;
};

struct CanonResult {
  std::vector<std::int64_t> ell;
  std::int64_t Lambda = 0;
  std::vector<std::int64_t> alpha;
  std::vector<OrderValue> beta;
  OrderValue jacobi_number;
  // (row, column) of the transversal maxima, one per row, sorted by row.
  std::vector<std::pair<std::size_t, std::size_t>> starred;
  // Empty unless CanonOptions::record_trace was set.
  std::vector<TraceStep> trace;

  std::size_t n() const noexcept { return ell.size(); }
  // Column of the transversal maximum of row i.
  std::size_t starred_column(std::size_t row) const { return starred.at(row).second; }
  // Row whose transversal maximum lies in column j.
  std::size_t starred_row(std::size_t column) const;
};

struct CanonOptions {
  // Record every step with its row increments and, for raises, the class
  // partition (recomputed from scratch, O(n²) extra per raise).
  bool record_trace = false;
};

struct Prepared {
  OrderMatrix matrix;
  std::vector<std::int64_t> increments;
};

// Single top-to-bottom pass raising each row by its smallest gap to a column
// maximum. Column maxima never change during the pass, so every row ends up
// owning at least one column maximum. Throws DegenerateError on an all −∞ row.
Prepared prepare(const OrderMatrix& a);

// True iff (a_ij + λ_i) contains n transversal maxima.
bool is_canon(const OrderMatrix& a, std::span<const std::int64_t> lambda);

// Throws DegenerateError (with the Hall violator as witness) when A has no
// finite transversal.
CanonResult minimal_canon(const OrderMatrix& a, const CanonOptions& options = {});

// Jacobi number through the canon algorithm; −∞ when no finite transversal
// exists.
OrderValue jacobi_number(const OrderMatrix& a);

inline constexpr std::size_t kBruteCanonMaxN = 4;
inline constexpr std::int64_t kBruteCanonMaxBox = 6;

// Exhaustive search over [0, box]^n, scanned by increasing sum then
// lexicographically; returns the componentwise-minimal canon found. Throws
// SizeGuardError outside n ≤ 4, box ≤ 6, and Error when the box holds no
// canon.
std::vector<std::int64_t> brute_force_minimal_canon(const OrderMatrix& a, std::int64_t box);

}  // namespace jacobi

#include "jacobi/jacobian.hpp"

#include <algorithm>
#include <random>

#include "jacobi/error.hpp"
#include "jacobi/linalg.hpp"

namespace jacobi {
namespace {

std::set<DerivativeVar> grid_variables(const PolyGrid& grid) {
  std::set<DerivativeVar> vars;
  for (const auto& row : grid)
    for (const auto& p : row) {
      auto vs = p.variables();
      vars.insert(vs.begin(), vs.end());
    }
  return vars;
}

DiffPolynomial cofactor(const PolyGrid& grid, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == grid.size()) return DiffPolynomial::constant(1);
  DiffPolynomial sum;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (grid[row][c].is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    DiffPolynomial minor = cofactor(grid, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    DiffPolynomial t = grid[row][c] * minor;
    if (k % 2) {
      sum -= t;
    } else {
      sum += t;
    }
  }
  return sum;
}

}  // namespace

PolyGrid truncated_jacobian(const DiffSystem& system, const CanonResult& canon) {
  const std::size_t n = system.n();
  if (canon.n() != n) throw DimensionError("canon does not match the system");
  for (std::size_t j = 0; j < n; ++j) {
    if (canon.beta[j].is_neg_infinity()) {
      throw DegenerateError("beta of column " + std::to_string(j + 1) + " is -inf", {}, {j});
    }
  }
  PolyGrid grid(n, std::vector<DiffPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t order = canon.alpha[i] + canon.beta[j].value();
      if (order < 0) continue;
      grid[i][j] = partial_derivative(system.equations[i], {j, static_cast<std::uint32_t>(order)});
    }
  }
  return grid;
}

Rational determinant_at(const PolyGrid& grid, const Point& point) {
  const std::size_t n = grid.size();
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (grid[i].size() != n) throw DimensionError("grid must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = grid[i][j].evaluate(point);
  }
  return determinant(std::move(m));
}

DiffPolynomial symbolic_determinant(const PolyGrid& grid) {
  const std::size_t n = grid.size();
  if (n > kSymbolicDeterminantMaxN) throw SizeGuardError("symbolic determinant is limited to n <= 4");
  for (const auto& row : grid)
    if (row.size() != n) throw DimensionError("grid must be square");
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  return cofactor(grid, cols, 0);
}

std::string_view to_string(JacobianStatus::Kind kind) noexcept {
  switch (kind) {
    case JacobianStatus::Kind::NonzeroWitnessed: return "nonzeroWitnessed";
    case JacobianStatus::Kind::ZeroSymbolic: return "zeroSymbolic";
    case JacobianStatus::Kind::ProbablyZero: return "probablyZero";
    case JacobianStatus::Kind::NotComputed: return "notComputed";
  }
  return "?";
}

JacobianStatus check_nonvanishing(const PolyGrid& grid, std::uint64_t seed, std::size_t max_trials) {
  const std::size_t n = grid.size();
  const std::set<DerivativeVar> vars = grid_variables(grid);
  JacobianStatus status;

  std::size_t budget = max_trials;
  if (n <= kSymbolicDeterminantMaxN) {
    if (symbolic_determinant(grid).is_zero()) {
      status.kind = JacobianStatus::Kind::ZeroSymbolic;
      return status;
    }
    // A nonzero polynomial has a nonzero integer point; keep searching.
    budget = std::max<std::size_t>(max_trials, 4096);
  }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < budget; ++t) {
    Point point;
    // Trial t samples from [-(t+1), t+1]; the first trial is the origin.
    const std::uint64_t width = 2 * t + 1;
    for (const auto& v : vars) {
      const auto offset = static_cast<std::int64_t>(t == 0 ? 0 : rng() % width);
      point[v] = Rational(offset - static_cast<std::int64_t>(t == 0 ? 0 : t));
    }
    ++status.trials;
    Rational value = determinant_at(grid, point);
    if (value != 0) {
      status.kind = JacobianStatus::Kind::NonzeroWitnessed;
      status.witness = std::move(point);
      status.value = value;
      return status;
    }
    if (vars.empty()) {
      // A constant grid: its evaluation is the symbolic determinant.
      status.kind = JacobianStatus::Kind::ZeroSymbolic;
      return status;
    }
  }
  status.kind = JacobianStatus::Kind::ProbablyZero;
  return status;
}

}  // namespace jacobi

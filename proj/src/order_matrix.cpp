#include "jacobi/order_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "jacobi/error.hpp"

namespace jacobi {

std::int64_t OrderValue::value() const {
  if (!finite_) throw DegenerateError("order value is -inf");
  return value_;
}

std::string to_string(OrderValue v) {
  return v.is_finite() ? std::to_string(v.value()) : std::string("-inf");
}

std::ostream& operator<<(std::ostream& os, OrderValue v) { return os << to_string(v); }

OrderMatrix::OrderMatrix(std::size_t n, OrderValue fill) : n_(n), entries_(n * n, fill) {
  if (n == 0) throw DimensionError("order matrix must have at least one row");
  if (fill.is_finite() && fill.value() < 0) throw Error("orders must be non-negative");
}

OrderMatrix OrderMatrix::from_rows(const std::vector<std::vector<OrderValue>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw DimensionError("order matrix must have at least one row");
  OrderMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw DimensionError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, rows[i][j]);
  }
  return a;
}

OrderMatrix OrderMatrix::from_rows(std::initializer_list<std::initializer_list<OrderValue>> rows) {
  std::vector<std::vector<OrderValue>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

OrderValue OrderMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionError("order matrix index out of range");
  return (*this)(i, j);
}

void OrderMatrix::set(std::size_t i, std::size_t j, OrderValue v) {
  if (i >= n_ || j >= n_) throw DimensionError("order matrix index out of range");
  if (v.is_finite() && v.value() < 0) throw Error("orders must be non-negative");
  entries_[i * n_ + j] = v;
}

std::vector<std::vector<OrderValue>> OrderMatrix::rows() const {
  std::vector<std::vector<OrderValue>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

OrderValue OrderMatrix::column_max(std::size_t j) const noexcept {
  OrderValue m = kNegInf;
  for (std::size_t i = 0; i < n_; ++i) m = std::max(m, (*this)(i, j));
  return m;
}

OrderValue OrderMatrix::row_max(std::size_t i) const noexcept {
  OrderValue m = kNegInf;
  for (OrderValue v : row(i)) m = std::max(m, v);
  return m;
}

OrderMatrix OrderMatrix::raised(std::span<const std::int64_t> raise) const {
  if (raise.size() != n_) throw DimensionError("row raise vector has wrong length");
  OrderMatrix out(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    if (raise[i] < 0) throw Error("row raises must be non-negative");
    for (std::size_t j = 0; j < n_; ++j) out.entries_[i * n_ + j] += raise[i];
  }
  return out;
}

OrderMatrix OrderMatrix::minor(std::size_t row, std::size_t column) const {
  if (n_ < 2) throw DimensionError("minor of a 1x1 matrix is empty");
  if (row >= n_ || column >= n_) throw DimensionError("minor index out of range");
  OrderMatrix out(n_ - 1);
  for (std::size_t i = 0, oi = 0; i < n_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < n_; ++j) {
      if (j == column) continue;
      out.entries_[oi * (n_ - 1) + oj] = (*this)(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const OrderMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.n(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.n(); ++j) os << (j ? ", " : "") << a(i, j);
    os << ']';
  }
  return os << ']';
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t c : images_) {
    if (c >= images_.size() || seen[c]) throw Error("not a permutation");
    seen[c] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return Permutation(std::move(id));
}

OrderValue transversal_sum(const OrderMatrix& a, const Permutation& sigma) {
  if (sigma.size() != a.n()) {
    throw DimensionError("permutation of length " + std::to_string(sigma.size()) + " for a " +
                         std::to_string(a.n()) + "x" + std::to_string(a.n()) + " matrix");
  }
  OrderValue sum = 0;
  for (std::size_t i = 0; i < a.n(); ++i) sum += a(i, sigma[i]);
  return sum;
}

OrderValue brute_force_jacobi_number(const OrderMatrix& a) {
  if (a.n() > kBruteForceMaxN) {
    throw SizeGuardError("brute-force enumeration is limited to n <= " + std::to_string(kBruteForceMaxN));
  }
  std::vector<std::size_t> p(a.n());
  std::iota(p.begin(), p.end(), std::size_t{0});
  OrderValue best = kNegInf;
  do {
    OrderValue sum = 0;
    for (std::size_t i = 0; i < a.n() && sum.is_finite(); ++i) sum += a(i, p[i]);
    best = std::max(best, sum);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

FiniteMatching finite_matching(const OrderMatrix& a) {
  const std::size_t n = a.n();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> row_match(n, kNone), col_match(n, kNone);

  std::size_t size = 0;
  // Greedy seed, then one BFS augmenting search per free row.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_finite() && col_match[j] == kNone) {
        row_match[i] = j;
        col_match[j] = i;
        ++size;
        break;
      }
    }
  }

  std::vector<std::size_t> parent_row(n);  // for a visited column: row it was reached from
  std::vector<bool> col_seen(n), row_seen(n);
  std::vector<std::size_t> queue;
  queue.reserve(n);

  auto search = [&](std::size_t root) -> bool {
    std::fill(col_seen.begin(), col_seen.end(), false);
    std::fill(row_seen.begin(), row_seen.end(), false);
    queue.assign(1, root);
    row_seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t i = queue[head];
      for (std::size_t j = 0; j < n; ++j) {
        if (col_seen[j] || !a(i, j).is_finite()) continue;
        col_seen[j] = true;
        parent_row[j] = i;
        if (col_match[j] == kNone) {
          for (std::size_t c = j;;) {
            const std::size_t r = parent_row[c];
            const std::size_t prev = row_match[r];
            row_match[r] = c;
            col_match[c] = r;
            if (r == root) break;
            c = prev;
          }
          return true;
        }
        const std::size_t k = col_match[j];
        if (!row_seen[k]) {
          row_seen[k] = true;
          queue.push_back(k);
        }
      }
    }
    return false;
  };

  FiniteMatching out;
  for (std::size_t i = 0; i < n; ++i) {
    if (row_match[i] != kNone) continue;
    if (search(i)) {
      ++size;
    } else if (out.hall_rows.empty()) {
      // The alternating tree from a free row that cannot be augmented
      // reaches only matched columns: |N(rows)| = |rows| - 1.
      for (std::size_t r = 0; r < n; ++r)
        if (row_seen[r]) out.hall_rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (col_seen[c]) out.hall_columns.push_back(c);
    }
  }

  out.row_to_column.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    if (row_match[i] != kNone) out.row_to_column[i] = row_match[i];
  out.size = size;
  return out;
}

bool has_finite_transversal(const OrderMatrix& a) { return finite_matching(a).perfect(); }

OrderMatrix to_weak(const OrderMatrix& a) {
  OrderMatrix out(a);
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (a(i, j).is_neg_infinity()) out.set(i, j, 0);
  return out;
}

OrderMatrix isoperimetric_matrix(std::span<const std::int64_t> e) {
  if (e.empty()) throw DimensionError("isoperimetric orders must be non-empty");
  OrderMatrix out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) out.set(i, j, e[i] + e[j]);
  return out;
}

}  // namespace jacobi

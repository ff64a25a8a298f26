#pragma once

// Order matrices over the extended integers Z ∪ {−∞}.
//
// An order matrix A = (a_ij) records, for a square system of ODEs, the
// highest derivative order of unknown x_j occurring in equation u_i; −∞
// marks an absent unknown. Arithmetic is max-plus: −∞ absorbs addition.
//
// Indices are 0-based throughout the C++ API. Reports and JSON use 1-based
// indices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jacobi {

// An element of Z ∪ {−∞}. Derivation orders are the non-negative finite
// values; derived quantities (column offsets beta) may be negative.
class OrderValue {
 public:
  // Default-constructed value is −∞.
  constexpr OrderValue() noexcept = default;
  constexpr OrderValue(std::int64_t value) noexcept : finite_(true), value_(value) {}  // NOLINT

  static constexpr OrderValue neg_infinity() noexcept { return OrderValue{}; }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr bool is_neg_infinity() const noexcept { return !finite_; }

  // Throws DegenerateError on −∞.
  std::int64_t value() const;
  constexpr std::optional<std::int64_t> to_optional() const noexcept {
    return finite_ ? std::optional<std::int64_t>{value_} : std::nullopt;
  }

  friend constexpr OrderValue operator+(OrderValue a, OrderValue b) noexcept {
    if (!a.finite_ || !b.finite_) return {};
    return OrderValue{a.value_ + b.value_};
  }
  OrderValue& operator+=(OrderValue other) noexcept { return *this = *this + other; }

  friend constexpr bool operator==(OrderValue a, OrderValue b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(OrderValue a, OrderValue b) noexcept {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

 private:
  bool finite_ = false;
  std::int64_t value_ = 0;
};

inline constexpr OrderValue kNegInf{};

constexpr OrderValue order_add(OrderValue a, OrderValue b) noexcept { return a + b; }

std::string to_string(OrderValue v);
std::ostream& operator<<(std::ostream& os, OrderValue v);

// Square n×n grid of orders. Finite entries are non-negative.
class OrderMatrix {
 public:
  // n×n matrix filled with `fill`. n must be positive.
  explicit OrderMatrix(std::size_t n, OrderValue fill = kNegInf);

  // Throws DimensionError unless rows form a non-empty square grid, and
  // Error if a finite entry is negative.
  static OrderMatrix from_rows(const std::vector<std::vector<OrderValue>>& rows);
  static OrderMatrix from_rows(std::initializer_list<std::initializer_list<OrderValue>> rows);

  std::size_t n() const noexcept { return n_; }

  OrderValue operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
  OrderValue at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, OrderValue v);

  std::span<const OrderValue> row(std::size_t i) const noexcept {
    return {entries_.data() + i * n_, n_};
  }
  std::vector<std::vector<OrderValue>> rows() const;

  // max_i a_ij (−∞ for an empty column) and max_j a_ij.
  OrderValue column_max(std::size_t j) const noexcept;
  OrderValue row_max(std::size_t i) const noexcept;

  // The matrix with the non-negative amount raise[i] added to every entry of row i.
  OrderMatrix raised(std::span<const std::int64_t> raise) const;

  // Minor with one row and one column removed; n must be ≥ 2.
  OrderMatrix minor(std::size_t row, std::size_t column) const;

  friend bool operator==(const OrderMatrix&, const OrderMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<OrderValue> entries_;
};

std::ostream& operator<<(std::ostream& os, const OrderMatrix& a);

// A bijection of {0..n-1}; images[i] is the column assigned to row i.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t i) const noexcept { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

 private:
  std::vector<std::size_t> images_;
};

// Σ_i a_{i,σ(i)}.
OrderValue transversal_sum(const OrderMatrix& a, const Permutation& sigma);

inline constexpr std::size_t kBruteForceMaxN = 9;

// max over all n! permutations of the transversal sum. Throws SizeGuardError
// when n > 9.
OrderValue brute_force_jacobi_number(const OrderMatrix& a);

// Maximum bipartite matching between rows and the columns where a is finite.
struct FiniteMatching {
  std::vector<std::optional<std::size_t>> row_to_column;
  std::size_t size = 0;
  // When the matching is not perfect: a set of rows whose finite columns
  // (hall_columns) are fewer than the rows themselves.
  std::vector<std::size_t> hall_rows;
  std::vector<std::size_t> hall_columns;

  bool perfect() const noexcept { return size == row_to_column.size(); }
};

FiniteMatching finite_matching(const OrderMatrix& a);

// True iff some transversal sum is finite, i.e. the Jacobi number is not −∞.
bool has_finite_transversal(const OrderMatrix& a);

// Weak convention: absent unknowns count as order 0.
OrderMatrix to_weak(const OrderMatrix& a);

// a_ij = e_i + e_j, the order pattern of the Euler-Lagrange equations of a
// variational problem whose Lagrangian has order e_i in x_i.
OrderMatrix isoperimetric_matrix(std::span<const std::int64_t> e);

}  // namespace jacobi

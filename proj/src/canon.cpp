#include "jacobi/canon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "jacobi/error.hpp"

namespace jacobi {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr std::int64_t kAbsent = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

std::string index_set(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? ", " : "") << xs[k] + 1;
  os << '}';
  return os.str();
}

// Dense working state of the canon algorithm. Entries are raw int64 with
// kAbsent for −∞; lambda holds the current row raises.
class CanonSolver {
 public:
  CanonSolver(const OrderMatrix& a, bool record)
      : n_(a.n()), w_(n_ * n_), record_(record), row_match_(n_, kNone), col_match_(n_, kNone) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const OrderValue v = a(i, j);
        w_[i * n_ + j] = v.is_finite() ? v.value() : kAbsent;
      }
  }

  std::vector<std::int64_t> run(std::vector<std::int64_t> lambda, std::vector<TraceStep>& trace) {
    lambda_ = std::move(lambda);
    trace_ = &trace;
    col_max_.assign(n_, kAbsent);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i)
        if (finite(i, j)) col_max_[j] = std::max(col_max_[j], raised(i, j));

    // Initial star: leftmost column maximum of the first row.
    for (std::size_t j = 0; j < n_; ++j) {
      if (tight(0, j)) {
        star(0, j);
        break;
      }
    }
    if (row_match_[0] == kNone) throw Error("prepared table has no maximum in its first row");
    std::size_t matched = 1;

    while (matched < n_) {
      if (direct_stars(matched)) continue;
      augment_phase();
      ++matched;
    }
    return lambda_;
  }

  std::vector<std::size_t> row_match() const { return row_match_; }

 private:
  bool finite(std::size_t i, std::size_t j) const noexcept { return w_[i * n_ + j] != kAbsent; }
  std::int64_t raised(std::size_t i, std::size_t j) const noexcept { return w_[i * n_ + j] + lambda_[i]; }
  bool tight(std::size_t i, std::size_t j) const noexcept {
    return finite(i, j) && raised(i, j) == col_max_[j];
  }

  void star(std::size_t i, std::size_t j) {
    row_match_[i] = j;
    col_match_[j] = i;
    record(TraceKind::Augment, std::vector<std::int64_t>(n_, 0), std::nullopt);
  }

  void record(TraceKind kind, std::vector<std::int64_t> increments,
              std::optional<std::vector<RowClass>> classes) {
    if (record_) trace_->push_back({kind, std::move(increments), std::move(classes)});
  }

  // A lower row already owning a maximum in a right (unstarred) column gets
  // it starred directly; lowest (row, column) first.
  bool direct_stars(std::size_t& matched) {
    bool any = false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (row_match_[i] != kNone) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (col_match_[j] == kNone && tight(i, j)) {
          star(i, j);
          ++matched;
          any = true;
          break;
        }
      }
    }
    return any;
  }

  // Grows the alternating forest rooted at every lower row (the third class
  // together with the lower rows), raising it until a path to a right column
  // appears, then swaps stars along that path.
  void augment_phase() {
    in_row_.assign(n_, false);
    in_col_.assign(n_, false);
    slack_.assign(n_, kUnbounded);
    slack_row_.assign(n_, kNone);
    parent_row_.assign(n_, kNone);
    forest_.clear();

    for (std::size_t i = 0; i < n_; ++i)
      if (row_match_[i] == kNone) add_row(i);

    for (;;) {
      std::size_t c = kNone;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!in_col_[j] && slack_[j] == 0) {
          c = j;
          break;
        }
      }
      if (c != kNone) {
        in_col_[c] = true;
        parent_row_[c] = slack_row_[c];
        if (col_match_[c] == kNone) {
          augment(c);
          return;
        }
        add_row(col_match_[c]);
        continue;
      }

      std::int64_t delta = kUnbounded;
      for (std::size_t j = 0; j < n_; ++j)
        if (!in_col_[j]) delta = std::min(delta, slack_[j]);
      if (delta == kUnbounded) throw DegenerateError("no finite transversal");

      std::optional<std::vector<RowClass>> classes;
      if (record_) classes = partition();
      std::vector<std::int64_t> inc(n_, 0);
      for (std::size_t i : forest_) {
        lambda_[i] += delta;
        inc[i] = delta;
      }
      for (std::size_t j = 0; j < n_; ++j) {
        if (in_col_[j]) {
          col_max_[j] += delta;
        } else if (slack_[j] != kUnbounded) {
          slack_[j] -= delta;
        }
      }
      record(TraceKind::RaiseThirdClass, std::move(inc), std::move(classes));
    }
  }

  void add_row(std::size_t i) {
    in_row_[i] = true;
    forest_.push_back(i);
    for (std::size_t j = 0; j < n_; ++j) {
      if (in_col_[j] || !finite(i, j)) continue;
      const std::int64_t s = col_max_[j] - raised(i, j);
      if (s < slack_[j]) {
        slack_[j] = s;
        slack_row_[j] = i;
      }
    }
  }

  void augment(std::size_t c) {
    for (;;) {
      const std::size_t r = parent_row_[c];
      const std::size_t prev = row_match_[r];
      row_match_[r] = c;
      col_match_[c] = r;
      if (prev == kNone) break;
      c = prev;
    }
    record(TraceKind::Augment, std::vector<std::int64_t>(n_, 0), std::nullopt);
  }

  // Class partition from scratch against the current raises and stars.
  std::vector<RowClass> partition() const {
    std::vector<RowClass> cls(n_, RowClass::Second);
    std::vector<std::size_t> queue;

    // First class: upper rows owning a maximum in a right column, closed
    // under "row k ties the transversal maximum of row i in its column".
    std::vector<bool> first(n_, false);
    for (std::size_t i = 0; i < n_; ++i) {
      if (row_match_[i] == kNone) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (col_match_[j] == kNone && tight(i, j)) {
          first[i] = true;
          queue.push_back(i);
          break;
        }
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t i = queue[head];
      if (row_match_[i] == kNone) continue;
      const std::size_t c = row_match_[i];
      for (std::size_t k = 0; k < n_; ++k) {
        if (!first[k] && tight(k, c)) {
          first[k] = true;
          queue.push_back(k);
        }
      }
    }

    // Rows reaching a lower row: walk backwards from the lower rows.
    std::vector<bool> reach(n_, false);
    queue.clear();
    for (std::size_t i = 0; i < n_; ++i) {
      if (row_match_[i] == kNone) {
        reach[i] = true;
        queue.push_back(i);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t k = queue[head];
      for (std::size_t j = 0; j < n_; ++j) {
        if (col_match_[j] == kNone || !tight(k, j)) continue;
        const std::size_t i = col_match_[j];
        if (!reach[i]) {
          reach[i] = true;
          queue.push_back(i);
        }
      }
    }

    for (std::size_t i = 0; i < n_; ++i) {
      if (row_match_[i] == kNone) {
        cls[i] = RowClass::Lower;
      } else if (first[i]) {
        cls[i] = RowClass::First;
      } else if (reach[i]) {
        cls[i] = RowClass::Third;
      }
    }
    return cls;
  }

  std::size_t n_;
  std::vector<std::int64_t> w_;
  bool record_;
  std::vector<std::int64_t> lambda_;
  std::vector<std::int64_t> col_max_;
  std::vector<std::size_t> row_match_;
  std::vector<std::size_t> col_match_;
  std::vector<TraceStep>* trace_ = nullptr;

  // Per-phase scratch.
  std::vector<bool> in_row_, in_col_;
  std::vector<std::int64_t> slack_;
  std::vector<std::size_t> slack_row_, parent_row_, forest_;
};

}  // namespace

std::string_view to_string(TraceKind kind) noexcept {
  switch (kind) {
    case TraceKind::Preparation: return "Preparation";
    case TraceKind::Augment: return "Augment";
    case TraceKind::RaiseThirdClass: return "RaiseThirdClass";
  }
  return "?";
}

std::string_view to_string(RowClass c) noexcept {
  switch (c) {
    case RowClass::First: return "first";
    case RowClass::Second: return "second";
    case RowClass::Third: return "third";
    case RowClass::Lower: return "lower";
  }
  return "?";
}

std::size_t CanonResult::starred_row(std::size_t column) const {
  for (const auto& [r, c] : starred)
    if (c == column) return r;
  throw DimensionError("column " + std::to_string(column + 1) + " holds no transversal maximum");
}

Prepared prepare(const OrderMatrix& a) {
  const std::size_t n = a.n();
  std::vector<OrderValue> col_max(n);
  for (std::size_t j = 0; j < n; ++j) col_max[j] = a.column_max(j);

  std::vector<std::int64_t> inc(n, 0);
  std::vector<std::size_t> empty;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t gap = kUnbounded;
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_finite()) gap = std::min(gap, col_max[j].value() - a(i, j).value());
    if (gap == kUnbounded) {
      empty.push_back(i);
      continue;
    }
    inc[i] = std::max<std::int64_t>(0, gap);
  }
  if (!empty.empty()) {
    throw DegenerateError("rows " + index_set(empty) + " contain no finite entry", empty);
  }
  return {a.raised(inc), std::move(inc)};
}

bool is_canon(const OrderMatrix& a, std::span<const std::int64_t> lambda) {
  if (lambda.size() != a.n()) throw DimensionError("canon vector has wrong length");
  const OrderMatrix b = a.raised(lambda);
  OrderMatrix maxima(a.n(), kNegInf);
  for (std::size_t j = 0; j < a.n(); ++j) {
    const OrderValue m = b.column_max(j);
    if (m.is_neg_infinity()) return false;
    for (std::size_t i = 0; i < a.n(); ++i)
      if (b(i, j) == m) maxima.set(i, j, 0);
  }
  return has_finite_transversal(maxima);
}

CanonResult minimal_canon(const OrderMatrix& a, const CanonOptions& options) {
  const std::size_t n = a.n();
  const FiniteMatching matching = finite_matching(a);
  if (!matching.perfect()) {
    throw DegenerateError("no finite transversal: rows " + index_set(matching.hall_rows) +
                              " match only columns " + index_set(matching.hall_columns),
                          matching.hall_rows, matching.hall_columns);
  }

  CanonResult out;
  Prepared prep = prepare(a);
  if (options.record_trace) out.trace.push_back({TraceKind::Preparation, prep.increments, std::nullopt});

  CanonSolver solver(a, options.record_trace);
  out.ell = solver.run(std::move(prep.increments), out.trace);
  const std::vector<std::size_t> match = solver.row_match();

  out.Lambda = *std::max_element(out.ell.begin(), out.ell.end());
  out.alpha.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.alpha[i] = out.Lambda - out.ell[i];
  out.beta.assign(n, kNegInf);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out.beta[j] = std::max(out.beta[j], a(i, j) + OrderValue(-out.alpha[i]));

  out.jacobi_number = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.starred.emplace_back(i, match[i]);
    out.jacobi_number += a(i, match[i]);
  }
  return out;
}

OrderValue jacobi_number(const OrderMatrix& a) {
  if (!has_finite_transversal(a)) return kNegInf;
  return minimal_canon(a).jacobi_number;
}

std::vector<std::int64_t> brute_force_minimal_canon(const OrderMatrix& a, std::int64_t box) {
  const std::size_t n = a.n();
  if (n > kBruteCanonMaxN) throw SizeGuardError("brute-force canon search is limited to n <= 4");
  if (box < 0 || box > kBruteCanonMaxBox) throw SizeGuardError("brute-force canon box must lie in [0, 6]");

  std::vector<std::vector<std::int64_t>> canons;
  std::vector<std::int64_t> lambda(n, 0);
  for (;;) {
    if (is_canon(a, lambda)) canons.push_back(lambda);
    std::size_t k = 0;
    while (k < n && lambda[k] == box) lambda[k++] = 0;
    if (k == n) break;
    ++lambda[k];
  }
  if (canons.empty()) throw Error("no canon within the box [0, " + std::to_string(box) + "]^n");

  auto sum = [](const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  std::sort(canons.begin(), canons.end(), [&](const auto& x, const auto& y) {
    const auto sx = sum(x), sy = sum(y);
    return sx != sy ? sx < sy : x < y;
  });
  const std::vector<std::int64_t>& best = canons.front();
  for (const auto& c : canons)
    for (std::size_t i = 0; i < n; ++i)
      if (best[i] > c[i]) throw Error("canons within the box have no componentwise minimum");
  return best;
}

}  // namespace jacobi

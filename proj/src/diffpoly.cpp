#include "jacobi/diffpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "expression_parser.hpp"
#include "jacobi/error.hpp"

namespace jacobi {

std::string to_string(const Rational& q) { return q.get_str(); }

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto x = a.begin(), y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && x->first < y->first)) {
      out.push_back(*x++);
    } else if (x == a.end() || y->first < x->first) {
      out.push_back(*y++);
    } else {
      out.emplace_back(x->first, x->second + y->second);
      ++x;
      ++y;
    }
  }
  return out;
}

DiffPolynomial DiffPolynomial::constant(const Rational& c) { return term(c, {}); }

DiffPolynomial DiffPolynomial::variable(DerivativeVar v, std::uint32_t power) {
  if (power == 0) return constant(1);
  return term(1, Monomial{{v, power}});
}

DiffPolynomial DiffPolynomial::term(const Rational& c, Monomial m) {
  std::sort(m.begin(), m.end());
  Monomial merged;
  for (const auto& [v, e] : m) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += e;
    } else {
      merged.emplace_back(v, e);
    }
  }
  DiffPolynomial p;
  p.add_term(merged, c);
  return p;
}

bool DiffPolynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational DiffPolynomial::constant_term() const { return coefficient({}); }

Rational DiffPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<DerivativeVar> DiffPolynomial::variables() const {
  std::set<DerivativeVar> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

Rational DiffPolynomial::evaluate(const Point& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end()) {
        throw EvaluationError("no value assigned to derivative " + std::to_string(v.order) + " of variable " +
                              std::to_string(v.var + 1));
      }
      for (std::uint32_t k = 0; k < e; ++k) t *= it->second;
    }
    sum += t;
  }
  return sum;
}

void DiffPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
  DiffPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

DiffPolynomial DiffPolynomial::operator-() const {
  DiffPolynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

DiffPolynomial DiffPolynomial::pow(std::uint32_t k) const {
  DiffPolynomial result = constant(1), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

DiffPolynomial total_derivative(const DiffPolynomial& p) {
  DiffPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    // d/dt (v^e · rest) = e · v^(e-1) · v' · rest, summed over the factors.
    for (std::size_t k = 0; k < m.size(); ++k) {
      const auto [v, e] = m[k];
      Monomial lowered;
      lowered.reserve(m.size() + 1);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r != k) {
          lowered.push_back(m[r]);
        } else if (e > 1) {
          lowered.emplace_back(v, e - 1);
        }
      }
      lowered.emplace_back(DerivativeVar{v.var, v.order + 1}, 1);
      out += DiffPolynomial::term(c * e, std::move(lowered));
    }
  }
  return out;
}

DiffPolynomial total_derivative(const DiffPolynomial& p, std::uint32_t times) {
  DiffPolynomial out = p;
  for (std::uint32_t k = 0; k < times; ++k) out = total_derivative(out);
  return out;
}

DiffPolynomial partial_derivative(const DiffPolynomial& p, DerivativeVar v) {
  DiffPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    auto it = std::find_if(m.begin(), m.end(), [&](const auto& f) { return f.first == v; });
    if (it == m.end()) continue;
    Monomial reduced(m);
    auto& factor = reduced[static_cast<std::size_t>(it - m.begin())];
    const std::uint32_t e = factor.second;
    if (e == 1) {
      reduced.erase(reduced.begin() + (it - m.begin()));
    } else {
      factor.second = e - 1;
    }
    out += DiffPolynomial::term(c * e, std::move(reduced));
  }
  return out;
}

OrderValue order_in(const DiffPolynomial& p, std::size_t var) {
  OrderValue best = kNegInf;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m)
      if (v.var == var) best = std::max(best, OrderValue(v.order));
  return best;
}

std::string to_string(DerivativeVar d, std::span<const std::string> variables) {
  std::string name = d.var < variables.size() ? variables[d.var] : "x" + std::to_string(d.var + 1);
  if (d.order == 0) return name;
  if (d.order <= 3) return name + std::string(d.order, '\'');
  return name + "^(" + std::to_string(d.order) + ")";
}

std::string to_string(const DiffPolynomial& p, std::span<const std::string> variables) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m.empty() || magnitude != 1) {
      os << magnitude.get_str();
      need_star = true;
    }
    for (const auto& [v, e] : m) {
      if (need_star) os << '*';
      os << to_string(v, variables);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

DiffPolynomial parse_polynomial(std::string_view text, std::span<const std::string> variables) {
  auto resolve = [variables](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < variables.size(); ++k)
      if (variables[k] == name) return k;
    return std::nullopt;
  };
  return detail::ExpressionParser(text, resolve).parse_all();
}

namespace detail {

void ExpressionParser::fail_at(const std::string& message, std::size_t pos) const {
  throw ParseError(message, line_, offset_ + pos + 1);
}

void ExpressionParser::skip_space() {
  while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
}

DiffPolynomial ExpressionParser::parse_all() {
  DiffPolynomial p = parse_expression();
  skip_space();
  if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
  return p;
}

DiffPolynomial ExpressionParser::parse_expression() {
  skip_space();
  bool negate = false;
  if (peek() == '+' || peek() == '-') {
    negate = peek() == '-';
    ++pos_;
  }
  DiffPolynomial sum = parse_term();
  if (negate) sum = -sum;
  for (;;) {
    skip_space();
    const char c = peek();
    if (c != '+' && c != '-') return sum;
    ++pos_;
    if (c == '+') {
      sum += parse_term();
    } else {
      sum -= parse_term();
    }
  }
}

DiffPolynomial ExpressionParser::parse_term() {
  DiffPolynomial product = parse_factor();
  for (;;) {
    skip_space();
    if (peek() != '*') return product;
    ++pos_;
    product = product * parse_factor();
  }
}

DiffPolynomial ExpressionParser::parse_factor() {
  DiffPolynomial base = parse_primary();
  for (;;) {
    skip_space();
    if (peek() != '^') return base;
    const std::size_t at = pos_;
    ++pos_;
    skip_space();
    if (peek() == '(') fail_at("derivative order '^(k)' must follow a variable name directly", at);
    base = base.pow(parse_small_integer("exponent"));
  }
}

std::string ExpressionParser::parse_digits() {
  const std::size_t start = pos_;
  while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

std::uint32_t ExpressionParser::parse_small_integer(const char* what) {
  skip_space();
  const std::size_t start = pos_;
  const std::string digits = parse_digits();
  if (digits.empty()) fail(std::string("expected ") + what);
  if (digits.size() > 6) fail_at(std::string(what) + " too large", start);
  return static_cast<std::uint32_t>(std::stoul(digits));
}

DiffPolynomial ExpressionParser::parse_primary() {
  skip_space();
  const char c = peek();
  if (at_end()) fail("unexpected end of expression");

  if (std::isdigit(static_cast<unsigned char>(c))) {
    Rational value(parse_digits());
    skip_space();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      const std::string den = parse_digits();
      if (den.empty()) fail("expected denominator");
      Rational d(den);
      if (d == 0) fail_at("zero denominator", at);
      value /= d;
    }
    value.canonicalize();
    return DiffPolynomial::constant(value);
  }

  if (c == '(') {
    if (++depth_ > 256) fail("expression nested too deeply");
    ++pos_;
    DiffPolynomial inner = parse_expression();
    skip_space();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    --depth_;
    return inner;
  }

  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto index = resolve_(name);
    if (!index) fail_at("unknown variable '" + std::string(name) + "'", start);

    std::uint32_t order = 0;
    if (peek() == '\'') {
      while (peek() == '\'') {
        ++pos_;
        ++order;
      }
    } else if (peek() == '^') {
      // '^(' is a derivative order; a bare '^k' is a power, handled by parse_factor.
      std::size_t look = pos_ + 1;
      while (look < text_.size() && (text_[look] == ' ' || text_[look] == '\t')) ++look;
      if (look < text_.size() && text_[look] == '(') {
        pos_ = look + 1;
        order = parse_small_integer("derivative order");
        skip_space();
        if (peek() != ')') fail("expected ')' after derivative order");
        ++pos_;
      }
    }
    return DiffPolynomial::variable({*index, order});
  }

  fail(std::string("unexpected character '") + c + "'");
}

}  // namespace detail
}  // namespace jacobi

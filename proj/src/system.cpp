#include "jacobi/system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "expression_parser.hpp"
#include "jacobi/error.hpp"

namespace jacobi {

std::size_t DiffSystem::variable_index(std::string_view name_or_number) const {
  for (std::size_t k = 0; k < variables.size(); ++k)
    if (variables[k] == name_or_number) return k;
  std::size_t number = 0;
  const auto* end = name_or_number.data() + name_or_number.size();
  auto [ptr, ec] = std::from_chars(name_or_number.data(), end, number);
  if (ec == std::errc{} && ptr == end && number >= 1 && number <= variables.size()) return number - 1;
  throw Error("unknown variable '" + std::string(name_or_number) + "'");
}

DiffSystem parse_system(std::string_view text) {
  DiffSystem sys;
  auto resolve = [&sys](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < sys.variables.size(); ++k)
      if (sys.variables[k] == name) return k;
    sys.variables.emplace_back(name);
    return sys.variables.size() - 1;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    ++line_no;
    start = stop + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      if (stop == text.size()) break;
      continue;
    }

    std::size_t body = 0;
    std::string name;
    if (const auto colon = line.find(':'); colon != std::string_view::npos) {
      std::string_view label = line.substr(0, colon);
      while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front()))) label.remove_prefix(1);
      while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.remove_suffix(1);
      const bool ident = !label.empty() && (std::isalpha(static_cast<unsigned char>(label[0])) || label[0] == '_') &&
                         std::all_of(label.begin(), label.end(),
                                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
      if (!ident) throw ParseError("invalid equation name", line_no, 1);
      name = std::string(label);
      body = colon + 1;
    } else {
      name = "u" + std::to_string(sys.equations.size() + 1);
    }

    detail::ExpressionParser parser(line.substr(body), resolve, line_no, body);
    DiffPolynomial lhs = parser.parse_expression();
    parser.skip_space();
    if (parser.peek() == '=') {
      detail::ExpressionParser rhs_parser(line.substr(body + parser.position() + 1), resolve, line_no,
                                          body + parser.position() + 1);
      lhs -= rhs_parser.parse_all();
    } else if (!parser.at_end()) {
      parser.fail(std::string("unexpected character '") + parser.peek() + "'");
    }
    if (std::find(sys.equation_names.begin(), sys.equation_names.end(), name) != sys.equation_names.end()) {
      throw ParseError("duplicate equation name '" + name + "'", line_no, 1);
    }
    sys.equation_names.push_back(std::move(name));
    sys.equations.push_back(std::move(lhs));
    if (stop == text.size()) break;
  }

  if (sys.equations.empty()) throw ParseError("system contains no equation", line_no, 1);
  if (sys.equations.size() != sys.variables.size()) {
    throw DimensionError("system has " + std::to_string(sys.equations.size()) + " equations in " +
                         std::to_string(sys.variables.size()) + " unknowns; it must be square");
  }
  return sys;
}

DiffSystem make_system(std::vector<std::string> variables, const std::vector<std::string>& equations) {
  if (variables.size() != equations.size()) throw DimensionError("system must be square");
  DiffSystem sys;
  sys.variables = std::move(variables);
  for (std::size_t k = 0; k < equations.size(); ++k) {
    sys.equation_names.push_back("u" + std::to_string(k + 1));
    sys.equations.push_back(parse_polynomial(equations[k], sys.variables));
  }
  return sys;
}

std::string to_string(const DiffSystem& system) {
  std::ostringstream os;
  for (std::size_t i = 0; i < system.n(); ++i)
    os << system.equation_names[i] << ": " << to_string(system.equations[i], system.variables) << " = 0\n";
  return os.str();
}

OrderMatrix order_matrix_of(const DiffSystem& system) {
  OrderMatrix a(system.n());
  for (std::size_t i = 0; i < system.n(); ++i)
    for (std::size_t j = 0; j < system.n(); ++j) a.set(i, j, order_in(system.equations[i], j));
  return a;
}

}  // namespace jacobi

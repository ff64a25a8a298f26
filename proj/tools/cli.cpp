#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "jacobi/bounds.hpp"
#include "jacobi/canon.hpp"
#include "jacobi/error.hpp"
#include "jacobi/fixtures.hpp"
#include "jacobi/jacobian.hpp"
#include "jacobi/json_io.hpp"
#include "jacobi/reduction.hpp"
#include "jacobi/resolvent.hpp"
#include "jacobi/system.hpp"

namespace jacobi::cli {
namespace {

// Failure already reported; carries the exit status.
struct Exit {
  int code;
};

struct Input {
  std::string path;
  std::string bytes;
  std::optional<DiffSystem> system;
  OrderMatrix matrix{1};
  std::vector<std::string> names;
};

bool looks_like_json(const std::string& bytes) {
  auto it = std::find_if(bytes.begin(), bytes.end(), [](unsigned char c) { return !std::isspace(c); });
  return it != bytes.end() && *it == '{';
}

Input load(const std::string& path, bool require_system, std::ostream& err) {
  Input in;
  in.path = path;
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << path << ": cannot read file\n";
    throw Exit{kUsageError};
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  in.bytes = buf.str();

  try {
    if (looks_like_json(in.bytes)) {
      if (require_system) {
        err << path << ": expected a system of equations, got a matrix\n";
        throw Exit{kUsageError};
      }
      in.matrix = parse_matrix_json(in.bytes);
      for (std::size_t j = 0; j < in.matrix.n(); ++j) in.names.push_back("x" + std::to_string(j + 1));
    } else {
      in.system = parse_system(in.bytes);
      in.matrix = order_matrix_of(*in.system);
      in.names = in.system->variables;
    }
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << '\n';
    throw Exit{kUsageError};
  } catch (const Error& e) {
    err << path << ": " << e.what() << '\n';
    throw Exit{kUsageError};
  }
  return in;
}

std::string tuple(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? ", " : "") << xs[k];
  return os.str() + ")";
}

std::string tuple(const std::vector<OrderValue>& xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? ", " : "") << xs[k];
  return os.str() + ")";
}

std::string row_set(const std::vector<RowClass>& classes, RowClass c) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] != c) continue;
    os << (first ? "" : ", ") << i + 1;
    first = false;
  }
  return os.str() + "}";
}

// Matrix laid out in rows; starred entries carry '*', and with `underline`
// the entries tying the starred maximum of their column carry '_'.
void print_matrix(std::ostream& out, const OrderMatrix& m, const std::vector<std::pair<std::size_t, std::size_t>>& stars,
                  bool underline) {
  const std::size_t n = m.n();
  std::vector<std::size_t> star_row(n, n);
  for (const auto& [r, c] : stars) star_row[c] = r;
  std::size_t width = 4;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) width = std::max(width, to_string(m(i, j)).size());
  for (std::size_t i = 0; i < n; ++i) {
    out << "  ";
    for (std::size_t j = 0; j < n; ++j) {
      char mark = ' ';
      if (star_row[j] == i) {
        mark = '*';
      } else if (underline && star_row[j] < n && m(i, j).is_finite() && m(i, j) == m(star_row[j], j)) {
        mark = '_';
      }
      out << std::setw(static_cast<int>(width) + 1) << to_string(m(i, j)) << mark;
    }
    out << '\n';
  }
}

void print_bounds(std::ostream& out, const BoundsReport& b) {
  out << "bounds:\n"
      << "  jacobi (strong) " << b.jacobi_strong << "\n"
      << "  jacobi (weak)   " << b.jacobi_weak << "\n"
      << "  greenspan       " << b.greenspan << "\n"
      << "  bezout dual     " << b.bezout_dual << "\n";
  for (const auto& r : b.relations) out << "  " << r << '\n';
  for (const auto& u : b.unavailable) out << "  unavailable: " << u << '\n';
  out << "  note: greenspan sums the column maxima r_j over the columns j\n";
}

void print_canon(std::ostream& out, const OrderMatrix& a, const CanonResult& canon, bool underline) {
  out << "canon A + ell (transversal maxima marked *):\n";
  print_matrix(out, a.raised(canon.ell), canon.starred, underline);
  out << "J      = " << canon.jacobi_number << '\n'
      << "ell    = " << tuple(canon.ell) << '\n'
      << "Lambda = " << canon.Lambda << '\n'
      << "alpha  = " << tuple(canon.alpha) << '\n'
      << "beta   = " << tuple(canon.beta) << '\n';
}

void print_trace(std::ostream& out, const std::vector<TraceStep>& trace) {
  out << "trace:\n";
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto& s = trace[k];
    out << "  " << std::setw(3) << k + 1 << ' ' << std::left << std::setw(16) << to_string(s.kind) << std::right
        << tuple(s.row_increments);
    if (s.classes) {
      out << "  first " << row_set(*s.classes, RowClass::First) << " second " << row_set(*s.classes, RowClass::Second)
          << " third " << row_set(*s.classes, RowClass::Third) << " lower " << row_set(*s.classes, RowClass::Lower);
    }
    out << '\n';
  }
}

CanonResult canon_or_exit(const Input& in, const OrderMatrix& a, bool trace, std::ostream& err) {
  try {
    return minimal_canon(a, {.record_trace = trace});
  } catch (const DegenerateError& e) {
    err << in.path << ": " << e.what() << '\n';
    throw Exit{kDegenerate};
  }
}

// Brute-force cross-checks; returns false on a mismatch.
bool oracle(const OrderMatrix& a, const CanonResult& canon, Json& report, std::ostream& out, bool json) {
  Json o;
  bool ok = true;
  if (a.n() <= kBruteForceMaxN) {
    const OrderValue j = brute_force_jacobi_number(a);
    o["jacobiNumber"] = to_json(j);
    ok = ok && j == canon.jacobi_number;
  } else {
    o["jacobiNumber"] = nullptr;
  }
  if (a.n() <= kBruteCanonMaxN && canon.Lambda <= kBruteCanonMaxBox) {
    const auto ell = brute_force_minimal_canon(a, canon.Lambda);
    o["minimalCanon"] = ell;
    ok = ok && ell == canon.ell;
  } else {
    o["minimalCanon"] = nullptr;
  }
  o["agrees"] = ok;
  if (!json) {
    out << "oracle: brute-force J " << (o["jacobiNumber"].is_null() ? "skipped (n > 9)" : o["jacobiNumber"].dump())
        << ", brute-force ell " << (o["minimalCanon"].is_null() ? "skipped" : o["minimalCanon"].dump()) << " -> "
        << (ok ? "agrees" : "MISMATCH") << '\n';
  }
  report["oracle"] = std::move(o);
  return ok;
}

std::vector<std::string> grid_strings(const PolyGrid& grid, const std::vector<std::string>& names, Json& rows) {
  std::vector<std::string> lines;
  rows = Json::array();
  for (const auto& row : grid) {
    Json r = Json::array();
    std::string line;
    for (const auto& p : row) {
      const std::string s = to_string(p, names);
      r.push_back(s);
      line += (line.empty() ? "" : " | ") + s;
    }
    rows.push_back(std::move(r));
    lines.push_back(line);
  }
  return lines;
}

std::string status_line(const JacobianStatus& s, const std::vector<std::string>& names) {
  std::ostringstream os;
  switch (s.kind) {
    case JacobianStatus::Kind::NonzeroWitnessed: {
      os << "nonzero (witnessed): det = " << to_string(s.value);
      if (s.witness.empty()) {
        os << " (constant)";
        break;
      }
      os << " at {";
      bool first = true;
      for (const auto& [d, v] : s.witness) {
        os << (first ? "" : ", ") << to_string(d, names) << " = " << to_string(v);
        first = false;
      }
      os << '}';
      break;
    }
    case JacobianStatus::Kind::ZeroSymbolic: os << "zero (symbolic)"; break;
    case JacobianStatus::Kind::ProbablyZero: os << "probably zero after " << s.trials << " evaluations (flagged)"; break;
    case JacobianStatus::Kind::NotComputed: os << "not computed"; break;
  }
  return os.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int matrix_analyze(const std::string& path, const std::string& convention, bool with_oracle, bool trace, bool json,
                   std::ostream& out, std::ostream& err) {
  const Input in = load(path, false, err);
  const OrderMatrix a = convention == "weak" ? to_weak(in.matrix) : in.matrix;
  const CanonResult canon = canon_or_exit(in, a, trace, err);
  const BoundsReport bounds = bounds_report(in.matrix);

  Json report;
  report["inputDigest"] = digest(in.bytes);
  report["convention"] = convention;
  report["matrix"] = to_json(a);
  report["canon"] = canon_to_json(canon);
  report["bounds"] = to_json(bounds);
  report["truncatedJacobian"] = to_json(JacobianStatus{}, in.names);
  if (trace) report["trace"] = trace_to_json(canon.trace);

  if (!json) {
    out << "input      " << report["inputDigest"].get<std::string>() << '\n' << "convention " << convention << '\n';
    out << "order matrix A:\n";
    print_matrix(out, a, {}, false);
    print_canon(out, a, canon, trace);
    print_bounds(out, bounds);
    if (trace) print_trace(out, canon.trace);
  }
  const bool ok = !with_oracle || oracle(a, canon, report, out, json);
  if (json) emit(out, report);
  if (!ok) {
    err << path << ": oracle mismatch\n";
    return kOracleMismatch;
  }
  return kSuccess;
}

int system_analyze(const std::string& path, bool check_jacobian, bool with_oracle, bool json, std::ostream& out,
                   std::ostream& err) {
  const Input in = load(path, true, err);
  const DiffSystem& sys = *in.system;
  const CanonResult canon = canon_or_exit(in, in.matrix, false, err);
  const BoundsReport bounds = bounds_report(in.matrix);

  Json report;
  report["inputDigest"] = digest(in.bytes);
  report["variables"] = sys.variables;
  Json eqs = Json::array();
  for (const auto& e : sys.equations) eqs.push_back(to_string(e, sys.variables));
  report["equations"] = std::move(eqs);
  report["matrix"] = to_json(in.matrix);
  report["canon"] = canon_to_json(canon);
  report["bounds"] = to_json(bounds);

  JacobianStatus status;
  std::vector<std::string> grid_lines;
  Json grid_json;
  if (check_jacobian) {
    try {
      const PolyGrid grid = truncated_jacobian(sys, canon);
      grid_lines = grid_strings(grid, sys.variables, grid_json);
      status = check_nonvanishing(grid);
    } catch (const DegenerateError& e) {
      err << path << ": " << e.what() << '\n';
      return kDegenerate;
    }
  }
  report["truncatedJacobian"] = to_json(status, sys.variables);
  if (check_jacobian) report["truncatedJacobian"]["grid"] = grid_json;
  const ReductionPlan plan = shortest_reduction_plan(sys, canon);
  report["reductionPlan"] = to_json(plan, sys.variables);

  if (!json) {
    out << "input      " << report["inputDigest"].get<std::string>() << '\n';
    for (std::size_t i = 0; i < sys.n(); ++i)
      out << sys.equation_names[i] << ": " << to_string(sys.equations[i], sys.variables) << " = 0\n";
    out << "order matrix A (columns ";
    for (std::size_t j = 0; j < sys.n(); ++j) out << (j ? ", " : "") << sys.variables[j];
    out << "):\n";
    print_matrix(out, in.matrix, {}, false);
    print_canon(out, in.matrix, canon, false);
    print_bounds(out, bounds);
    if (check_jacobian) {
      out << "truncated jacobian:\n";
      for (const auto& l : grid_lines) out << "  " << l << '\n';
      out << "  |det| " << status_line(status, sys.variables) << '\n';
    }
    out << "shortest reduction:";
    for (std::size_t i = 0; i < sys.n(); ++i)
      out << (i ? ", " : " ") << sys.equation_names[i] << ' ' << plan.ell[i] << (plan.ell[i] == 1 ? " time" : " times");
    out << '\n';
  }
  const bool ok = !with_oracle || oracle(in.matrix, canon, report, out, json);
  if (json) emit(out, report);
  if (!ok) {
    err << path << ": oracle mismatch\n";
    return kOracleMismatch;
  }
  return kSuccess;
}

int resolvent(const std::string& path, const std::string& variable, bool json, std::ostream& out,
              std::ostream& err) {
  const Input in = load(path, false, err);
  std::size_t j0 = 0;
  try {
    if (in.system) {
      j0 = in.system->variable_index(variable);
    } else {
      DiffSystem names;
      names.variables = in.names;
      j0 = names.variable_index(variable);
    }
  } catch (const Error& e) {
    err << path << ": " << e.what() << '\n';
    return kUsageError;
  }
  const CanonResult canon = canon_or_exit(in, in.matrix, false, err);
  ResolventPlan plan;
  try {
    plan = resolvent_orders(in.matrix, canon, j0);
  } catch (const InfeasibleError& e) {
    err << path << ": " << e.what() << '\n';
    return kDegenerate;
  }
  const std::vector<OrderValue> minors = forma_elegans_orders(in.matrix, j0);
  bool agrees = true;
  for (std::size_t i = 0; i < minors.size(); ++i) agrees = agrees && minors[i] == OrderValue(plan.h[i]);

  Json report;
  report["inputDigest"] = digest(in.bytes);
  report["variable"] = in.names[j0];
  report["resolvent"] = to_json(plan);
  Json fe = Json::array();
  for (OrderValue v : minors) fe.push_back(to_json(v));
  report["minorTransversalOrders"] = std::move(fe);
  report["minorTransversalAgrees"] = agrees;
  std::vector<Prolongation> prolongation;
  if (in.system) {
    prolongation = resolvent_prolongation(*in.system, plan);
    report["prolongation"] = to_json(std::span<const Prolongation>(prolongation));
    std::size_t count = 0;
    for (const auto& p : prolongation) count += p.orders.size();
    report["prolongedEquationCount"] = count;
  }

  if (json) {
    emit(out, report);
    return kSuccess;
  }
  std::vector<std::pair<std::size_t, std::size_t>> stars = canon.starred;
  out << "input      " << report["inputDigest"].get<std::string>() << '\n'
      << "resolvent for " << in.names[j0] << " (anchor row " << plan.i0 + 1 << ")\n"
      << "A'' (attachment complete):\n";
  print_matrix(out, plan.a_double_prime, stars, true);
  out << "A''' (anchor star raised to J = " << plan.resolvent_order << "):\n";
  print_matrix(out, plan.a_triple_prime, stars, true);
  out << "h = " << tuple(plan.h) << "  (minor transversal sums " << tuple(minors) << (agrees ? ", agree" : ", DIFFER")
      << ")\n";
  if (in.system) {
    for (const auto& p : prolongation)
      out << "  differentiate " << in.system->equation_names[p.equation] << ' ' << p.orders.back()
          << (p.orders.back() == 1 ? " time\n" : " times\n");
  }
  return kSuccess;
}

int reduction(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  const Input in = load(path, true, err);
  const DiffSystem& sys = *in.system;
  const CanonResult canon = canon_or_exit(in, in.matrix, false, err);
  const ReductionPlan plan = shortest_reduction_plan(sys, canon);
  const std::vector<DiffPolynomial> eqs = prolonged_equations(sys, plan.prolongation);
  const JacobianStatus status = check_nonvanishing(solved_set_jacobian(sys, plan));

  Json report;
  report["inputDigest"] = digest(in.bytes);
  report["variables"] = sys.variables;
  report["plan"] = to_json(plan, sys.variables);
  Json lines = Json::array();
  for (const auto& e : eqs) lines.push_back(to_string(e, sys.variables));
  report["prolongedEquations"] = std::move(lines);
  report["solvedSetJacobian"] = to_json(status, sys.variables);
  if (json) {
    emit(out, report);
    return kSuccess;
  }
  out << "input      " << report["inputDigest"].get<std::string>() << '\n'
      << "ell = " << tuple(plan.ell) << ", order " << plan.order_total << '\n';
  std::size_t row = 0;
  for (const auto& p : plan.prolongation) {
    for (std::uint32_t k : p.orders) {
      out << "  " << sys.equation_names[p.equation] << std::string(k <= 3 ? k : 0, '\'')
          << (k > 3 ? "^(" + std::to_string(k) + ")" : "") << ": " << to_string(eqs[row++], sys.variables) << " = 0\n";
    }
  }
  out << "solved for:";
  for (const auto& d : plan.solved_set) out << ' ' << to_string(d, sys.variables);
  out << "\nnormal form leading derivatives:";
  for (const auto& d : plan.leading) out << ' ' << to_string(d, sys.variables);
  out << "\njacobian wrt solved set: " << status_line(status, sys.variables) << '\n';
  return kSuccess;
}

int bounds(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  const Input in = load(path, false, err);
  const BoundsReport report = bounds_report(in.matrix);
  if (json) {
    emit(out, to_json(report));
  } else {
    print_bounds(out, report);
  }
  return kSuccess;
}

int fixtures(const std::string& name, std::ostream& out, std::ostream& err) {
  if (name.empty()) {
    for (const auto& f : golden_fixtures()) out << f.name << '\n';
    return kSuccess;
  }
  const Fixture* f = find_fixture(name);
  if (!f) {
    err << "unknown fixture '" << name << "'\n";
    return kUsageError;
  }
  out << f->content;
  return kSuccess;
}

}  // namespace

std::string digest(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  os << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int k = 0; k < len; ++k) os << std::setw(2) << static_cast<int>(md[k]);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobi order-bound analysis of square ODE systems", "jacobi"};
  app.require_subcommand(1);

  std::string file, convention = "strong", variable, fixture_name;
  bool json = false, with_oracle = false, trace = false, check_jacobian = false;

  auto* matrix = app.add_subcommand("matrix", "Analyze an order matrix");
  matrix->require_subcommand(1);
  auto* matrix_analyze_cmd = matrix->add_subcommand("analyze", "Minimal canon, Jacobi number and bounds");
  matrix_analyze_cmd->add_option("file", file, "Matrix JSON (or system text)")->required();
  matrix_analyze_cmd->add_option("--convention", convention, "Absent unknowns: strong (-inf) or weak (0)")
      ->check(CLI::IsMember({"strong", "weak"}));
  matrix_analyze_cmd->add_flag("--oracle", with_oracle, "Cross-check with brute-force enumeration");
  matrix_analyze_cmd->add_flag("--trace", trace, "Include the algorithm trace");
  matrix_analyze_cmd->add_flag("--json", json, "JSON output");

  auto* system = app.add_subcommand("system", "Analyze a system of equations");
  system->require_subcommand(1);
  auto* system_analyze_cmd = system->add_subcommand("analyze", "Order matrix, canon, truncated Jacobian, plan");
  system_analyze_cmd->add_option("file", file, "System text")->required();
  system_analyze_cmd->add_flag("--check-jacobian", check_jacobian, "Decide nonvanishing of the truncated Jacobian");
  system_analyze_cmd->add_flag("--oracle", with_oracle, "Cross-check with brute-force enumeration");
  system_analyze_cmd->add_flag("--json", json, "JSON output");

  auto* resolvent_cmd = app.add_subcommand("resolvent", "Differentiation orders for a resolvent representation");
  resolvent_cmd->add_option("file", file, "Matrix JSON or system text")->required();
  resolvent_cmd->add_option("--variable", variable, "Primitive-element variable, by name or 1-based index")
      ->required();
  resolvent_cmd->add_flag("--json", json, "JSON output");

  auto* reduction_cmd = app.add_subcommand("reduction", "Shortest-reduction prolongation plan");
  reduction_cmd->add_option("file", file, "System text")->required();
  reduction_cmd->add_flag("--json", json, "JSON output");

  auto* bounds_cmd = app.add_subcommand("bounds", "Jacobi, Greenspan and Bezout-dual bounds");
  bounds_cmd->add_option("file", file, "Matrix JSON or system text")->required();
  bounds_cmd->add_flag("--json", json, "JSON output");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or print the bundled example inputs");
  fixtures_cmd->add_option("name", fixture_name, "Fixture to print");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*matrix_analyze_cmd) return matrix_analyze(file, convention, with_oracle, trace, json, out, err);
    if (*system_analyze_cmd) return system_analyze(file, check_jacobian, with_oracle, json, out, err);
    if (*resolvent_cmd) return resolvent(file, variable, json, out, err);
    if (*reduction_cmd) return reduction(file, json, out, err);
    if (*bounds_cmd) return bounds(file, json, out, err);
    if (*fixtures_cmd) return fixtures(fixture_name, out, err);
  } catch (const Exit& e) {
    return e.code;
  } catch (const DegenerateError& e) {
    err << file << ": " << e.what() << '\n';
    return kDegenerate;
  } catch (const InfeasibleError& e) {
    err << file << ": " << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    err << file << ": " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace jacobi::cli

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jacobi/bounds.hpp"
#include "jacobi/canon.hpp"
#include "jacobi/error.hpp"
#include "jacobi/jacobian.hpp"
#include "jacobi/json_io.hpp"
#include "jacobi/order_matrix.hpp"
#include "jacobi/reduction.hpp"
#include "jacobi/resolvent.hpp"
#include "jacobi/system.hpp"

namespace py = pybind11;
using namespace jacobi;

namespace {

using Entry = std::optional<std::int64_t>;
using Rows = std::vector<std::vector<Entry>>;

OrderMatrix matrix_from_rows(const Rows& rows) {
  std::vector<std::vector<OrderValue>> values;
  values.reserve(rows.size());
  for (const auto& r : rows) {
    auto& out = values.emplace_back();
    for (const Entry& e : r) out.push_back(e ? OrderValue(*e) : kNegInf);
  }
  return OrderMatrix::from_rows(values);
}

Rows rows_of(const OrderMatrix& a) {
  Rows out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out[i].push_back(a(i, j).to_optional());
  return out;
}

std::vector<Entry> optionals(const std::vector<OrderValue>& xs) {
  std::vector<Entry> out;
  for (OrderValue v : xs) out.push_back(v.to_optional());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Jacobi's bound for ordinary differential systems";

  auto base = py::register_exception<Error>(m, "JacobiError", PyExc_ValueError);
  py::register_exception<DegenerateError>(m, "DegenerateError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<SizeGuardError>(m, "SizeGuardError", base.ptr());

  py::class_<OrderMatrix>(m, "OrderMatrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"), "Rows of non-negative ints; None stands for -inf.")
      .def_static("from_json", &parse_matrix_json, py::arg("text"))
      .def_property_readonly("n", &OrderMatrix::n)
      .def("rows", &rows_of)
      .def("to_json", [](const OrderMatrix& a) { return to_json(a).dump(); })
      .def("__eq__", [](const OrderMatrix& a, const OrderMatrix& b) { return a == b; })
      .def("__repr__", [](const OrderMatrix& a) {
        std::ostringstream os;
        os << "OrderMatrix(" << a << ")";
        return os.str();
      });

  py::class_<CanonResult>(m, "CanonResult")
      .def_readonly("ell", &CanonResult::ell)
      .def_readonly("Lambda", &CanonResult::Lambda)
      .def_readonly("alpha", &CanonResult::alpha)
      .def_property_readonly("beta", [](const CanonResult& c) { return optionals(c.beta); })
      .def_property_readonly("jacobi_number", [](const CanonResult& c) { return c.jacobi_number.to_optional(); })
      .def_readonly("starred", &CanonResult::starred, "(row, column) pairs, 0-based")
      .def("to_json", [](const CanonResult& c) { return canon_to_json(c).dump(); })
      .def("trace_json", [](const CanonResult& c) { return trace_to_json(c.trace).dump(); });

  m.def(
      "minimal_canon",
      [](const OrderMatrix& a, bool trace) { return minimal_canon(a, {.record_trace = trace}); },
      py::arg("matrix"), py::arg("trace") = false);
  m.def(
      "jacobi_number", [](const OrderMatrix& a) { return jacobi_number(a).to_optional(); }, py::arg("matrix"));
  m.def(
      "brute_force_jacobi_number", [](const OrderMatrix& a) { return brute_force_jacobi_number(a).to_optional(); },
      py::arg("matrix"));
  m.def("is_canon", [](const OrderMatrix& a, const std::vector<std::int64_t>& l) { return is_canon(a, l); },
        py::arg("matrix"), py::arg("ell"));
  m.def("isoperimetric_matrix", [](const std::vector<std::int64_t>& e) { return isoperimetric_matrix(e); },
        py::arg("exponents"));

  py::class_<ResolventPlan>(m, "ResolventPlan")
      .def_readonly("j0", &ResolventPlan::j0)
      .def_readonly("i0", &ResolventPlan::i0)
      .def_readonly("h", &ResolventPlan::h)
      .def_readonly("a_double_prime", &ResolventPlan::a_double_prime)
      .def_readonly("a_triple_prime", &ResolventPlan::a_triple_prime)
      .def_property_readonly("order", [](const ResolventPlan& p) { return p.resolvent_order.to_optional(); })
      .def("to_json", [](const ResolventPlan& p) { return to_json(p).dump(); });

  m.def(
      "resolvent_orders", [](const OrderMatrix& a, std::size_t j0) { return resolvent_orders(a, minimal_canon(a), j0); },
      py::arg("matrix"), py::arg("j0"), "Attachment-process orders h for primitive-element column j0 (0-based).");
  m.def(
      "forma_elegans_orders",
      [](const OrderMatrix& a, std::size_t j0) { return optionals(forma_elegans_orders(a, j0)); }, py::arg("matrix"),
      py::arg("j0"));

  py::class_<BoundsReport>(m, "BoundsReport")
      .def_property_readonly("jacobi_strong", [](const BoundsReport& b) { return b.jacobi_strong.to_optional(); })
      .def_property_readonly("jacobi_weak", [](const BoundsReport& b) { return b.jacobi_weak.to_optional(); })
      .def_property_readonly("greenspan", [](const BoundsReport& b) { return b.greenspan.to_optional(); })
      .def_property_readonly("bezout_dual", [](const BoundsReport& b) { return b.bezout_dual.to_optional(); })
      .def_readonly("relations", &BoundsReport::relations)
      .def("to_json", [](const BoundsReport& b) { return to_json(b).dump(); });
  m.def("bounds_report", &bounds_report, py::arg("matrix"));

  py::class_<DiffSystem>(m, "DiffSystem")
      .def_readonly("variables", &DiffSystem::variables)
      .def_readonly("equation_names", &DiffSystem::equation_names)
      .def_property_readonly("n", &DiffSystem::n)
      .def("equations",
           [](const DiffSystem& s) {
             std::vector<std::string> out;
             for (const auto& e : s.equations) out.push_back(to_string(e, s.variables));
             return out;
           })
      .def("order_matrix", &order_matrix_of)
      .def("__str__", [](const DiffSystem& s) { return to_string(s); });
  m.def("parse_system", &parse_system, py::arg("text"));

  m.def(
      "truncated_jacobian",
      [](const DiffSystem& s) {
        const PolyGrid grid = truncated_jacobian(s, minimal_canon(order_matrix_of(s)));
        std::vector<std::vector<std::string>> out;
        for (const auto& row : grid) {
          auto& r = out.emplace_back();
          for (const auto& p : row) r.push_back(to_string(p, s.variables));
        }
        return out;
      },
      py::arg("system"), "Entries of the truncated Jacobian as expression strings.");
  m.def(
      "check_jacobian",
      [](const DiffSystem& s) {
        const PolyGrid grid = truncated_jacobian(s, minimal_canon(order_matrix_of(s)));
        return to_json(check_nonvanishing(grid), s.variables).dump();
      },
      py::arg("system"), "Nonvanishing verdict for the truncated Jacobian, as JSON.");
  m.def(
      "reduction_plan",
      [](const DiffSystem& s) {
        return to_json(shortest_reduction_plan(s, minimal_canon(order_matrix_of(s))), s.variables).dump();
      },
      py::arg("system"), "Shortest-reduction plan as JSON.");
}

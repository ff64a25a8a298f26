#include "jacobi/json_io.hpp"

#include "jacobi/error.hpp"

namespace jacobi {
namespace {

Json indices(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (std::size_t x : xs) out.push_back(x + 1);
  return out;
}

template <typename T>
Json values(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json ints(const std::vector<std::int64_t>& xs) { return Json(xs); }

Json derivative(DerivativeVar d, std::span<const std::string> variables) {
  Json out;
  out["variable"] = d.var < variables.size() ? Json(variables[d.var]) : Json(d.var + 1);
  out["order"] = d.order;
  return out;
}

}  // namespace

Json to_json(OrderValue v) { return v.is_finite() ? Json(v.value()) : Json(nullptr); }

Json to_json(const OrderMatrix& a) {
  Json out;
  out["n"] = a.n();
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    Json row = Json::array();
    for (OrderValue v : a.row(i)) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

OrderMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw Error("matrix JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() <= 0) {
    throw Error("field \"n\" must be a positive integer");
  }
  const auto n = j["n"].get<std::size_t>();
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != n) {
    throw Error("field \"entries\" must be an array of " + std::to_string(n) + " rows");
  }
  OrderMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = j["entries"][i];
    const std::string path = "entries[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n) {
      throw Error(path + " must be an array of " + std::to_string(n) + " values");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Json& v = row[c];
      if (v.is_null()) continue;
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw Error(path + "[" + std::to_string(c) + "] must be a non-negative integer or null");
      }
      a.set(i, c, v.get<std::int64_t>());
    }
  }
  return a;
}

OrderMatrix parse_matrix_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
  return matrix_from_json(j);
}

Json canon_to_json(const CanonResult& canon) {
  Json out;
  out["ell"] = ints(canon.ell);
  out["Lambda"] = canon.Lambda;
  out["alpha"] = ints(canon.alpha);
  out["beta"] = values(canon.beta);
  out["jacobiNumber"] = to_json(canon.jacobi_number);
  Json starred = Json::array();
  for (const auto& [r, c] : canon.starred) starred.push_back({r + 1, c + 1});
  out["starred"] = std::move(starred);
  return out;
}

Json trace_to_json(std::span<const TraceStep> trace) {
  Json out = Json::array();
  for (const auto& step : trace) {
    Json s;
    s["kind"] = std::string(to_string(step.kind));
    s["rowIncrements"] = ints(step.row_increments);
    if (step.classes) {
      Json classes;
      for (RowClass c : {RowClass::First, RowClass::Second, RowClass::Third, RowClass::Lower}) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < step.classes->size(); ++i)
          if ((*step.classes)[i] == c) rows.push_back(i);
        classes[std::string(to_string(c))] = indices(rows);
      }
      s["classes"] = std::move(classes);
    } else {
      s["classes"] = nullptr;
    }
    out.push_back(std::move(s));
  }
  return out;
}

Json to_json(const ResolventPlan& plan) {
  Json out;
  out["j0"] = plan.j0 + 1;
  out["i0"] = plan.i0 + 1;
  out["h"] = ints(plan.h);
  out["aDoublePrime"] = to_json(plan.a_double_prime);
  out["aTriplePrime"] = to_json(plan.a_triple_prime);
  out["order"] = to_json(plan.resolvent_order);
  return out;
}

Json to_json(const BoundsReport& report) {
  Json out;
  out["jacobiStrong"] = to_json(report.jacobi_strong);
  out["jacobiWeak"] = to_json(report.jacobi_weak);
  out["greenspan"] = to_json(report.greenspan);
  out["bezoutDual"] = to_json(report.bezout_dual);
  out["relations"] = report.relations;
  return out;
}

Json to_json(std::span<const Prolongation> prolongation) {
  Json out = Json::array();
  for (const auto& p : prolongation) {
    Json e;
    e["equation"] = p.equation + 1;
    e["orders"] = p.orders;
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const ReductionPlan& plan, std::span<const std::string> variables) {
  Json out;
  out["ell"] = ints(plan.ell);
  out["prolongation"] = to_json(std::span<const Prolongation>(plan.prolongation));
  Json solved = Json::array();
  for (const auto& d : plan.solved_set) solved.push_back(derivative(d, variables));
  out["solvedSet"] = std::move(solved);
  Json leading = Json::array();
  for (const auto& d : plan.leading) leading.push_back(derivative(d, variables));
  out["leading"] = std::move(leading);
  out["knownSetBound"] = ints(plan.known_set_bound);
  out["beta"] = values(plan.beta);
  out["orderTotal"] = to_json(plan.order_total);
  return out;
}

Json to_json(const JacobianStatus& status, std::span<const std::string> variables) {
  Json out;
  out["status"] = std::string(to_string(status.kind));
  if (status.kind == JacobianStatus::Kind::NonzeroWitnessed) {
    Json point = Json::array();
    for (const auto& [d, v] : status.witness) {
      Json p = derivative(d, variables);
      p["value"] = to_string(v);
      point.push_back(std::move(p));
    }
    out["witness"] = std::move(point);
    out["value"] = to_string(status.value);
  }
  if (status.kind != JacobianStatus::Kind::NotComputed) out["trials"] = status.trials;
  return out;
}

}  // namespace jacobi

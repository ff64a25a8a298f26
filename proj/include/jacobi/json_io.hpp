#pragma once

// JSON encodings of matrices and reports. Indices are 1-based and −∞ is
// null. Keys keep insertion order so that output is byte-stable.

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "jacobi/bounds.hpp"
#include "jacobi/canon.hpp"
#include "jacobi/jacobian.hpp"
#include "jacobi/order_matrix.hpp"
#include "jacobi/reduction.hpp"
#include "jacobi/resolvent.hpp"

namespace jacobi {

using Json = nlohmann::ordered_json;

Json to_json(OrderValue v);

// {"n": int, "entries": [[int|null, ...], ...]}
Json to_json(const OrderMatrix& a);
// Throws Error naming the offending JSON path.
OrderMatrix matrix_from_json(const Json& j);
// Parses text then validates; throws ParseError with line/column on syntax errors.
OrderMatrix parse_matrix_json(std::string_view text);

Json canon_to_json(const CanonResult& canon);
// [{"kind": str, "rowIncrements": [int], "classes": {"first": [...], ...} | null}]
Json trace_to_json(std::span<const TraceStep> trace);
Json to_json(const ResolventPlan& plan);
Json to_json(const BoundsReport& report);
Json to_json(const ReductionPlan& plan, std::span<const std::string> variables);
Json to_json(const JacobianStatus& status, std::span<const std::string> variables);
Json to_json(std::span<const Prolongation> prolongation);

}  // namespace jacobi

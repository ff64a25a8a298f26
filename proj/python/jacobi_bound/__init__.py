"""Jacobi's bound for ordinary differential systems."""

from ._core import (
    BoundsReport,
    CanonResult,
    DegenerateError,
    DiffSystem,
    InfeasibleError,
    JacobiError,
    OrderMatrix,
    ParseError,
    ResolventPlan,
    SizeGuardError,
    bounds_report,
    brute_force_jacobi_number,
    check_jacobian,
    forma_elegans_orders,
    is_canon,
    isoperimetric_matrix,
    jacobi_number,
    minimal_canon,
    parse_system,
    reduction_plan,
    resolvent_orders,
    truncated_jacobian,
)

__all__ = [
    "BoundsReport",
    "CanonResult",
    "DegenerateError",
    "DiffSystem",
    "InfeasibleError",
    "JacobiError",
    "OrderMatrix",
    "ParseError",
    "ResolventPlan",
    "SizeGuardError",
    "bounds_report",
    "brute_force_jacobi_number",
    "check_jacobian",
    "forma_elegans_orders",
    "is_canon",
    "isoperimetric_matrix",
    "jacobi_number",
    "minimal_canon",
    "parse_system",
    "reduction_plan",
    "resolvent_orders",
    "truncated_jacobian",
]

"""Exact domination-variant toolkit for flower snarks."""

from ._core import (
    CapacityError,
    FlowerSnark,
    GuardFunction,
    SolveResult,
    VertexSet,
    __version__,
    build_flower_snark,
    certificate,
    certificate_json,
    copy_weights,
    enumerate_valid_sets,
    export_lp,
    formula_value,
    has_cyclic_pattern,
    is_2_dominating,
    is_connected_dominating,
    is_connected_induced,
    is_dominating,
    is_independent_dominating,
    is_minimal_dominating,
    is_roman_function,
    is_secure_dominating,
    is_total_dominating,
    is_weak_roman_function,
    solve,
    undefended_set,
    validate,
    verification_report_json,
    vertex_id,
    vertex_label,
    weight_histogram,
)

__all__ = [
    "CapacityError",
    "FlowerSnark",
    "GuardFunction",
    "SolveResult",
    "VertexSet",
    "__version__",
    "build_flower_snark",
    "certificate",
    "certificate_json",
    "copy_weights",
    "enumerate_valid_sets",
    "export_lp",
    "formula_value",
    "has_cyclic_pattern",
    "is_2_dominating",
    "is_connected_dominating",
    "is_connected_induced",
    "is_dominating",
    "is_independent_dominating",
    "is_minimal_dominating",
    "is_roman_function",
    "is_secure_dominating",
    "is_total_dominating",
    "is_weak_roman_function",
    "solve",
    "undefended_set",
    "validate",
    "verification_report_json",
    "vertex_id",
    "vertex_label",
    "weight_histogram",
]

"""Explicit finite subschemes of P1 x P1 and exact h^0 / h^1 of their twisted ideal sheaves."""
from .local import HORIZONTAL, VERTICAL, PunctualComponent, extract_profile
from .scheme import (
    CohomologyReport,
    FiniteSchemeSpec,
    build_scheme,
    cohomology,
    graph_curve_h1,
    predict_h1,
    predict_h1_multiline,
    restriction_matrix,
)

__all__ = [
    "HORIZONTAL",
    "VERTICAL",
    "CohomologyReport",
    "FiniteSchemeSpec",
    "PunctualComponent",
    "build_scheme",
    "cohomology",
    "extract_profile",
    "graph_curve_h1",
    "predict_h1",
    "predict_h1_multiline",
    "restriction_matrix",
]

"""Graded matrix algebras and Leavitt path algebras of finite no-exit graphs."""

from ._gradlpa import (
    Algebra,
    Error,
    Graph,
    ParseError,
    apply_certificate,
    canonical_form,
    classify,
    corner_by_indices,
    corner_by_vertices,
    direct_sum_iso,
    is_graded_isomorphic,
    is_realizable,
    iso_certificate,
    oracle_iso,
    parse_algebra,
    represent,
    synthesize,
)

__all__ = [
    "Algebra",
    "Error",
    "Graph",
    "ParseError",
    "apply_certificate",
    "canonical_form",
    "classify",
    "corner_by_indices",
    "corner_by_vertices",
    "direct_sum_iso",
    "is_graded_isomorphic",
    "is_realizable",
    "iso_certificate",
    "oracle_iso",
    "parse_algebra",
    "represent",
    "synthesize",
]

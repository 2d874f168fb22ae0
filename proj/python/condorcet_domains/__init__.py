"""Condorcet domain toolkit: restriction, never-conditions, never-last
composition, enumeration and the published-domain catalog."""

from ._core import (
    Domain,
    canonical_form,
    catalog_domain,
    catalog_ids,
    catalog_verify_ok,
    compose,
    decompose,
    enumerate_maximal,
    graph_summary,
    has_maximal_width,
    is_ample,
    is_arrow_single_peaked,
    is_condorcet,
    is_copious,
    is_maximal,
    is_right_obstruction,
    is_single_crossing,
    is_single_peaked,
    single_peaked_domain,
    theorem_hypotheses,
    to_dot,
)

__all__ = [
    "Domain",
    "canonical_form",
    "catalog_domain",
    "catalog_ids",
    "catalog_verify_ok",
    "compose",
    "decompose",
    "enumerate_maximal",
    "graph_summary",
    "has_maximal_width",
    "is_ample",
    "is_arrow_single_peaked",
    "is_condorcet",
    "is_copious",
    "is_maximal",
    "is_right_obstruction",
    "is_single_crossing",
    "is_single_peaked",
    "single_peaked_domain",
    "theorem_hypotheses",
    "to_dot",
]

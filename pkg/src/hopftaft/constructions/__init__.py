"""Builders for Taft algebras, cyclic group algebras, matched pairs, their
bicrossed and smash products, and quadruple morphisms between smash products."""

from .algebras import Presentation, as_field, group_algebra, t_quantum_group, taft
from .matched import (
    MATCHED_PAIR_FAMILIES,
    MatchedPair,
    bicrossed_product,
    matched_pairs,
    smash_conditions,
    smash_product,
    standard_actions,
    standard_matched_pair,
    transport_report,
    trivial_left_action,
    trivial_right_action,
    verify_matched_pair,
)
from .quadruple import CONDITIONS, Quadruple, quadruple_morphism, standard_quadruple
from .rewriting import Generator, QCommutingSystem
from .search import DEFAULT_BUDGET, SearchCandidate, extend_actions, matched_pair_search

__all__ = [
    "CONDITIONS",
    "DEFAULT_BUDGET",
    "Generator",
    "MATCHED_PAIR_FAMILIES",
    "MatchedPair",
    "Presentation",
    "QCommutingSystem",
    "Quadruple",
    "SearchCandidate",
    "as_field",
    "bicrossed_product",
    "extend_actions",
    "group_algebra",
    "matched_pair_search",
    "matched_pairs",
    "quadruple_morphism",
    "smash_conditions",
    "smash_product",
    "standard_actions",
    "standard_matched_pair",
    "standard_quadruple",
    "t_quantum_group",
    "taft",
    "transport_report",
    "trivial_left_action",
    "trivial_right_action",
    "verify_matched_pair",
]

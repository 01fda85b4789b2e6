"""Isomorphism classification of the Hopf algebras T^{xi^t}_{nm^2}(q)."""

from .automorphisms import AutGroup, automorphism_group, check_group_axioms, s_t_elements
from .bruteforce import brute_force_hopf_isos
from .criterion import ClassificationReport, canonical_representative, count_classes, iso_criterion, pairwise_table, partition
from .family import TaftFamily, family
from .witness import BezoutData, IsoWitness, bezout_data, witness_isomorphism

__all__ = [
    "AutGroup",
    "BezoutData",
    "ClassificationReport",
    "IsoWitness",
    "TaftFamily",
    "automorphism_group",
    "bezout_data",
    "brute_force_hopf_isos",
    "canonical_representative",
    "check_group_axioms",
    "count_classes",
    "family",
    "iso_criterion",
    "pairwise_table",
    "partition",
    "s_t_elements",
    "witness_isomorphism",
]

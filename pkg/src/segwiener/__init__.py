"""Steiner k-Wiener indices of trees with segment constraints.

Exact index computation by two independent routes, constructors for the
extremal families, isomorphism-free enumeration, segment-preserving local
moves, and exhaustive verification of the extremal claims at desk scale.
"""

from .enumeration import all_trees, trees_with_segment_count, trees_with_segment_sequence
from .exact import CountOverflowError, binomial
from .generators import balanced_starlike, caterpillar_family, quasi_caterpillar, starlike
from .moves import (
    MoveOutcome,
    Reattach,
    Slide,
    Switch,
    apply_reattach,
    apply_slide,
    apply_switch,
    hill_climb,
    neighbors,
)
from .steiner import steiner_distance, sw_k, sw_k_bruteforce, sw_profile, wiener
from .trees import (
    BackboneView,
    Segment,
    Tree,
    all_backbones,
    backbone,
    canonical_code,
    is_isomorphic,
    is_quasi_caterpillar,
    is_starlike,
    segment_decomposition,
    segment_sequence,
    tree_from_code,
)
from .verify import (
    StructurePredicateSet,
    VerificationReport,
    verify_lemma31,
    verify_max_caterpillar_family,
    verify_max_quasi_caterpillar,
    verify_min_balanced,
    verify_min_starlike,
    verify_structure,
)

__all__ = [
    "BackboneView",
    "CountOverflowError",
    "MoveOutcome",
    "Reattach",
    "Segment",
    "Slide",
    "StructurePredicateSet",
    "Switch",
    "Tree",
    "VerificationReport",
    "all_backbones",
    "all_trees",
    "apply_reattach",
    "apply_slide",
    "apply_switch",
    "backbone",
    "balanced_starlike",
    "binomial",
    "canonical_code",
    "caterpillar_family",
    "hill_climb",
    "is_isomorphic",
    "is_quasi_caterpillar",
    "is_starlike",
    "neighbors",
    "quasi_caterpillar",
    "segment_decomposition",
    "segment_sequence",
    "starlike",
    "steiner_distance",
    "sw_k",
    "sw_k_bruteforce",
    "sw_profile",
    "tree_from_code",
    "trees_with_segment_count",
    "verify_lemma31",
    "verify_max_caterpillar_family",
    "verify_max_quasi_caterpillar",
    "verify_min_balanced",
    "verify_min_starlike",
    "verify_structure",
    "trees_with_segment_sequence",
    "wiener",
]

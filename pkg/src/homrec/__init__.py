"""Reconstruction of pair 2-colorings from their homogeneous sets."""

from .coloring import (
    Coloring,
    EdgeSet,
    HomSet,
    HomSignature,
    TripleKind,
    boolean_sum,
    complement,
    difference,
    h_equivalent,
    hom_sets,
    hom_signature,
    pair_count,
    pair_index,
    restrict,
)

__version__ = "0.1.0"

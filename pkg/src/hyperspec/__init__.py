"""Spectral radii of uniform hypergraphs, extremal families and exhaustive checks."""

from .core import (
    CanonicalForm,
    CapExceeded,
    Hypergraph,
    HypergraphError,
    canonical_form,
    degrees,
    is_connected,
    is_isomorphic,
    parse,
    serialize,
)
from .enumerate import RankingReport, enumerate_connected, rank_by_rho
from .families import (
    FamilySpec,
    d_family,
    d_prime_family,
    e3_family,
    f3_family,
    family,
    g3_family,
    h4_family,
    loose_cycle,
    loose_path,
    parse_family,
    two_edge_overlap,
)
from .spectral import (
    ConvergenceError,
    EigenResult,
    NotConnected,
    apply_adjacency,
    poly_residual,
    rayleigh,
    residual,
    spectral_radius,
)
from .transforms import (
    MoveSpec,
    NotReducible,
    attach_path,
    attach_two_paths,
    is_reducible,
    lift,
    move_edges,
    reduce,
    swap_parts,
)

__version__ = "0.1.0"

"""Exact combinatorics of affine flag varieties.

Root systems for the classical types, the affine Weyl group with its
Bruhat order and parabolic quotients, attracting one-parameter subgroups,
fixed-point graphs with the divisibility membership test, and graded cell
counts.  All arithmetic is exact (integers and rationals); enumeration
orders are deterministic.
"""

__version__ = "0.1.0"

from .roots import (
    CartanDatum,
    SUPPORTED_TYPES,
    build_cartan,
    coroot_of,
    pairing,
    two_rho_coroot,
)
from .weyl import AffineRoot, AffineWeylGroup, WeylElement, is_positive, simple_affine_roots
from .bruhat import (
    BruhatIdeal,
    HasseDiagram,
    bruhat_leq,
    covers,
    hasse,
    interval_connected,
    lower_ideal,
    upper_ideal,
)
from .flow import (
    OneParamSubgroup,
    affine_pairing,
    canonical_flow,
    cell_weights,
    inversion_set,
    validate_flow,
)
from .gkm import (
    Character,
    GkmGraph,
    Polynomial,
    build_gkm_graph,
    character_class,
    check_membership,
    constant_function,
    divides_linear,
    injectivity_witnesses,
    restrict,
)
from .homology import (
    GradedSeries,
    betti_birkhoff,
    pinf_toy,
    poincare_flag,
    poincare_lower,
    poincare_pair,
    richardson_codim,
    vanishing_pair_S,
)

__all__ = [
    "AffineRoot",
    "AffineWeylGroup",
    "BruhatIdeal",
    "CartanDatum",
    "Character",
    "GkmGraph",
    "GradedSeries",
    "HasseDiagram",
    "OneParamSubgroup",
    "Polynomial",
    "SUPPORTED_TYPES",
    "WeylElement",
    "affine_pairing",
    "betti_birkhoff",
    "bruhat_leq",
    "build_cartan",
    "build_gkm_graph",
    "canonical_flow",
    "cell_weights",
    "character_class",
    "check_membership",
    "constant_function",
    "coroot_of",
    "covers",
    "divides_linear",
    "hasse",
    "injectivity_witnesses",
    "interval_connected",
    "inversion_set",
    "is_positive",
    "lower_ideal",
    "pairing",
    "pinf_toy",
    "poincare_flag",
    "poincare_lower",
    "poincare_pair",
    "restrict",
    "richardson_codim",
    "simple_affine_roots",
    "two_rho_coroot",
    "upper_ideal",
    "validate_flow",
    "vanishing_pair_S",
]

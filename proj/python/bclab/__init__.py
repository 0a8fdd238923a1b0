"""Exact constructions and checks for bounded cohomology of Thompson-type groups."""

from ._core import (
    Dyadic,
    Error,
    FiniteGroup,
    PLMap,
    SizeCapExceeded,
    TruncationExceeded,
    all_suite,
    alt_cup_identity,
    boundary,
    circ_ordered,
    circle_witness,
    commutator,
    compose,
    dissipator,
    euler_cocycle,
    interval_witness,
    min_l1_primitive,
    modulus_estimate,
    orient,
    run,
    theta,
    ubc_estimate,
    verify_witness,
)

__all__ = [
    "Dyadic",
    "Error",
    "FiniteGroup",
    "PLMap",
    "SizeCapExceeded",
    "TruncationExceeded",
    "all_suite",
    "alt_cup_identity",
    "boundary",
    "circ_ordered",
    "circle_witness",
    "commutator",
    "compose",
    "dissipator",
    "euler_cocycle",
    "interval_witness",
    "min_l1_primitive",
    "modulus_estimate",
    "orient",
    "run",
    "theta",
    "ubc_estimate",
    "verify_witness",
]

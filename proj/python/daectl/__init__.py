"""Exact controllability and stabilizability criteria for linear DAEs.

Rationals are exchanged as strings such as "-3/7" or "5" (ints are accepted
on input), polynomials as coefficient lists in ascending degree, matrices as
lists of rows, and triples as dicts with keys "E", "A", "B".
"""

from ._daectl import (
    DimensionError,
    DomainError,
    ParseError,
    check,
    cross_validate,
    det,
    estimate_frequency,
    genericity_predicted,
    hurwitz_stable,
    kalman_controllable,
    kernel_basis,
    poly_eval,
    poly_gcd,
    rank,
    resultant,
    sample_triple,
    survey,
    sylvester,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "ParseError",
    "check",
    "cross_validate",
    "det",
    "estimate_frequency",
    "genericity_predicted",
    "hurwitz_stable",
    "kalman_controllable",
    "kernel_basis",
    "poly_eval",
    "poly_gcd",
    "rank",
    "resultant",
    "sample_triple",
    "survey",
    "sylvester",
]

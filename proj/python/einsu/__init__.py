"""Einstein metrics on SU(k1 + (p-1)k) over generalized flag manifolds."""

import json
from fractions import Fraction

from . import _einsu
from ._einsu import (
    EinsuError,
    ParameterError,
    TheoremViolation,
    einstein_constant,
    oracle_residual,
    ricci_components,
    system_f,
)

__all__ = [
    "EinsuError",
    "ParameterError",
    "TheoremViolation",
    "certify",
    "einstein_constant",
    "f3",
    "g3",
    "oracle_residual",
    "q1",
    "large_k1_beta",
    "ricci_components",
    "solve",
    "system_f",
    "verify",
]


def solve(k1, k, p, bits=256):
    """Certified solutions as the same JSON document the CLI prints."""
    return json.loads(_einsu.solve_json(k1, k, p, bits))


def certify(k1, k, p):
    return json.loads(_einsu.certify_json(k1, k, p))


def verify(partition, trials=20, seed=42):
    return json.loads(_einsu.verify_json(list(partition), trials, seed))


def _fractions(coeffs):
    return [Fraction(c) for c in coeffs]


def f3(k1, k, p):
    """F3 coefficients, lowest degree first."""
    return _fractions(_einsu.f3_coefficients(k1, k, p))


def g3(k1, k, p):
    return _fractions(_einsu.g3_coefficients(k1, k, p))


def q1(k1, k, p):
    return _fractions(_einsu.q1_coefficients(k1, k, p))


def large_k1_beta(k1, k, p):
    return Fraction(_einsu.large_k1_beta(k1, k, p))

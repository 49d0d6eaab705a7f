"""Section rings of Q-divisors on projective spaces and Hirzebruch surfaces.

Thin JSON-decoding wrappers over the compiled _canring module.  Every
function takes a divisor spec as a JSON string (same format the CLI
accepts) and returns parsed Python objects.
"""

import json

from _canring import (
    bounds_json,
    present_json,
    basis_json,
    cone_json,
    verify_json,
    convergents,
    graded_dimension,
    canonical_spec,
)

__all__ = [
    "bounds",
    "present",
    "basis",
    "cone",
    "verify",
    "convergents",
    "graded_dimension",
    "canonical_spec",
]


def bounds(spec):
    """Degree-bound report for a divisor spec (JSON string)."""
    return json.loads(bounds_json(spec))


def present(spec):
    """Explicit presentation (generators and relations) for an effective divisor."""
    return json.loads(present_json(spec))


def basis(spec, degree):
    """Monomial basis of one graded piece."""
    return json.loads(basis_json(spec, degree))


def cone(spec, box=False):
    """Extremal rays of the exponent cone, optionally with box points."""
    return json.loads(cone_json(spec, box))


def verify(spec, max_degree, relations=False):
    """Brute-force verification of the degree bounds up to max_degree."""
    return json.loads(verify_json(spec, max_degree, relations))

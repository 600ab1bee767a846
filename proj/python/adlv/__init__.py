"""Invariants of affine Deligne-Lusztig varieties.

Groups are preset names such as ``"gl(3)"`` or ``"unitary(3,ramified)"``; coweights are
comma-separated strings and classes use the ``"lambda;word"`` grammar of the CLI.
"""

import json
from fractions import Fraction

from . import _adlv
from ._adlv import SCHEMA_VERSION, InputError, littelmann_count, presets, weight_multiplicity

__all__ = [
    "SCHEMA_VERSION",
    "InputError",
    "bgmu",
    "invariants",
    "littelmann_count",
    "presets",
    "rational",
    "strata",
    "stratification",
    "weight_multiplicity",
]


def rational(pair):
    """[num, den] -> Fraction."""
    return Fraction(pair[0], pair[1])


def invariants(group, mu, b):
    return json.loads(_adlv.invariants(group, mu, b))


def bgmu(group, mu):
    return json.loads(_adlv.bgmu(group, mu))


def stratification(group, mu):
    return json.loads(_adlv.stratification(group, mu))


def strata(group, mus, kappa):
    return [json.loads(s) for s in _adlv.strata(group, list(mus), kappa)]

"""Pythonic wrapper over the _chorn extension: exact rationals come back as
fractions.Fraction, horn verdicts as plain dicts."""

import json
from fractions import Fraction

from ._chorn import (  # noqa: F401
    GuardError,
    TruncationError,
    cycle_diagonal_q1 as _cycle_diagonal_q1,
    chromatic as _chromatic,
    chromatic_value as _chromatic_value,
    closed_form as _closed_form,
    find_peo,
    horn as _horn,
    peo_coefficient as _peo_coefficient,
    power_coefficient as _power_coefficient,
    power_series as _power_series,
)

__all__ = [
    "GuardError",
    "TruncationError",
    "power_series",
    "power_coefficient",
    "chromatic",
    "chromatic_value",
    "closed_form",
    "find_peo",
    "peo_coefficient",
    "cycle_diagonal_q1",
    "horn",
]


def power_series(graph, q, maxdeg, window=()):
    """I(graph, x)^q truncated at total degree maxdeg, as a dict mapping
    ((vertex, exponent), ...) tuples to Fractions."""
    terms = _power_series(graph, q, maxdeg, list(window))
    return {tuple(tuple(e) for e in m): Fraction(v) for m, v in terms}


def power_coefficient(graph, q, maxdeg, coeff, window=()):
    return Fraction(_power_coefficient(graph, q, maxdeg, list(coeff), list(window)))


def chromatic(graph, coeff, window=()):
    """Ascending coefficient list of the generalized chromatic polynomial."""
    return [Fraction(c) for c in _chromatic(graph, list(coeff), list(window))]


def chromatic_value(graph, coeff, q, window=()):
    return Fraction(_chromatic_value(graph, list(coeff), q, list(window)))


def closed_form(graph, coeff):
    return [Fraction(c) for c in _closed_form(graph, list(coeff))]


def peo_coefficient(graph, coeff, q, window=()):
    return Fraction(_peo_coefficient(graph, list(coeff), q, list(window)))


def cycle_diagonal_q1(n, a):
    return int(_cycle_diagonal_q1(n, a))


def horn(graph, q, maxdeg, window=(), caps=(2, 2), rays=6):
    """Bounded-evidence Horn verdict as a dict."""
    return json.loads(_horn(graph, q, maxdeg, list(window), tuple(caps), rays))

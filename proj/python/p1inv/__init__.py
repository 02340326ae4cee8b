"""Invariants of weighted points on the projective line.

Graphs are dicts ``{"n": 4, "edges": [[1, 2], [3, 4]]}``; combinations add
``"degree"`` and ``"terms": [{"coeff": "3/2", "edges": ...}]``. Points are
given as strings or numbers, with ``"inf"`` for the point at infinity.
"""

import json
from fractions import Fraction

from . import _core

Error = _core.Error

__all__ = [
    "Error",
    "error_kind",
    "degree",
    "degree_trace",
    "is_boundary",
    "evaluate",
    "straighten",
    "noncrossing_graphs",
    "kempe",
    "relations",
    "check_ideal",
    "chart",
    "verify_all",
]


def error_kind(exc):
    """Name of the error kind carried by an Error, e.g. ``"OddTotalWeight"``."""
    return _core.error_kind(str(exc))


def _points(points):
    if isinstance(points, str):
        return points
    return ",".join(str(p) for p in points)


def _doc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def degree(weights):
    return int(_core.degree(list(weights)))


def degree_trace(weights):
    return json.loads(_core.degree_trace(list(weights)))


def is_boundary(weights):
    return _core.is_boundary(list(weights))


def evaluate(graph, points):
    return Fraction(_core.evaluate(_doc(graph), _points(points)))


def straighten(graph):
    return json.loads(_core.straighten(_doc(graph)))


def noncrossing_graphs(n, degree=None):
    d = [1] * n if degree is None else list(degree)
    return json.loads(_core.noncrossing_graphs(n, d))


def kempe(graph, weights=None):
    return json.loads(_core.kempe(_doc(graph), list(weights or [])))


def relations(n, type="simple-binomial", power=3):
    return json.loads(_core.relations(n, type, power))


def check_ideal(candidate="segre", n=8, degree=0):
    if not isinstance(candidate, str):
        candidate = json.dumps(candidate)
    return json.loads(_core.check_ideal(candidate, n, degree))


def chart(points):
    out = json.loads(_core.chart(_points(points)))
    for key in ("W", "Z"):
        if key in out:
            out[key] = [[Fraction(x) for x in row] for row in out[key]]
    return out


def verify_all(quick=True, seed=20240601):
    return json.loads(_core.verify_all(quick, seed))

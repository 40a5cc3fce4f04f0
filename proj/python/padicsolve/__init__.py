"""Exact root counting and solving over Q_p for sparse polynomials.

Thin convenience layer over the compiled extension: JSON-returning entry
points are wrapped so callers get plain dicts/lists, and arbitrary-precision
arguments can be passed as Python ints.
"""

import json as _json

try:
    from . import _padicsolve as _ext
except ImportError:  # build-tree layout: the extension sits on sys.path
    import _padicsolve as _ext

PolyParseError = _ext.PolyParseError
InvalidPrimeError = _ext.InvalidPrimeError
UnsupportedError = _ext.UnsupportedError
PrecisionNotCertifiedError = _ext.PrecisionNotCertifiedError
BudgetError = _ext.BudgetError

__all__ = [
    "solve",
    "count",
    "count_binomial",
    "polygon",
    "tree",
    "bound",
    "lift",
    "oracle_count",
    "yu_valuation_bound",
    "tetra_separation",
    "PolyParseError",
    "InvalidPrimeError",
    "UnsupportedError",
    "PrecisionNotCertifiedError",
    "BudgetError",
]


def _s(value):
    return value if isinstance(value, str) else str(value)


def solve(poly, p, policy="resultant"):
    """Solve over Q_p; returns the full report as a dict."""
    return _json.loads(_ext.solve_json(_s(poly), _s(p), policy))


def count(poly, p, policy="resultant"):
    return _ext.count(_s(poly), _s(p), policy)


def count_binomial(poly, p):
    return _ext.count_binomial(_s(poly), _s(p))


def polygon(poly, p):
    return _json.loads(_ext.polygon_json(_s(poly), _s(p)))


def tree(poly, p, k):
    return _json.loads(_ext.tree_json(_s(poly), _s(p), k))


def bound(poly, p):
    return _json.loads(_ext.bound_json(_s(poly), _s(p)))


def lift(poly, p, seed, target_k):
    return int(_ext.lift(_s(poly), _s(p), _s(seed), target_k))


def oracle_count(poly, p, budget=10_000_000):
    return _ext.oracle_count(_s(poly), _s(p), budget)


def yu_valuation_bound(n, p, logA, logB):
    return _ext.yu_valuation_bound(n, _s(p), list(logA), logB)


def tetra_separation(p, h, d):
    return _json.loads(_ext.tetra_separation_json(_s(p), h, d))

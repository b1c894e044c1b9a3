"""Exact analysis of associative algebras through the characteristic pencil.

Thin dict-based wrappers over the C++ core. Algebra documents are plain
dicts of the same shape the CLI reads and writes:

    {"dim": 3, "basis": ["1", "x", "y"], "unity": "1", "table": [[[...], ...], ...]}

Rationals appear as integers or "p/q" strings; every reported value is exact
except fields explicitly marked as display-only approximations.
"""

import json as _json

from ._core import AlgebraError, __version__
from . import _core


def _dump(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def _functional_arg(functional):
    if functional is None:
        return ""
    if isinstance(functional, str):
        return functional
    return ",".join(str(v) for v in functional)


def registry(name):
    """Named example algebra: L1, L2, T2, D, C2, Z<n>, M<n>, T<n>, dsum(a,b)."""
    return _json.loads(_core.registry(name))


def check(algebra):
    """Associativity and unity report for an algebra document."""
    return _json.loads(_core.check(_dump(algebra)))


def analyze(algebra, functional=None, seed=0, mu=None):
    """Characteristic form, stabilizers, Lie index, and the full spectral
    decomposition with its verifier results."""
    return _json.loads(
        _core.analyze(_dump(algebra), _functional_arg(functional), seed,
                      "" if mu is None else str(mu)))


def canon(algebra, seed=0):
    """Canonical form for 2-dimensional and unital 3-dimensional algebras."""
    return _json.loads(_core.canon(_dump(algebra), seed))


def split(algebra, functional=None, seed=0):
    """H + K.1 + H' split of a unital index-1 algebra, with identity checks."""
    return _json.loads(_core.split(_dump(algebra), _functional_arg(functional), seed))


def build(h_table, hprime_table, pairing):
    """Assemble a unital index-1 algebra from a dual pair of tables."""
    return _json.loads(_core.build(_dump(h_table), _dump(hprime_table), _json.dumps(pairing)))


def lie_index(algebra, seed=0):
    """Minimum skew-kernel dimension over seeded functionals."""
    return _core.lie_index(_dump(algebra), seed)


def charpoly(algebra, functional=None, seed=0):
    """chi(lambda, mu, F) as exact text, with its factorization."""
    return _json.loads(_core.charpoly(_dump(algebra), _functional_arg(functional), seed))


__all__ = [
    "AlgebraError",
    "__version__",
    "analyze",
    "build",
    "canon",
    "charpoly",
    "check",
    "lie_index",
    "registry",
    "split",
]

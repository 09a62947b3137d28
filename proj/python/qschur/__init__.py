"""Exact arithmetic for the Sergeev superalgebra and the queer Schur superalgebra."""

import json as _json

from . import _core
from ._core import DegreeMismatch, Error, InvalidArgument, ParseError, dimension, suite_names

__version__ = _core.__version__


def _enc(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def matrix(even, odd):
    """A super matrix as the JSON-shaped dict the core expects."""
    return {"even": [list(r) for r in even], "odd": [list(r) for r in odd]}


def product(n, r, x, a, engine="auto"):
    """phi_X * phi_A in Q(n, r) as a list of {"matrix", "coeff"} terms."""
    return _json.loads(_core.product(n, r, _enc(x), _enc(a), engine))


def general_product(n, r, x, y, engine="oracle"):
    return _json.loads(_core.general_product(n, r, _enc(x), _enc(y), engine))


def basis(n, r):
    return _json.loads(_core.basis(n, r))


def sergeev_multiply(r, a, b):
    """Product in the Sergeev superalgebra; terms are {"perm", "mask", "coeff"}."""
    return _json.loads(_core.sergeev_multiply(r, _enc(a), _enc(b)))


def d_matrix(m):
    """Minimal double coset representative of |M|, as 1-based images."""
    return list(_core.d_matrix(_enc(m)))


def gen_mul(gen, h, m, j):
    return _json.loads(_core.gen_mul(gen, h, _enc(m), list(j)))


def realize(m, j, rmax):
    return _json.loads(_core.realize(_enc(m), list(j), rmax))


def triangular(m, R=0):
    return _json.loads(_core.triangular(_enc(m), R))


def verify(suite, n=2, rmax=3, amax=-1, chain_rmax=0, name=""):
    return _json.loads(_core.verify(suite, n, rmax, amax, chain_rmax, name))


__all__ = [
    "DegreeMismatch", "Error", "InvalidArgument", "ParseError", "basis", "d_matrix", "dimension",
    "gen_mul", "general_product", "matrix", "product", "realize", "sergeev_multiply", "suite_names",
    "triangular", "verify",
]

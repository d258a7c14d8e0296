import random

import pytest
import sympy

from formring.exactalg import Poly


def to_sympy(p, names=None):
    """Convert a Poly (or int) to a sympy expression in symbols named like its ring."""
    if not isinstance(p, Poly):
        return sympy.Integer(p)
    syms = sympy.symbols(names or p.ring.names)
    out = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Integer(c)
        for s, k in zip(syms, e):
            term *= s**k
        out += term
    return sympy.expand(out)


@pytest.fixture
def rng():
    return random.Random(20261016)

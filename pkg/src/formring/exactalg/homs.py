"""Ring homomorphisms between contexts: reduction mod m and specialization of
polynomial variables."""

from __future__ import annotations

from .. import kernels
from .rings import (ContextError, Integers, IntegersMod, Mod, Poly, PolyRing,
                    ZZ)


class Reduce:
    """ZZ -> ZZ/m, or ZZ/m' -> ZZ/m when m divides m'."""

    def __init__(self, m):
        self.m = m
        self.target = IntegersMod(m)

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.m % self.m:
                raise ContextError(f"Z/{x.m} does not map to Z/{self.m}")
            return Mod(x.v, self.m)
        if isinstance(x, int):
            return Mod(x, self.m)
        raise ContextError(f"cannot reduce {x!r} mod {self.m}")

    def __repr__(self):
        return f"Reduce({self.m})"


class Specialize:
    """Evaluate the variables of a PolyRing at values of a target context."""

    def __init__(self, source, values, target=ZZ):
        if not isinstance(source, PolyRing):
            raise ContextError("specialization needs a polynomial source ring")
        if len(values) != source.nvars:
            raise ContextError(
                f"specialization needs {source.nvars} values, got {len(values)}")
        self.source = source
        self.target = target
        self.values = [target.coerce(v) for v in values]
        self._int_point = ([int(v) for v in values]
                           if isinstance(target, Integers) else None)

    def __call__(self, x):
        if isinstance(x, int):
            return self.target.from_int(x)
        if not isinstance(x, Poly):
            raise ContextError(f"cannot specialize {x!r}")
        if self._int_point is not None:
            return kernels.eval_poly(list(x.terms.items()), self._int_point)
        if isinstance(self.target, IntegersMod):
            m = self.target.m
            pt = [v.v for v in self.values]
            return Mod(kernels.eval_poly(list(x.terms.items()), pt) % m, m)
        acc = self.target.zero
        for e, c in x.terms.items():
            t = self.target.from_int(c)
            for v, k in zip(self.values, e):
                if k:
                    t = t * v**k
            acc = acc + t
        return acc

    def __repr__(self):
        return f"Specialize({self.source.descriptor} -> {self.target.descriptor})"


class Compose:
    """``Compose(g, h)(x) == g(h(x))``."""

    def __init__(self, outer, inner):
        self.outer, self.inner = outer, inner
        self.target = outer.target

    def __call__(self, x):
        return self.outer(self.inner(x))


def apply_hom(x, hom):
    return hom(x)

"""Multiplication and action tables.

A :class:`MultTable` presents a rank-n algebra on a basis ``z_0 = 1, z_1, ...,
z_{n-1}`` by ``z_i z_j = sum_l c[i][j][l] z_l``.  An :class:`ActionTable`
presents a module with basis ``e_0, ..., e_{m-1}`` by
``z_i e_b = sum_a d[i][b][a] e_a``.  Both store the full cube including the
identity row, so indices run from 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import kernels
from ..exactalg import ZZ, parse_context
from ..exactalg.linalg import inverse_unimodular, matmul


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(y) for y in x)
    return x


def _thaw(x):
    if isinstance(x, tuple):
        return [_thaw(y) for y in x]
    return x


def _map_entries(x, fn):
    if isinstance(x, tuple):
        return tuple(_map_entries(y, fn) for y in x)
    return fn(x)


@dataclass(frozen=True, eq=False)
class MultTable:
    n: int
    ctx: object
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "c", _freeze(_thaw(self.c)))

    def __eq__(self, other):
        return (isinstance(other, MultTable) and self.n == other.n
                and self.c == other.c)

    __hash__ = None

    def product(self, u, v):
        """Product of coordinate vectors."""
        ctx, n, c = self.ctx, self.n, self.c
        out = [ctx.zero] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for l, x in enumerate(c[i][j]):
                    if x:
                        out[l] = out[l] + ab * x
        return out

    def left_matrix(self, i):
        """Matrix of multiplication by z_i; column j holds z_i z_j."""
        n = self.n
        return [[self.c[i][j][l] for j in range(n)] for l in range(n)]

    def element_matrix(self, u):
        n, ctx = self.n, self.ctx
        M = [[ctx.zero] * n for _ in range(n)]
        for i, a in enumerate(u):
            if a:
                L = self.left_matrix(i)
                for r in range(n):
                    for s in range(n):
                        M[r][s] = M[r][s] + a * L[r][s]
        return M

    def trace(self, i):
        acc = self.ctx.zero
        for j in range(self.n):
            acc = acc + self.c[i][j][j]
        return acc

    def defects(self):
        """Human-readable list of violated ring axioms (empty when valid)."""
        n, c, ctx = self.n, self.c, self.ctx
        out = []
        for j in range(n):
            for l in range(n):
                want = ctx.one if j == l else ctx.zero
                if c[0][j][l] != want or c[j][0][l] != want:
                    out.append(f"unit: z_0 z_{j} coordinate {l}")
        for i in range(n):
            for j in range(i + 1, n):
                if c[i][j] != c[j][i]:
                    out.append(f"commutativity: z_{i} z_{j}")
        if ctx == ZZ:
            bad = kernels.assoc_defects_int(_thaw(c), n)
        else:
            bad = []
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        e = [ctx.zero] * n
                        e[k] = ctx.one
                        lhs = self.product(c[i][j], e)
                        ei = [ctx.zero] * n
                        ei[i] = ctx.one
                        rhs = self.product(ei, c[j][k])
                        if lhs != rhs:
                            bad.append((i, j, k))
        out += [f"associativity: (z_{i} z_{j}) z_{k}" for i, j, k in bad]
        return out

    def is_valid(self):
        return not self.defects()

    def specialize(self, hom):
        return MultTable(self.n, hom.target, _map_entries(self.c, hom))

    def rebase(self, P):
        """Table in the basis whose j-th element has old coordinates column j of P."""
        n, ctx = self.n, self.ctx
        Pinv = inverse_unimodular(P, ctx)
        cols = [[P[r][j] for r in range(n)] for j in range(n)]
        c = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                old = self.product(cols[i], cols[j])
                c[i][j] = [sum((Pinv[l][r] * old[r] for r in range(n)), ctx.zero)
                           for l in range(n)]
        return MultTable(n, ctx, c)

    def to_json(self):
        return {"n": self.n, "context": self.ctx.descriptor,
                "c": _thaw(_map_entries(self.c, self.ctx.to_json))}

    @classmethod
    def from_json(cls, data):
        ctx = parse_context(data["context"])
        return cls(data["n"], ctx, _map_entries(_freeze(data["c"]), ctx.from_json))


@dataclass(frozen=True, eq=False)
class ActionTable:
    n: int
    m: int
    ctx: object
    d: tuple
    k: int | None = None
    twist: int = 0
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "d", _freeze(_thaw(self.d)))

    def __eq__(self, other):
        return (isinstance(other, ActionTable) and self.n == other.n
                and self.m == other.m and self.d == other.d)

    __hash__ = None

    def matrix(self, i):
        """Z_i with Z_i[a][b] = e_a coordinate of z_i e_b."""
        return [[self.d[i][b][a] for b in range(self.m)] for a in range(self.m)]

    def act(self, u, v):
        """Action of ring vector u on module vector v."""
        ctx, m = self.ctx, self.m
        out = [ctx.zero] * m
        for i, a in enumerate(u):
            if not a:
                continue
            for b, x in enumerate(v):
                if not x:
                    continue
                ax = a * x
                for t, y in enumerate(self.d[i][b]):
                    if y:
                        out[t] = out[t] + ax * y
        return out

    def defects(self, R):
        """Violations of the module axioms over the ring table R."""
        n, m, ctx, d = self.n, self.m, self.ctx, self.d
        out = []
        for b in range(m):
            for a in range(m):
                want = ctx.one if a == b else ctx.zero
                if d[0][b][a] != want:
                    out.append(f"unit: z_0 e_{b} coordinate {a}")
        if ctx == ZZ and R.ctx == ZZ:
            bad = kernels.module_defects_int(_thaw(R.c), _thaw(d), n, m)
        else:
            bad = []
            for i in range(n):
                for j in range(n):
                    for b in range(m):
                        lhs = [ctx.zero] * m
                        for l, x in enumerate(R.c[i][j]):
                            if x:
                                lhs = [p + x * q for p, q in zip(lhs, d[l][b])]
                        ei = [ctx.zero] * n
                        ei[i] = ctx.one
                        rhs = self.act(ei, d[j][b])
                        if lhs != rhs:
                            bad.append((i, j, b))
        out += [f"module axiom: (z_{i} z_{j}) e_{b}" for i, j, b in bad]
        return out

    def specialize(self, hom):
        return ActionTable(self.n, self.m, hom.target, _map_entries(self.d, hom),
                           self.k, self.twist)

    def rebase(self, P, S):
        """Table after the ring basis change P and module basis change S.

        New ring element i is ``sum_j P[j][i] z_j``; new module element b is
        ``sum_a S[a][b] e_a``.
        """
        n, m, ctx = self.n, self.m, self.ctx
        Sinv = inverse_unimodular(S, ctx)
        mats = [self.matrix(i) for i in range(n)]
        d = []
        for i in range(n):
            Z = [[ctx.zero] * m for _ in range(m)]
            for j in range(n):
                p = P[j][i]
                if p:
                    Z = [[x + p * y for x, y in zip(r1, r2)] for r1, r2 in zip(Z, mats[j])]
            Zn = matmul(matmul(Sinv, Z, ctx), S, ctx)
            d.append([[Zn[a][b] for a in range(m)] for b in range(m)])
        return ActionTable(n, m, ctx, d, self.k, self.twist)

    def with_entry(self, i, b, a, value):
        d = _thaw(self.d)
        d[i][b][a] = value
        return ActionTable(self.n, self.m, self.ctx, d, self.k, self.twist)

    def to_json(self):
        return {"n": self.n, "m": self.m, "context": self.ctx.descriptor,
                "k": self.k, "twist": self.twist,
                "d": _thaw(_map_entries(self.d, self.ctx.to_json))}

    @classmethod
    def from_json(cls, data):
        ctx = parse_context(data["context"])
        return cls(data["n"], data["m"], ctx,
                   _map_entries(_freeze(data["d"]), ctx.from_json),
                   data.get("k"), data.get("twist", 0))

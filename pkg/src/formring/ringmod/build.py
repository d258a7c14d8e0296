"""Ring and module tables of a binary form, and the invariants built on them."""

from __future__ import annotations

import functools

from .. import kernels
from .. import thetaoracle as th
from ..exactalg import ContextError, Integers, Specialize, universal_ring
from ..exactalg.linalg import det, hnf_rows, identity
from ..forms import BinaryForm, GL2Matrix, gl2_act, is_primitive, universal_form
from . import rewrite as rw
from .tables import ActionTable, MultTable, _freeze


def _is_universal(f):
    R = universal_ring(f.n)
    return f.ctx == R and f.coeffs == tuple(R.gens())


def _hom(f):
    return Specialize(universal_ring(f.n), list(f.coeffs), f.ctx)


def _spec(f, x):
    """Image of a universal polynomial (or nested list of them) at f."""
    if isinstance(f.ctx, Integers):
        return _spec_int(list(f.coeffs), x)
    hom = _hom(f)

    def go(y):
        if isinstance(y, (list, tuple)):
            return [go(z) for z in y]
        return hom(y)

    return go(x)


def _spec_int(point, x):
    # flatten, evaluate in one kernel call, and refold
    flat = []

    def collect(y):
        if isinstance(y, (list, tuple)):
            for z in y:
                collect(z)
        else:
            flat.append(list(y.terms.items()) if hasattr(y, "terms") else [((0,) * len(point), y)])

    collect(x)
    vals = iter(kernels.eval_poly_table(flat, point))

    def refold(y):
        if isinstance(y, (list, tuple)):
            return [refold(z) for z in y]
        return next(vals)

    return refold(x)


def _expr_to_vec(expr, n, ctx):
    v = [ctx.zero] * n
    for (kind, i), c in expr.items():
        if kind == "t" and i != 0:
            raise ValueError("expression is not in zeta coordinates")
        v[i] = v[i] + ctx.coerce(c)
    return v


def build_ring(f):
    """Multiplication table of R_f in the zeta basis, over the context of f."""
    n, ctx = f.n, f.ctx
    if n < 2:
        raise ValueError("rank must be at least 2")
    fs = list(f.coeffs)
    c = [[_expr_to_vec(rw.zeta_product(fs, i, j), n, ctx) for j in range(n)]
         for i in range(n)]
    return MultTable(n, ctx, c)


@functools.lru_cache(maxsize=None)
def universal_action(n, k):
    """d[i][b][a] over Z[f_0..f_n] for zeta_i acting on the basis of I^k."""
    R = universal_ring(n)
    fs = R.gens()
    basis = rw.basis_exprs(fs, k)
    d = []
    for i in range(n):
        zi = {("z", i): 1} if i else {("t", 0): 1}
        rows = []
        for e in basis:
            v = rw.coords(fs, rw.mul(fs, zi, e), k, R.exact_div)
            rows.append([R.coerce(x) for x in v])
        d.append(rows)
    return _freeze(d)


def build_module(f, k):
    """Action table of R_f on I_f^k (k = -1 is the nu basis of I^#)."""
    n = f.n
    if not -1 <= k <= n - 1:
        raise ValueError(f"k={k} outside -1..{n - 1}")
    d = universal_action(n, k)
    if not _is_universal(f):
        d = _spec(f, d)
    return ActionTable(n, n, f.ctx, d, k, f.twist)


def specialize_table(T, hom):
    return T.specialize(hom)


def ring_disc(R):
    """Determinant of the trace form Tr(z_i z_j)."""
    n, ctx = R.n, R.ctx
    tr = [R.trace(l) for l in range(n)]
    G = [[sum((R.c[i][j][l] * tr[l] for l in range(n)), ctx.zero) for j in range(n)]
         for i in range(n)]
    return det(G, ctx)


# ---------------------------------------------------------------------------
# duality


@functools.lru_cache(maxsize=None)
def universal_pairing(n, k):
    R = universal_ring(n)
    fs = R.gens()
    left = rw.basis_exprs(fs, k, primed=True)
    right = rw.basis2_reversed(fs, n - 2 - k)
    out = []
    for u in left:
        row = []
        for v in right:
            co = rw.coords(fs, rw.mul(fs, u, v), n - 2, R.exact_div)
            row.append(R.coerce(co[n - 1]))
        out.append(tuple(row))
    return tuple(out)


def dual_pairing_matrix(f, k):
    """Pairing of I'_k against the reversed second basis of I_{n-2-k}.

    The pairing multiplies into I_{n-2} and reads the zeta_{n-1}
    coordinate.  The result is the identity matrix.
    """
    n = f.n
    if not -1 <= k <= n - 1:
        raise ValueError(f"k={k} outside -1..{n - 1}")
    M = universal_pairing(n, k)
    if _is_universal(f):
        return [list(r) for r in M]
    return _spec(f, M)


def inverse_different_map(f):
    """Matrix of I_{n-2} -> Hom(R_f, O), e_a -> (z_b -> phi(z_b e_a)).

    Row a, column b.  phi is the zeta_{n-1} coordinate.
    """
    n = f.n
    T = build_module(f, n - 2)
    return [[T.d[b][a][n - 1] for b in range(n)] for a in range(n)]


def intertwining_defects(f, M=None):
    """(i, a, b) where the map fails to commute with zeta_i."""
    n, ctx = f.n, f.ctx
    if M is None:
        M = inverse_different_map(f)
    R = build_ring(f)
    T = build_module(f, n - 2)
    bad = []
    for i in range(n):
        for a in range(n):
            for b in range(n):
                lhs = sum((T.d[i][a][c] * M[c][b] for c in range(n)), ctx.zero)
                rhs = sum((R.c[b][i][l] * M[a][l] for l in range(n)), ctx.zero)
                if lhs != rhs:
                    bad.append((i, a, b))
    return bad


# ---------------------------------------------------------------------------
# invertibility and Gorenstein


def _need_integral(f):
    if not isinstance(f.ctx, Integers):
        raise ContextError(f"decision needs integer coefficients, got {f.ctx.descriptor}")
    if f.is_zero():
        raise ContextError("the zero form is excluded")


@functools.lru_cache(maxsize=None)
def universal_product_table(n, k1, k2, target):
    """Coordinates in I^target of products of the I^k1 and I^k2 bases."""
    R = universal_ring(n)
    fs = R.gens()
    A = rw.basis_exprs(fs, k1)
    B = rw.basis_exprs(fs, k2)
    return tuple(tuple(R.coerce(x) for x in rw.coords(fs, rw.mul(fs, a, b), target, R.exact_div))
                 for a in A for b in B)


def is_invertible_family(f):
    """Whether I_f I_f^# spans all of R_f."""
    _need_integral(f)
    n = f.n
    rows = _spec(f, universal_product_table(n, 1, -1, 0))
    return hnf_rows(rows) == identity(n)


def _move_f0(f):
    """A GL2-translate of f with nonzero leading coefficient."""
    if f.coeffs[0]:
        return f
    for t in range(0, f.n + 1):
        g = gl2_act(f, GL2Matrix(1, t, 0, 1))
        if g.coeffs[0]:
            return g
    raise ContextError("could not move f to f_0 != 0")


def is_gorenstein(f):
    """Gorenstein test: the inverse different I_{n-2} is invertible."""
    if f.n < 3:
        raise ValueError("Gorenstein test needs n >= 3")
    _need_integral(f)
    g = _move_f0(f)
    return th.is_invertible_lattice(th.module_basis(g, g.n - 2), g)


# ---------------------------------------------------------------------------
# GL2 invariance


def _theta_prime(f, gamma):
    """Image of the root of f' = f.gamma inside Q_f."""
    a, b, c, d = gamma.a, gamma.b, gamma.c, gamma.d
    t = th.theta(f)
    lam = t * (-b) + a
    return (t * d - c) / lam, lam


@functools.lru_cache(maxsize=None)
def universal_gl2_witness(n, gamma, k=1):
    """(P, S) over Z[f_0..f_n] for the generator gamma.

    Column i of P holds the zeta'_i in R_f coordinates; column b of S holds
    lambda^k e'_b in I_f^k coordinates, lambda = a - b theta.
    """
    u = universal_form(n)
    g = gl2_act(u, gamma)
    tp, lam = _theta_prime(u, gamma)
    # zeta'_i and I'^k basis as elements of Q_f
    powers = [th.one(u)]
    for _ in range(n - 1):
        powers.append(powers[-1] * tp)

    def z_prime(i):
        out = th.one(u) if i == 0 else th._lift(u, 0)
        for m in range(1, i + 1):
            out = out + powers[m] * g.coeffs[i - m]
        return out

    P_cols = [th.to_mixed_basis(z_prime(i), 0, u).coords for i in range(n)]
    scale = lam ** k
    S_cols = []
    for b in range(n):
        if k == -1:
            e = z_prime(b) + g.coeffs[b] if b else th._lift(u, g.coeffs[0])
        else:
            e = powers[b] if b <= k else z_prime(b)
        S_cols.append(th.to_mixed_basis(e * scale, k, u).coords)
    P = tuple(tuple(P_cols[j][i] for j in range(n)) for i in range(n))
    S = tuple(tuple(S_cols[j][i] for j in range(n)) for i in range(n))
    return P, S


def gl2_invariance_witness(f, gamma, k=1):
    """Unimodular (P, S) with build_ring(f).rebase(P) == build_ring(f.gamma)
    and build_module(f, k).rebase(P, S) == build_module(f.gamma, k).

    Raises ArithmeticError if the transported tables differ.
    """
    n = f.n
    gamma = GL2Matrix(*(int(x) for x in (gamma.a, gamma.b, gamma.c, gamma.d)))
    if f.is_zero():
        raise ContextError("the zero form is excluded")
    P, S = universal_gl2_witness(n, gamma, k)
    P, S = _spec(f, P), _spec(f, S)
    g = gl2_act(BinaryForm(n, f.coeffs, f.ctx), gamma)
    for name, M in (("P", P), ("S", S)):
        if not f.ctx.is_unit(det(M, f.ctx)):
            raise ArithmeticError(f"{name} is not unimodular")
    R, R2 = build_ring(f), build_ring(g)
    if R.rebase(P) != R2:
        raise ArithmeticError("ring tables do not match after the basis change")
    if build_module(f, k).rebase(P, S) != build_module(g, k):
        raise ArithmeticError("module tables do not match after the basis change")
    return P, S


# ---------------------------------------------------------------------------
# experiment: module powers versus the table modules


def module_power_experiment(f, k):
    """Compare the k-th power of I_f with I_f^k as lattices (integers only).

    Returns a dict with both HNF spans and whether they agree; nothing is
    asserted since the two need not coincide for imprimitive f.
    """
    _need_integral(f)
    g = _move_f0(f)
    I = th.module_basis(g, 1)
    span = th.Span(g, [th.one(g)])
    gens = [th.one(g)]
    for _ in range(k):
        gens = [x * y for x in span.basis() for y in I]
        span = th.Span(g, gens)
    table = th.Span(g, th.module_basis(g, k))
    return {"power": span.rows, "power_den": span.den, "table": table.rows,
            "table_den": table.den, "equal": span == table,
            "primitive": is_primitive(f)}


__all__ = [
    "build_ring", "build_module", "specialize_table", "ring_disc",
    "dual_pairing_matrix", "inverse_different_map", "intertwining_defects",
    "is_invertible_family", "is_gorenstein", "gl2_invariance_witness",
    "module_power_experiment",
]

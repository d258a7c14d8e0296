"""Matrices over a context (lists of rows) and integer normal forms."""

from __future__ import annotations

from fractions import Fraction

from .. import kernels
from .rings import ContextError, FractionField, IntegersMod, Mod, ZZ


def identity(n, ctx=ZZ):
    return [[ctx.one if i == j else ctx.zero for j in range(n)] for i in range(n)]


def zeros(r, c, ctx=ZZ):
    return [[ctx.zero] * c for _ in range(r)]


def matmul(A, B, ctx=ZZ):
    if ctx is ZZ:
        return kernels.matmul_int(A, B)
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = ctx.zero
            for k in range(inner):
                a = row[k]
                if a:
                    acc = acc + a * B[k][j]
            new.append(acc)
        out.append(new)
    return out


def matvec(A, v, ctx=ZZ):
    out = []
    for row in A:
        acc = ctx.zero
        for a, x in zip(row, v):
            if a:
                acc = acc + a * x
        out.append(acc)
    return out


def transpose(A):
    return [list(r) for r in zip(*A)]


def det(M, ctx=ZZ):
    """Determinant: fraction-free Bareiss over domains, lifting over ZZ/m."""
    n = len(M)
    if n == 0:
        return ctx.one
    if isinstance(ctx, IntegersMod):
        lifted = [[ctx.coerce(x).v for x in row] for row in M]
        return Mod(det(lifted, ZZ), ctx.m)
    if isinstance(ctx, FractionField):
        return _det_field(M, ctx)
    if not ctx.is_domain:
        raise ContextError(f"determinant over {ctx.descriptor} not supported")
    A = [list(r) for r in M]
    sign = 1
    prev = ctx.one
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return ctx.zero
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                A[i][j] = ctx.exact_div(akk * A[i][j] - aik * A[k][j], prev)
        prev = akk
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d


def _det_field(M, ctx):
    A = [[ctx.coerce(x) for x in row] for row in M]
    n = len(A)
    d = ctx.one
    for k in range(n):
        p = next((i for i in range(k, n) if A[i][k]), None)
        if p is None:
            return ctx.zero
        if p != k:
            A[k], A[p] = A[p], A[k]
            d = -d
        d = d * A[k][k]
        for i in range(k + 1, n):
            if A[i][k]:
                r = A[i][k] / A[k][k]
                for j in range(k, n):
                    A[i][j] = A[i][j] - r * A[k][j]
    return d


def adjugate(M, ctx=ZZ):
    n = len(M)
    if n == 1:
        return [[ctx.one]]
    adj = zeros(n, n, ctx)
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(M) if k != i]
            c = det(minor, ctx)
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return adj


def inverse_unimodular(M, ctx=ZZ):
    """Inverse of a matrix whose determinant is a unit of ``ctx``."""
    d = det(M, ctx)
    if not ctx.is_unit(d):
        raise ContextError(f"matrix is not invertible over {ctx.descriptor} (det {d})")
    inv_d = ctx.exact_div(ctx.one, d)
    return [[x * inv_d for x in row] for row in adjugate(M, ctx)]


def solve_field(A, b, ctx):
    """Solve the square system A x = b over a field context."""
    n = len(A)
    M = [[ctx.coerce(x) for x in row] + [ctx.coerce(y)] for row, y in zip(A, b)]
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k]), None)
        if p is None:
            raise ContextError("singular system")
        M[k], M[p] = M[p], M[k]
        piv = M[k][k]
        M[k] = [x / piv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k]:
                r = M[i][k]
                M[i] = [x - r * y for x, y in zip(M[i], M[k])]
    return [M[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# integer normal forms


def hnf_rows(vectors):
    """Row Hermite normal form of the lattice spanned by integer ``vectors``.

    Returns the nonzero rows: pivots strictly increase to the right, are
    positive, and entries above each pivot are reduced into ``[0, pivot)``.
    The result depends only on the lattice.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                if piv is None:
                    piv = i
                    continue
                # gcd-combine row i into the pivot row
                a, b = rows[piv][c], rows[i][c]
                g, s, t = _xgcd(a, b)
                u, v = a // g, b // g
                rp, ri = rows[piv], rows[i]
                rows[piv] = [s * x + t * y for x, y in zip(rp, ri)]
                rows[i] = [u * y - v * x for x, y in zip(rp, ri)]
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        p = rows[r][c]
        for i in range(r):
            q = rows[i][c] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
        r += 1
        rows = rows[:r] + [row for row in rows[r:] if any(row)]
    return rows[:r]


def _xgcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) > 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, rem = divmod(a, b)
        a, b = b, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def smith_normal_form(A):
    """Smith normal form of an integer matrix.

    Returns ``(U, D, V)`` with ``D == U @ A @ V``, ``U`` and ``V`` unimodular
    and ``D`` diagonal with nonnegative entries, each dividing the next.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(r) for r in A]
    U = identity(m)
    V = identity(n)

    def row_op(i, j, a, b, c, d):
        # rows (i, j) <- (a*ri + b*rj, c*ri + d*rj) on D and U
        for M in (D, U):
            ri, rj = M[i], M[j]
            M[i] = [a * x + b * y for x, y in zip(ri, rj)]
            M[j] = [c * x + d * y for x, y in zip(ri, rj)]

    def col_op(i, j, a, b, c, d):
        for M in (D, V):
            for row in M:
                x, y = row[i], row[j]
                row[i] = a * x + b * y
                row[j] = c * x + d * y

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        if pi != t:
            row_op(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    a, b = D[t][t], D[i][t]
                    if b % a == 0:
                        row_op(t, i, 1, 0, -(b // a), 1)
                    else:
                        g, s, u = _xgcd(a, b)
                        row_op(t, i, s, u, -b // g, a // g)
                    done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    a, b = D[t][t], D[t][j]
                    if b % a == 0:
                        col_op(t, j, 1, 0, -(b // a), 1)
                    else:
                        g, s, u = _xgcd(a, b)
                        col_op(t, j, s, u, -b // g, a // g)
                    done = False
            if done:
                p = D[t][t]
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % p), None)
                if bad is not None:
                    # fold the offending row into row t to restore divisibility
                    row_op(t, bad[0], 1, 1, 0, 1)
                    done = False
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


def invariant_factors(A):
    _, D, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def to_integer_rows(vectors):
    """Scale rational vectors by a common denominator.

    Returns ``(den, int_rows)``.
    """
    den = 1
    for v in vectors:
        for x in v:
            if isinstance(x, Fraction):
                den = den * x.denominator // _gcd(den, x.denominator)
    return den, [[int(x * den) for x in v] for v in vectors]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)

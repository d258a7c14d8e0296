"""Binary n-pairs (R, I, I -> Q, phi) and their correspondence with forms.

Conventions.  The module I has basis ``(k_1, ..., k_{n-2}, x~, y~)`` where the
k_j span the kernel of the quotient map and x~, y~ lift the basis x, y of Q;
``quot`` is the 2 x n matrix of I -> Q in that basis, so ``quot[0]`` is the
functional x-dot and ``quot[1]`` is y-dot.  Column i of ``phi`` holds the
zeta_1..zeta_{n-1} coordinates of the image of sym(x^(n-1-i) y^(i-1)).
Wedge is trivialized by x ^ y = 1, so (u x + v y) ^ (s x + t y) = u t - v s.

Action tables follow :class:`~formring.ringmod.ActionTable`:
``d[i][b][a]`` is the e_a coordinate of zeta_i e_b.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import ZZ, ContextError, FractionField, Integers, PolyRing
from .exactalg.linalg import (det, identity, invariant_factors, matmul, smith_normal_form,
                              solve_field)
from .forms import BinaryForm
from .ringmod import ActionTable, MultTable, build_module, build_ring, ring_disc


class PairError(ValueError):
    """Input is not a valid binary pair."""


class WellDefinednessError(ArithmeticError):
    """The form computed from a pair depends on the chosen splitting."""


def _std_quot(n, ctx):
    return [[ctx.one if (r == 0 and c == n - 2) or (r == 1 and c == n - 1) else ctx.zero
             for c in range(n)] for r in range(2)]


@dataclass(frozen=True, eq=False)
class BinaryPair:
    n: int
    R: MultTable
    I: ActionTable
    quot: tuple
    phi: tuple
    twist: int = -1

    def __post_init__(self):
        object.__setattr__(self, "quot", tuple(tuple(r) for r in self.quot))
        object.__setattr__(self, "phi", tuple(tuple(r) for r in self.phi))

    @property
    def ctx(self):
        return self.R.ctx

    def __eq__(self, other):
        return (isinstance(other, BinaryPair) and self.n == other.n and self.R == other.R
                and self.I == other.I and self.quot == other.quot and self.phi == other.phi)

    __hash__ = None

    def to_json(self):
        ctx = self.ctx
        return {"n": self.n, "R": self.R.to_json(), "I": self.I.to_json(),
                "quot": [[ctx.to_json(x) for x in r] for r in self.quot],
                "phi": [[ctx.to_json(x) for x in r] for r in self.phi],
                "twist": self.twist}

    @classmethod
    def from_json(cls, data):
        R = MultTable.from_json(data["R"])
        I = ActionTable.from_json(data["I"])
        ctx = R.ctx
        return cls(data["n"], R, I,
                   [[ctx.from_json(x) for x in r] for r in data["quot"]],
                   [[ctx.from_json(x) for x in r] for r in data["phi"]],
                   data.get("twist", -1))

    def with_I(self, I):
        return BinaryPair(self.n, self.R, I, self.quot, self.phi, self.twist)


@dataclass(frozen=True, eq=False)
class BasedPair:
    pair: BinaryPair
    a: tuple

    @property
    def n(self):
        return self.pair.n

    def __eq__(self, other):
        return isinstance(other, BasedPair) and self.pair == other.pair and self.a == other.a

    __hash__ = None

    def to_json(self):
        out = self.pair.to_json()
        out["a"] = [self.pair.ctx.to_json(x) for x in self.a]
        return out

    @classmethod
    def from_json(cls, data):
        p = BinaryPair.from_json(data)
        return cls(p, tuple(p.ctx.from_json(x) for x in data["a"]))


# ---------------------------------------------------------------------------
# helpers on pairs


def _check_shape(P):
    n = P.n
    if n < 3:
        raise PairError("binary pairs need n >= 3")
    if P.R.n != n or P.I.n != n or P.I.m != n:
        raise PairError(f"table ranks ({P.R.n}, {P.I.n}, {P.I.m}) do not match n={n}")
    if len(P.quot) != 2 or any(len(r) != n for r in P.quot):
        raise PairError("quot must be a 2 x n matrix")
    if len(P.phi) != n - 1 or any(len(r) != n - 1 for r in P.phi):
        raise PairError("phi must be an (n-1) x (n-1) matrix")


def _dot(u, v, ctx):
    return sum((a * b for a, b in zip(u, v) if a and b), ctx.zero)


def _s(P, i):
    """R-coordinates of a lift of phi(sym(x^(n-1-i) y^(i-1)))."""
    ctx = P.ctx
    return [ctx.zero] + [P.phi[j][i - 1] for j in range(P.n - 1)]


def _frame(P):
    """(kernel basis, lift of x, lift of y) as I-coordinate vectors."""
    n, ctx = P.n, P.ctx
    std = _std_quot(n, ctx)
    if [list(r) for r in P.quot] == std:
        e = identity(n, ctx)
        return [e[j] for j in range(n - 2)], e[n - 2], e[n - 1]
    if not isinstance(ctx, Integers):
        raise PairError("a non-standard quotient map is only handled over the integers")
    U, D, V = smith_normal_form([list(r) for r in P.quot])
    if D[0][0] != 1 or D[1][1] != 1:
        raise PairError("the quotient map I -> Q is not surjective")
    Vt = [[V[r][c] for r in range(n)] for c in range(n)]  # columns of V
    kernel = Vt[2:]
    lifts = []
    for q in range(2):
        w = [U[0][q], U[1][q]]
        lifts.append([Vt[0][r] * w[0] + Vt[1][r] * w[1] for r in range(n)])
    return kernel, lifts[0], lifts[1]


def _q(P, v):
    """(x-dot, y-dot) of an I-coordinate vector."""
    ctx = P.ctx
    return _dot(P.quot[0], v, ctx), _dot(P.quot[1], v, ctx)


def _act(P, r, v):
    return P.I.act(r, v)


def _mu(P, k):
    """Quotient images of s(i) k for i = 1..n-1, flattened (x, y) pairs."""
    out = []
    for i in range(1, P.n):
        out.extend(_q(P, _act(P, _s(P, i), k)))
    return out


def _natural(n, ctx):
    """The pattern: s(i) k_j maps to x if i + j = n-1, to y if i + j = n."""
    cols = []
    for j in range(1, n - 1):
        col = []
        for i in range(1, n):
            col.append(ctx.one if i + j == n - 1 else ctx.zero)
            col.append(ctx.one if i + j == n else ctx.zero)
        cols.append(col)
    return cols


def _solve_exact(Mcols, Ncols):
    """Integer matrix C with M C = N (columns given), or None."""
    rows = len(Mcols[0])
    r = len(Mcols)
    M = [[Fraction(Mcols[c][i]) for c in range(r)] for i in range(rows)]
    # choose r independent rows
    chosen, basis = [], []
    for i in range(rows):
        cand = basis + [M[i]]
        if _rank(cand) == len(cand):
            basis, chosen = cand, chosen + [i]
        if len(chosen) == r:
            break
    if len(chosen) < r:
        return None
    F = FractionField(ZZ)
    C = [[None] * r for _ in range(r)]
    for j in range(r):
        sol = solve_field([M[i] for i in chosen], [Ncols[j][i] for i in chosen], F)
        for m in range(r):
            C[m][j] = sol[m]
    for j in range(r):
        for i in range(rows):
            if sum(M[i][m] * C[m][j] for m in range(r)) != Ncols[j][i]:
                return None
    if any(x.denominator != 1 for row in C for x in row):
        return None
    return [[int(x) for x in row] for row in C]


def _rank(rows):
    A = [list(r) for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[rank], A[p] = A[p], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                t = A[i][c] / A[rank][c]
                A[i] = [x - t * y for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# exactness


def realexact_matrices(n):
    """Integer matrices of Sym_{n-1} Q -> Q (x) Sym_{n-2} Q -> Sym_{n-3} Q (x) wedge^2 Q.

    Middle basis index ``2a + q`` stands for q (x) sym(x^a y^(n-2-a)) with
    q = 0 for x and 1 for y.  Returns (A, B) with A of shape 2(n-1) x n and
    B of shape (n-2) x 2(n-1).
    """
    m = 2 * (n - 1)
    A = [[0] * n for _ in range(m)]
    for k in range(n):
        if k >= 1:
            A[2 * (k - 1)][k] = 1
        if k <= n - 2:
            A[2 * k + 1][k] = 1
    B = [[0] * m for _ in range(n - 2)]
    for a in range(n - 1):
        b = n - 2 - a
        if b >= 1:
            B[a][2 * a] = -1  # x (x) sym(x^a y^b) -> sym(x^a y^(b-1)) (y ^ x)
        if a >= 1:
            B[a - 1][2 * a + 1] = 1  # y (x) sym(x^a y^b) -> sym(x^(a-1) y^b) (x ^ y)
    return A, B


def pair_B_matrix(P, kernel):
    """Matrix of q (x) s -> (k_j -> q ^ phi(s) k_j) against the given kernel basis."""
    n, ctx = P.n, P.ctx
    B = [[ctx.zero] * (2 * (n - 1)) for _ in range(len(kernel))]
    for j, k in enumerate(kernel):
        for a in range(n - 1):
            u, v = _q(P, _act(P, _s(P, n - 1 - a), k))
            B[j][2 * a] = v  # x ^ (u x + v y)
            B[j][2 * a + 1] = -u  # y ^ (u x + v y)
    return B


def exactness_check(P, kernel=None):
    """(ok, messages) for the three-term sequence of the pair."""
    n = P.n
    if kernel is None:
        kernel = _frame(P)[0]
    A, _ = realexact_matrices(n)
    B = pair_B_matrix(P, kernel)
    msgs = []
    for j in range(n - 2):
        for c in range(n):
            s = sum((B[j][r] * A[r][c] for r in range(len(A)) if A[r][c]), P.ctx.zero)
            if s:
                msgs.append(f"exactness: composite nonzero at (k_{j + 1}, alpha_{c})")
    try:
        Bint = [[_as_int(x) for x in row] for row in B]
    except ContextError as exc:
        return False, msgs + [f"exactness: {exc}"]
    fa = invariant_factors(A)
    if fa != [1] * n:
        msgs.append(f"exactness: left map invariant factors {fa}")
    fb = invariant_factors(Bint) if n > 2 else []
    if fb != [1] * (n - 2):
        msgs.append(f"exactness: right map invariant factors {fb}")
    return not msgs, msgs


def _as_int(x):
    if isinstance(x, int):
        return x
    if hasattr(x, "is_constant") and x.is_constant():
        return x.constant_value()
    if hasattr(x, "v"):
        raise ContextError("Smith form over Z/m is not used")
    raise ContextError(f"entry {x} is not an integer")


# ---------------------------------------------------------------------------
# validation


@dataclass
class PairReport:
    ok: bool
    zeros_ones: bool
    exact: bool
    failures: list = field(default_factory=list)
    kernel_change: list | None = None
    n3_witness: list | None = None

    def __bool__(self):
        return self.ok


def _zeros_ones(P, kernel):
    """(ok, messages, C) for the coordinate criterion.

    C re-bases the kernel so that the pattern holds exactly; over the
    integers it is searched for, elsewhere the given kernel basis must work.
    """
    n, ctx = P.n, P.ctx
    Mcols = [_mu(P, k) for k in kernel]
    N = _natural(n, ctx)
    if Mcols == N:
        return True, [], identity(n - 2, ctx)
    msgs = []
    for j in range(n - 2):
        for i in range(1, n):
            got = (Mcols[j][2 * (i - 1)], Mcols[j][2 * (i - 1) + 1])
            want = (N[j][2 * (i - 1)], N[j][2 * (i - 1) + 1])
            if got != want:
                msgs.append(f"zeros-and-ones: zeta_{i} k_{j + 1} maps to "
                            f"({ctx.format(got[0])}, {ctx.format(got[1])}), "
                            f"expected ({ctx.format(want[0])}, {ctx.format(want[1])})")
    if isinstance(ctx, Integers):
        C = _solve_exact(Mcols, N)
        if C is not None and abs(det(C)) == 1:
            return True, [], C
    return False, msgs, None


def validate_pair(P):
    """Check ring and module axioms, phi, the coordinate criterion and exactness."""
    _check_shape(P)
    n, ctx = P.n, P.ctx
    shared = []
    shared += [f"ring axiom: {m}" for m in P.R.defects()]
    shared += P.I.defects(P.R)
    if not ctx.is_unit(det([list(r) for r in P.phi], ctx)):
        shared.append("phi is not invertible")
    try:
        kernel, xl, yl = _frame(P)
    except PairError as exc:
        return PairReport(False, False, False, shared + [str(exc)])
    zo_ok, zo_msgs, C = _zeros_ones(P, kernel)
    if isinstance(ctx, PolyRing) or isinstance(ctx, Integers):
        ex_ok, ex_msgs = exactness_check(P, kernel)
    else:
        ex_ok, ex_msgs = zo_ok, []
    zo = zo_ok and not shared
    ex = ex_ok and not shared
    rep = PairReport(zo and ex, zo, ex, shared + zo_msgs + ex_msgs, C)
    if rep.ok and n == 3:
        rep.n3_witness = _n3_witness(P, kernel, C)
    return rep


def _n3_witness(P, kernel, C):
    """Matrix of R -> I, r -> r k_1 (unimodular for a valid 3-pair)."""
    ctx = P.ctx
    k = [C[0][0] * x for x in kernel[0]]
    cols = [_act(P, [ctx.one if t == i else ctx.zero for t in range(3)], k) for i in range(3)]
    W = [[cols[j][i] for j in range(3)] for i in range(3)]
    if not ctx.is_unit(det(W, ctx)):
        raise PairError("R -> I is not an isomorphism")
    return W


# ---------------------------------------------------------------------------
# normalization and the form


def normalize(P):
    """Bring a valid pair to the normalized bases and read off a_0..a_n."""
    rep = validate_pair(P)
    if not rep.ok:
        raise PairError("; ".join(rep.failures[:5]) or "invalid pair")
    n, ctx = P.n, P.ctx
    kernel, x, y = _frame(P)
    C = rep.kernel_change
    ks = [[sum((C[m][j] * kernel[m][r] for m in range(n - 2)), ctx.zero) for r in range(n)]
          for j in range(n - 2)]

    def yd(v):
        return _q(P, v)[1]

    def xd(v):
        return _q(P, v)[0]

    def add(u, c, v):
        return [a + c * b for a, b in zip(u, v)]

    for i in range(2, n):
        c = yd(_act(P, _s(P, i), x))
        if c:
            x = add(x, -c, ks[n - i - 1])
    zetas = []
    for i in range(1, n):
        s = _s(P, i)
        s[0] = s[0] - xd(_act(P, s, x))
        zetas.append(s)
    for i in range(2, n):
        c = yd(_act(P, zetas[i - 1], y))
        if c:
            y = add(y, -c, ks[n - i - 1])
    e0 = [ctx.one] + [ctx.zero] * (n - 1)
    PR = [[v[r] for v in [e0] + zetas] for r in range(n)]
    cols = ks + [x, y]
    S = [[v[r] for v in cols] for r in range(n)]
    R2 = P.R.rebase(PR)
    I2 = P.I.rebase(PR, S)
    quot = _std_quot(n, ctx)
    phi = identity(n - 1, ctx)
    new = BinaryPair(n, R2, ActionTable(n, n, ctx, I2.d, None, P.twist), quot, phi, P.twist)
    return BasedPair(new, _read_a(new))


def _read_a(P):
    n, d = P.n, P.I.d
    xi, yi = n - 2, n - 1
    a = [d[1][xi][yi], d[1][yi][yi]]
    for i in range(1, n):
        a.append(-d[i][yi][xi])
    return tuple(a)


def _form_formula(P, x, y):
    """Coefficients (f_0..f_n) of the form of P with lifts x, y of the Q basis."""
    n, ctx = P.n, P.ctx

    def term(i, v, which):
        if not 1 <= i <= n - 1:
            return ctx.zero
        return _q(P, _act(P, _s(P, i), v))[which]

    out = []
    for j in range(n + 1):
        k = n - j  # coefficient of sym(x^k y^(n-k)) is f_{n-k}
        i = n - k
        out.append(term(i + 1, x, 1) + term(i, y, 1) - term(i, x, 0) - term(i - 1, y, 0))
    return out


def pair_to_form(P, seed=0):
    """The twisted form of a pair, checked under a second random splitting."""
    pair = P.pair if isinstance(P, BasedPair) else P
    _check_shape(pair)
    n, ctx = pair.n, pair.ctx
    kernel, x, y = _frame(pair)
    coeffs = _form_formula(pair, x, y)
    rng = random.Random(seed)
    x2, y2 = list(x), list(y)
    for k in kernel:
        cx, cy = rng.randint(-5, 5), rng.randint(-5, 5)
        x2 = [a + cx * b for a, b in zip(x2, k)]
        y2 = [a + cy * b for a, b in zip(y2, k)]
    again = _form_formula(pair, x2, y2)
    if again != coeffs:
        raise WellDefinednessError("form depends on the splitting Q -> I")
    return BinaryForm(n, tuple(coeffs), ctx, -1)


def form_to_pair(f):
    """Based pair of R_f and I_f^(n-3) with phi = identity."""
    n = f.n
    if n < 3:
        raise ValueError("binary pairs need n >= 3")
    ctx = f.ctx
    raw = BinaryPair(n, build_ring(f), build_module(f, n - 3), _std_quot(n, ctx),
                     identity(n - 1, ctx), -1)
    return normalize(raw)


# ---------------------------------------------------------------------------
# reconstruction from coefficients


class ReconstructionError(ArithmeticError):
    pass


def reconstruct_from_coefficients(a, n, ctx=ZZ):
    """Normalized pair with coefficients a_0..a_n, from the commutation relations.

    Rows of Z_i (1-indexed, rows n-1 and n are the x and y coordinates) are
    seeded from the quotient maps and propagated by

        row_{n-1-i}(Z_l) = row_{n-1-l}(Z_i) - a_{l+1} row_n(Z_i) + a_{i+1} row_n(Z_l)
        row_{n-i}(Z_l)   = row_{n-l}(Z_i)                          (i, l >= 2)
        row_{n-l}(Z_1)   = a_0 row_{n-1}(Z_l) + a_1 row_n(Z_l)      (l >= 2)

    which are the x- and y-rows of Z_i Z_l = Z_l Z_i.
    """
    if n < 3:
        raise ValueError("binary pairs need n >= 3")
    a = [ctx.coerce(v) for v in a]
    if len(a) != n + 1:
        raise ValueError(f"need {n + 1} coefficients")
    zero, one = ctx.zero, ctx.one
    rows = {}  # (i, r) -> list over columns 1..n

    def seed(i):
        rx = [zero] * n
        ry = [zero] * n
        for j in range(1, n - 1):
            if i + j == n - 1:
                rx[j - 1] = one
            if i + j == n:
                ry[j - 1] = one
        rx[n - 1] = -a[i + 1]
        if i == 1:
            ry[n - 2] = a[0]
            ry[n - 1] = a[1]
        rows[(i, n - 1)] = rx
        rows[(i, n)] = ry

    for i in range(1, n):
        seed(i)

    def put(i, r, val):
        if r < 1:
            return False
        old = rows.get((i, r))
        if old is None:
            rows[(i, r)] = val
            return True
        if old != val:
            raise ReconstructionError(f"row {r} of Z_{i} is overdetermined inconsistently")
        return False

    def get(i, r):
        if r < 1:
            return [zero] * n
        return rows.get((i, r))

    def comb(*terms):
        out = [zero] * n
        for c, v in terms:
            if c:
                out = [p + c * q for p, q in zip(out, v)]
        return out

    changed = True
    while changed:
        changed = False
        for i in range(1, n):
            for l in range(1, n):
                src = get(i, n - 1 - l)
                if src is not None and n - 1 - i >= 1:
                    val = comb((one, src), (-a[l + 1], rows[(i, n)]), (a[i + 1], rows[(l, n)]))
                    changed |= put(l, n - 1 - i, val)
                if i >= 2 and l >= 2:
                    src = get(i, n - l)
                    if src is not None:
                        changed |= put(l, n - i, src)
                if i == 1 and l >= 2:
                    val = comb((a[0], rows[(l, n - 1)]), (a[1], rows[(l, n)]))
                    changed |= put(1, n - l, val)
    Z = [identity(n, ctx)]
    for i in range(1, n):
        M = []
        for r in range(1, n + 1):
            row = rows.get((i, r))
            if row is None:
                raise ReconstructionError(f"row {r} of Z_{i} was not determined")
            M.append(row)
        Z.append(M)
    prods = {}
    for i in range(n):
        for l in range(n):
            prods[(i, l)] = matmul(Z[i], Z[l], ctx)
    for i in range(n):
        for l in range(i + 1, n):
            if prods[(i, l)] != prods[(l, i)]:
                raise ReconstructionError(f"Z_{i} and Z_{l} do not commute")
    # distinguishing entries (0-indexed): Z_0 at (n-2, n-2), Z_k at (n-2, n-2-k)
    # for k <= n-2, Z_{n-1} at (n-1, 0)
    spots = [(n - 2, n - 2)] + [(n - 2, n - 2 - k) for k in range(1, n - 1)] + [(n - 1, 0)]
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for l in range(n):
            Pm = prods[(i, l)]
            coeffs = [Pm[r][s] for r, s in spots]
            rebuilt = [[sum((coeffs[k] * Z[k][r][s] for k in range(n)), zero)
                        for s in range(n)] for r in range(n)]
            if rebuilt != Pm:
                raise ReconstructionError(f"Z_{i} Z_{l} is not in the span of the Z_k")
            c[i][l] = coeffs
    d = [[[Z[i][r][b] for r in range(n)] for b in range(n)] for i in range(n)]
    pair = BinaryPair(n, MultTable(n, ctx, c), ActionTable(n, n, ctx, d, None, -1),
                      _std_quot(n, ctx), identity(n - 1, ctx), -1)
    return BasedPair(pair, tuple(a))


# ---------------------------------------------------------------------------
# exploration harness


def pair_search(n, height, ctx=ZZ):
    """Enumerate coefficient vectors with |a_i| <= height, rebuild and validate
    their pairs, and yield a summary per vector.  No characterization of the
    rings that occur is claimed."""
    for a in itertools.product(range(-height, height + 1), repeat=n + 1):
        bp = reconstruct_from_coefficients(a, n, ctx)
        rep = validate_pair(bp.pair)
        yield {"a": list(a), "valid": rep.ok, "disc": ring_disc(bp.pair.R)}


def _random_unimodular(size, rng, steps=None):
    M = identity(size)
    for _ in range(steps if steps is not None else 2 * size):
        i, j = rng.sample(range(size), 2) if size > 1 else (0, 0)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        M = [row[:] for row in M]
        for row in M:
            row[i] += c * row[j]
    if rng.random() < 0.5:
        M = [[-x for x in row] for row in M]
    return M


def perturb_pair(P, rng):
    """A random modification of an integer pair; returns (kind, new pair).

    Some kinds keep the pair valid (basis changes), others usually break it.
    """
    n = P.n
    kind = rng.choice(["action", "ring", "kernel", "lift", "phi", "quot", "ibasis", "qbasis"])
    if kind == "action":
        i, b, a = rng.randrange(1, n), rng.randrange(n), rng.randrange(n)
        return kind, P.with_I(P.I.with_entry(i, b, a, P.I.d[i][b][a] + rng.choice([-1, 1])))
    if kind == "ring":
        c = [[list(v) for v in row] for row in P.R.c]
        i, j, l = rng.randrange(1, n), rng.randrange(1, n), rng.randrange(n)
        c[i][j][l] += 1
        if i != j and rng.random() < 0.5:
            c[j][i][l] += 1
        return kind, BinaryPair(n, MultTable(n, P.ctx, c), P.I, P.quot, P.phi, P.twist)
    if kind in ("kernel", "lift", "ibasis"):
        S = identity(n)
        if kind == "kernel":
            C = _random_unimodular(n - 2, rng)
            for r in range(n - 2):
                for c in range(n - 2):
                    S[r][c] = C[r][c]
        elif kind == "lift":
            for c in (n - 2, n - 1):
                for r in range(n - 2):
                    S[r][c] = rng.randint(-3, 3)
        else:
            S = _random_unimodular(n, rng)
        I2 = P.I.rebase(identity(n), S)
        quot = [[sum(P.quot[q][r] * S[r][c] for r in range(n)) for c in range(n)]
                for q in range(2)]
        return kind, BinaryPair(n, P.R, I2, quot, P.phi, P.twist)
    if kind == "phi":
        M = _random_unimodular(n - 1, rng, steps=1)
        phi = [[sum(P.phi[r][t] * M[t][c] for t in range(n - 1)) for c in range(n - 1)]
               for r in range(n - 1)]
        return kind, BinaryPair(n, P.R, P.I, P.quot, phi, P.twist)
    if kind == "quot":
        quot = [list(r) for r in P.quot]
        quot[rng.randrange(2)][rng.randrange(n)] += rng.choice([-1, 1])
        return kind, BinaryPair(n, P.R, P.I, quot, P.phi, P.twist)
    g = _random_unimodular(2, rng)
    quot = [[sum(g[q][t] * P.quot[t][c] for t in range(2)) for c in range(n)] for q in range(2)]
    return kind, BinaryPair(n, P.R, P.I, quot, P.phi, P.twist)


def criteria_agree(P):
    """(agree, report) comparing the coordinate and exactness criteria."""
    try:
        rep = validate_pair(P)
    except PairError as exc:
        return True, PairReport(False, False, False, [str(exc)])
    return rep.zeros_ones == rep.exact, rep

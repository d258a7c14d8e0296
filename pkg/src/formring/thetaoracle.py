"""Concrete model of Q_f = K(theta)/(f_0 theta^n + ... + f_n).

Elements are coefficient vectors over the fraction field of the base ring,
so every computation here is division-based and independent of the integral
rewriting used to build tables.  Coordinates in module bases are recovered by
a triangular solve and checked for integrality; a fractional coordinate means
the element is not in the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import ZZ, ContextError, FractionField, NotDivisible
from .exactalg.linalg import hnf_rows, smith_normal_form, solve_field


class MembershipError(ArithmeticError):
    """Element is not in the requested module."""


def field_of(f):
    base = f.ctx.base if isinstance(f.ctx, FractionField) else f.ctx
    return FractionField(base)


def _check(f):
    if not f.coeffs[0]:
        raise ContextError("the theta model needs f_0 != 0")


@dataclass(frozen=True, eq=False)
class ThetaElement:
    """c_0 + c_1 theta + ... + c_{n-1} theta^(n-1) in Q_f."""

    f: object
    c: tuple

    def __post_init__(self):
        F = field_of(self.f)
        if len(self.c) != self.f.n:
            raise ValueError(f"need {self.f.n} coefficients, got {len(self.c)}")
        object.__setattr__(self, "c", tuple(F.coerce(x) for x in self.c))

    @property
    def field(self):
        return field_of(self.f)

    def __add__(self, other):
        other = _lift(self.f, other)
        return ThetaElement(self.f, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return ThetaElement(self.f, tuple(-a for a in self.c))

    def __sub__(self, other):
        return self + (-_lift(self.f, other))

    def __rsub__(self, other):
        return _lift(self.f, other) - self

    def __mul__(self, other):
        return theta_mul(self, _lift(self.f, other), self.f)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return theta_inverse(self) ** (-k)
        out = one(self.f)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        return self * theta_inverse(_lift(self.f, other))

    def __eq__(self, other):
        if not isinstance(other, ThetaElement):
            try:
                other = _lift(self.f, other)
            except (TypeError, ContextError):
                return False
        return all(a == b for a, b in zip(self.c, other.c))

    __hash__ = None

    def __repr__(self):
        terms = [f"{a}*t^{i}" for i, a in enumerate(self.c) if a]
        return "ThetaElement(" + (" + ".join(terms) or "0") + ")"


def _lift(f, x):
    if isinstance(x, ThetaElement):
        return x
    F = field_of(f)
    return ThetaElement(f, (F.coerce(x),) + (F.zero,) * (f.n - 1))


def one(f):
    return _lift(f, 1)


def theta(f, power=1):
    """theta^power for 0 <= power <= n-1."""
    F = field_of(f)
    if power >= f.n or power < 0:
        return theta(f) ** power
    return ThetaElement(f, tuple(F.one if i == power else F.zero for i in range(f.n)))


def theta_mul(a, b, f):
    """Product reduced with f_0 theta^n = -(f_1 theta^(n-1) + ... + f_n)."""
    _check(f)
    n = f.n
    F = field_of(f)
    prod = [F.zero] * (2 * n - 1)
    for i, x in enumerate(a.c):
        if x:
            for j, y in enumerate(b.c):
                if y:
                    prod[i + j] = prod[i + j] + x * y
    f0 = F.coerce(f.coeffs[0])
    for d in range(2 * n - 2, n - 1, -1):
        top = prod[d]
        if not top:
            continue
        q = top / f0
        prod[d] = F.zero
        for j in range(1, n + 1):
            if f.coeffs[j]:
                prod[d - j] = prod[d - j] - q * f.coeffs[j]
    return ThetaElement(f, tuple(prod[:n]))


def mult_matrix(a):
    """Columns are theta-coordinates of a * theta^j."""
    f = a.f
    cols = [(a * theta(f, j)).c for j in range(f.n)]
    return [[cols[j][i] for j in range(f.n)] for i in range(f.n)]


def theta_inverse(a):
    f = a.f
    F = field_of(f)
    rhs = [F.one] + [F.zero] * (f.n - 1)
    try:
        x = solve_field(mult_matrix(a), rhs, F)
    except ContextError:
        raise ZeroDivisionError(f"{a} is a zero divisor in Q_f") from None
    return ThetaElement(f, tuple(x))


def zeta(i, f):
    """zeta_i = f_0 theta^i + ... + f_{i-1} theta, zeta_0 = 1."""
    _check(f)
    if not 0 <= i <= f.n - 1:
        raise IndexError(f"zeta index {i} outside 0..{f.n - 1}")
    if i == 0:
        return one(f)
    F = field_of(f)
    c = [F.zero] * f.n
    for m in range(1, i + 1):
        c[m] = F.coerce(f.coeffs[i - m])
    return ThetaElement(f, tuple(c))


def nu(i, f):
    """nu_0 = f_0, nu_i = zeta_i + f_i."""
    if i == 0:
        return _lift(f, f.coeffs[0])
    return zeta(i, f) + f.coeffs[i]


def module_basis(f, k):
    """Literal basis of I_f^k as theta elements (nu basis for k = -1)."""
    _check(f)
    n = f.n
    if not -1 <= k <= n - 1:
        raise ValueError(f"k={k} outside -1..{n - 1}")
    if k == -1:
        return [nu(i, f) for i in range(n)]
    return [theta(f, i) if i <= k else zeta(i, f) for i in range(n)]


@dataclass(frozen=True)
class MixedBasisElement:
    k: int
    coords: tuple

    def evaluate(self, f):
        out = _lift(f, 0)
        for b, e in zip(self.coords, module_basis(f, self.k)):
            if b:
                out = out + e * b
        return out


def to_mixed_basis(a, k, f):
    """Coordinates of a in the basis of I_f^k.

    Solved over the fraction field; raises MembershipError when a coordinate
    is not in the base ring.
    """
    n = f.n
    F = field_of(f)
    basis = module_basis(f, k)
    # upper triangular: basis element b has top theta degree b
    coords = [F.zero] * n
    rest = list(a.c)
    for b in range(n - 1, -1, -1):
        piv = basis[b].c[b]
        x = rest[b] / piv
        coords[b] = x
        if x:
            rest = [r - x * e for r, e in zip(rest, basis[b].c)]
    out = []
    for b, x in enumerate(coords):
        try:
            out.append(F.to_base(x))
        except NotDivisible:
            raise MembershipError(f"coordinate {b} = {x} is not integral") from None
    return MixedBasisElement(k, tuple(out))


# ---------------------------------------------------------------------------
# global sections


def global_sections(f, k):
    """Sections of O(k) on S_f, as elements of Q_f.

    A section is a degree-k Laurent expression in x, y that is regular on the
    chart y != 0 (nonnegative x-exponents) and, modulo f, also on the chart
    x != 0 (nonnegative y-exponents).  Besides the monomials x^a y^(k-a), each
    shifted copy x^i y^(k-i-n) f vanishes modulo f, so its part regular on
    the first chart equals minus its part regular on the second and is a
    section.  Mapping x -> theta, y -> 1 lands in Q_f.
    """
    _check(f)
    n = f.n
    if not f.coeffs[n]:
        raise ContextError("global_sections needs f_n != 0 (move f by GL2 first)")
    if not -1 <= k <= n - 1:
        raise ValueError(f"k={k} outside -1..{n - 1}")
    laurent = []  # each section is a dict {(x_exp, y_exp): coeff}
    for a in range(k + 1):
        laurent.append({(a, k - a): 1})
    for i in range(-n + k + 1, 0):
        # x^i y^(k-i-n) f = sum_j f_j x^(i+n-j) y^(k-i-n+j)
        full = {}
        for j, fj in enumerate(f.coeffs):
            if fj:
                full[(i + n - j, k - i - n + j)] = fj
        pos = {e: c for e, c in full.items() if e[0] >= 0}
        neg = {e: c for e, c in full.items() if e[0] < 0}
        # the dropped part must be regular on the other chart
        assert all(e[1] >= 0 for e in neg), neg
        laurent.append(pos)
    out = []
    for sec in laurent:
        el = _lift(f, 0)
        for (xe, _), c in sec.items():
            el = el + theta(f, xe) * c
        out.append(el)
    return out


# ---------------------------------------------------------------------------
# lattices inside Q_f (integer base only)


def _int_base(f):
    base = f.ctx.base if isinstance(f.ctx, FractionField) else f.ctx
    if base != ZZ:
        raise ContextError("spans are canonicalized over the integers only")


class Span:
    """Z-span of elements of Q_f, stored as (den, HNF of den * coordinates)."""

    def __init__(self, f, elements):
        _int_base(f)
        self.f = f
        vecs = [[Fraction(x) for x in e.c] for e in elements]
        den = 1
        for v in vecs:
            for x in v:
                den = den * x.denominator // _gcd(den, x.denominator)
        self.den = den
        self.rows = hnf_rows([[int(x * den) for x in v] for v in vecs])

    def rank(self):
        return len(self.rows)

    def basis(self):
        return [ThetaElement(self.f, tuple(Fraction(x, self.den) for x in r))
                for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Span):
            return NotImplemented
        # compare on a common denominator
        d = self.den * other.den // _gcd(self.den, other.den)
        a = hnf_rows([[x * (d // self.den) for x in r] for r in self.rows])
        b = hnf_rows([[x * (d // other.den) for x in r] for r in other.rows])
        return a == b

    __hash__ = None

    def contains(self, x):
        return Span(self.f, self.basis() + [x]) == self

    def __repr__(self):
        return f"Span(den={self.den}, rows={self.rows})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def ring_span(f):
    return Span(f, [zeta(i, f) for i in range(f.n)])


def ideal_product_span(A, B, f):
    return Span(f, [a * b for a in A for b in B])


def colon(target, gens, f):
    """{x in Q_f : x * g in target for every g in gens} as a Span."""
    n = f.n
    T = target.basis()
    if len(T) != n:
        raise ContextError("colon needs a full-rank target lattice")
    Tmat = [[Fraction(x) for x in t.c] for t in T]  # rows
    F = FractionField(ZZ)
    # coordinates in the target basis: solve y * Tmat = v
    TmatT = [[Tmat[r][c] for r in range(n)] for c in range(n)]
    cols = []
    for g in gens:
        for i in range(n):
            # image of theta^i under multiplication by g, in target coordinates
            v = (theta(f, i) * g).c
            cols.append(solve_field(TmatT, list(v), F))
    # row i: target coordinates of theta^i * g for every generator g
    A = []
    ncols = len(gens) * n
    for i in range(n):
        row = []
        for gi in range(len(gens)):
            row.extend(cols[gi * n + i])
        A.append(row)
    D = 1
    for row in A:
        for x in row:
            D = D * x.denominator // _gcd(D, x.denominator)
    Aint = [[int(x * D) for x in row] for row in A]
    U, Dm, _ = smith_normal_form(Aint)
    rows = []
    for i in range(n):
        d = Dm[i][i] if i < ncols else 0
        if d == 0:
            raise ContextError("colon lattice is not finitely generated")
        scale = Fraction(D, d)
        rows.append(ThetaElement(f, tuple(scale * u for u in U[i])))
    return Span(f, rows)


def is_invertible_lattice(gens, f):
    """Whether the lattice spanned by gens is an invertible R_f-module."""
    R = ring_span(f)
    I = Span(f, gens)
    J = colon(R, I.basis(), f)
    return ideal_product_span(I.basis(), J.basis(), f) == R

"""Binary n-ic forms f_0 x^n + f_1 x^(n-1) y + ... + f_n y^n.

GL2 convention: a matrix (a, b, c, d) acts by the substitution
``(x, y) -> (a x + c y, b x + d y)``, i.e. the row vector (x, y) is multiplied
on the right by [[a, b], [c, d]].  With this convention
``gl2_act(gl2_act(f, g1), g2) == gl2_act(f, g2 @ g1)``.
A form with twist tag ``l`` is additionally scaled by ``det^l``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .exactalg import ZZ, ContextError, Integers, IntegersMod, Specialize, universal_ring
from .exactalg.linalg import det


@dataclass(frozen=True)
class BinaryForm:
    n: int
    coeffs: tuple
    ctx: object = ZZ
    twist: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree must be positive")
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"a binary {self.n}-ic form needs {self.n + 1} coefficients, "
                             f"got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.ctx.coerce(c) for c in self.coeffs))

    def __getitem__(self, i):
        return self.coeffs[i]

    def is_zero(self):
        return not any(self.coeffs)

    def with_twist(self, twist):
        return BinaryForm(self.n, self.coeffs, self.ctx, twist)

    def specialize(self, hom):
        return BinaryForm(self.n, tuple(hom(c) for c in self.coeffs), hom.target, self.twist)

    def __str__(self):
        n = self.n
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "".join(s for s in (_pw("x", n - i), _pw("y", i)) if s)
            parts.append(f"({self.ctx.format(c)})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) or "0"


def _pw(v, k):
    return "" if k == 0 else (v if k == 1 else f"{v}^{k}")


@dataclass(frozen=True)
class GL2Matrix:
    a: object
    b: object
    c: object
    d: object

    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other):
        return GL2Matrix(self.a * other.a + self.b * other.c,
                         self.a * other.b + self.b * other.d,
                         self.c * other.a + self.d * other.c,
                         self.c * other.b + self.d * other.d)

    def check(self, ctx=ZZ):
        if not ctx.is_unit(ctx.coerce(self.det())):
            raise ContextError(f"{self} does not have unit determinant")
        return self


IDENTITY = GL2Matrix(1, 0, 0, 1)
SWAP = GL2Matrix(0, 1, 1, 0)
SHEAR = GL2Matrix(1, 0, 1, 1)


def _binmul(p, q, zero):
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = out[i + j] + a * b
    return out


def gl2_act(f, g):
    """Substitute ``(x, y) -> (a x + c y, b x + d y)`` and scale by det^twist."""
    ctx = f.ctx
    a, b, c, d = (ctx.coerce(v) for v in (g.a, g.b, g.c, g.d))
    lin_x = [a, c]  # a x + c y as coefficients of (x, y)
    lin_y = [b, d]
    out = [ctx.zero] * (f.n + 1)
    pw_x = [[ctx.one]]
    for _ in range(f.n):
        pw_x.append(_binmul(pw_x[-1], lin_x, ctx.zero))
    pw_y = [[ctx.one]]
    for _ in range(f.n):
        pw_y.append(_binmul(pw_y[-1], lin_y, ctx.zero))
    for i, fi in enumerate(f.coeffs):
        if not fi:
            continue
        term = _binmul(pw_x[f.n - i], pw_y[i], ctx.zero)
        for j, t in enumerate(term):
            out[j] = out[j] + fi * t
    if f.twist:
        dt = a * d - b * c
        scale = dt**f.twist if f.twist > 0 else ctx.exact_div(ctx.one, dt) ** (-f.twist)
        out = [x * scale for x in out]
    return BinaryForm(f.n, tuple(out), ctx, f.twist)


def is_primitive(f):
    if not isinstance(f.ctx, (Integers, IntegersMod)):
        raise ContextError(f"primitivity is not decided over {f.ctx.descriptor}")
    return f.ctx.content(f.coeffs) == 1


def universal_form(n, twist=0):
    R = universal_ring(n)
    return BinaryForm(n, tuple(R.gens()), R, twist)


def universal_hom(n, values, target=ZZ):
    """Specialization Z[f_0..f_n] -> target sending f_i to values[i]."""
    return Specialize(universal_ring(n), list(values), target)


def specialize_universal(n, values, target=ZZ):
    return universal_form(n).specialize(universal_hom(n, values, target))


@functools.lru_cache(maxsize=None)
def universal_discriminant(n):
    """Disc of the universal n-ic form as an element of Z[f_0..f_n].

    ``(-1)^(n(n-1)/2) Res(F, F') / f_0`` with F(t) = f(t, 1) of formal degree n.
    """
    if n < 2:
        raise ValueError("discriminant needs n >= 2")
    R = universal_ring(n)
    fs = R.gens()
    F = list(fs)  # coefficients of t^n .. t^0
    dF = [(n - i) * fs[i] for i in range(n)]  # t^(n-1) .. t^0
    size = 2 * n - 1
    rows = []
    for r in range(n - 1):
        rows.append([R.zero] * r + F + [R.zero] * (size - r - len(F)))
    for r in range(n):
        rows.append([R.zero] * r + dF + [R.zero] * (size - r - len(dF)))
    res = det(rows, R)
    disc = R.exact_div(res, fs[0])
    return disc if (n * (n - 1) // 2) % 2 == 0 else -disc


def disc_form(f):
    """Discriminant, normalized so n=2 gives f_1^2 - 4 f_0 f_2."""
    D = universal_discriminant(f.n)
    if f.ctx == universal_ring(f.n) and f.coeffs == tuple(universal_ring(f.n).gens()):
        return D
    return Specialize(universal_ring(f.n), list(f.coeffs), f.ctx)(D)


def parse_form(text, n=None, ctx=ZZ, twist=0):
    """Parse ``"f0,f1,...,fn"``.  Errors name the offending position."""
    parts = text.split(",")
    coeffs = []
    pos = 0
    for i, p in enumerate(parts):
        s = p.strip()
        try:
            coeffs.append(ctx.parse(s))
        except (ValueError, ContextError) as exc:
            raise ValueError(f"bad coefficient f{i} {s!r} at character {pos}: {exc}") from None
        pos += len(p) + 1
    if n is None:
        n = len(coeffs) - 1
    if len(coeffs) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients for n={n}, got {len(coeffs)}")
    return BinaryForm(n, tuple(coeffs), ctx, twist)

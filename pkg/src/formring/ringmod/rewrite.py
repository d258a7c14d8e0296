"""Integral rewriting of products of theta powers and zeta elements.

An expression is a dict keyed by ``("t", a)`` (theta^a) and ``("z", j)``
(zeta_j) with coefficients in the base ring of the form.  Products are
reduced with the identities

    zeta_j theta^a = zeta_(a+j) - (f_j theta^a + ... + f_(a+j-1) theta)   a + j <= n-1
    zeta_j theta^a = -(f_j theta^a + ... + f_n theta^(a+j-n))             a + j >= n

and the zeta multiplication table, so no division happens except the final
division by f_0 when a theta power above the target range must be traded
for a zeta.  Running this on the universal form gives tables whose entries are
integer polynomials in f_0..f_n.
"""

from __future__ import annotations

from ..exactalg import NotDivisible


class MembershipError(ArithmeticError):
    """The expression is not in the span of the requested basis."""


def _add(out, key, c):
    if not c:
        return
    if key == ("z", 0):
        key = ("t", 0)
    s = out.get(key)
    s = c if s is None else s + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def zeta_product(fs, i, j):
    """zeta_i zeta_j as an expression (multiplication table of the ring)."""
    n = len(fs) - 1
    out = {}
    if i == 0 or j == 0:
        _add(out, ("z", i + j), 1)
        return out
    for k in range(max(i + j - n, 1), i + 1):
        _add(out, ("z", k), -fs[i + j - k])
    for k in range(j + 1, min(i + j, n) + 1):
        if k == n:
            _add(out, ("t", 0), -(fs[i + j - n] * fs[n]))
        else:
            _add(out, ("z", k), fs[i + j - k])
    return out


def theta_zeta(fs, a, j):
    """theta^a zeta_j as an expression."""
    n = len(fs) - 1
    out = {}
    if j == 0:
        out[("t", a)] = 1
        return out
    if a == 0:
        out[("z", j)] = 1
        return out
    if a + j <= n - 1:
        _add(out, ("z", a + j), 1)
        for m in range(j, a + j):
            _add(out, ("t", a + j - m), -fs[m])
    else:
        for m in range(j, n + 1):
            _add(out, ("t", a + j - m), -fs[m])
    return out


def mul(fs, x, y):
    n = len(fs) - 1
    out = {}
    for (kx, ix), cx in x.items():
        for (ky, iy), cy in y.items():
            c = cx * cy
            if not c:
                continue
            if kx == "t" and ky == "t":
                if ix + iy > n - 1:
                    raise MembershipError(f"theta^{ix + iy} is outside the integral range")
                prod = {("t", ix + iy): 1}
            elif kx == "t":
                prod = theta_zeta(fs, ix, iy)
            elif ky == "t":
                prod = theta_zeta(fs, iy, ix)
            else:
                prod = zeta_product(fs, ix, iy)
            for key, v in prod.items():
                _add(out, key, c * v)
    return out


def basis_exprs(fs, k, primed=False):
    """Module basis of I_k: theta^0..theta^k, zeta_(k+1)..zeta_(n-1).

    ``k == -1`` gives f_0, zeta_1 + f_1, ..., zeta_(n-1) + f_(n-1).  With
    ``primed`` the zeta elements above k are shifted to zeta_i + f_i.
    """
    n = len(fs) - 1
    out = []
    for b in range(n):
        if b <= k:
            out.append({("t", b): 1})
        elif k == -1 and b == 0:
            out.append({("t", 0): fs[0]})
        else:
            e = {("z", b): 1}
            if primed or k == -1:
                _add(e, ("t", 0), fs[b])
            out.append(e)
    return out


def basis2_reversed(fs, k):
    """Basis of I_k made of theta^0..theta^k and theta^k zeta_m, reversed."""
    n = len(fs) - 1
    if k == -1:
        return list(reversed(basis_exprs(fs, -1)))
    elems = [{("t", a): 1} for a in range(k + 1)]
    for m in range(1, n - k):
        elems.append(theta_zeta(fs, k, m))
    return list(reversed(elems))


def coords(fs, expr, k, exact_div):
    """Coordinates of expr in the basis of I_k (``basis_exprs(fs, k)``)."""
    n = len(fs) - 1
    work = dict(expr)
    # trade theta powers above k for zetas (needs f_0 | coefficient)
    for a in range(n - 1, max(k, 0), -1):
        c = work.pop(("t", a), None)
        if c is None:
            continue
        try:
            q = exact_div(c, fs[0])
        except NotDivisible:
            raise MembershipError(f"theta^{a} coefficient {c} not divisible by f_0") from None
        _add(work, ("z", a), q)
        for m in range(1, a):
            _add(work, ("t", m), -(q * fs[a - m]))
    if k == -1:
        # theta^1.. already traded; rewrite zeta_j = nu_j - f_j and 1 = nu_0 / f_0
        out = [None] * n
        for j in range(1, n):
            c = work.pop(("z", j), 0)
            out[j] = c
            if c:
                _add(work, ("t", 0), -(c * fs[j]))
        c0 = work.pop(("t", 0), 0)
        try:
            out[0] = exact_div(c0, fs[0]) if c0 else c0
        except NotDivisible:
            raise MembershipError(f"constant {c0} not divisible by f_0") from None
        if work:
            raise MembershipError(f"leftover terms {work}")
        return out
    # expand zeta_j (j <= k) into theta powers
    for j in range(k, 0, -1):
        c = work.pop(("z", j), None)
        if c is None:
            continue
        for m in range(1, j + 1):
            _add(work, ("t", m), c * fs[j - m])
    out = []
    for b in range(n):
        key = ("t", b) if b <= k else ("z", b)
        out.append(work.pop(key, 0))
    if work:
        raise MembershipError(f"leftover terms {work}")
    return out

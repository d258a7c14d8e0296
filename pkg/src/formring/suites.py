"""Verification routines shared by the command line and the test suite.

Each ``check_*`` function returns a list of failure messages; an empty list
means every identity held exactly.
"""

from __future__ import annotations

import random

from . import thetaoracle as th
from .exactalg import IntegersMod, Reduce, det
from .forms import SHEAR, SWAP, BinaryForm, disc_form, is_primitive, universal_form
from .pairs import (form_to_pair, pair_to_form, perturb_pair, criteria_agree,
                    reconstruct_from_coefficients)
from .ringmod import (build_module, build_ring, dual_pairing_matrix, gl2_invariance_witness,
                      intertwining_defects, inverse_different_map, is_gorenstein,
                      is_invertible_family, ring_disc, specialize_table)


def random_form(n, rng, height=20, lead_nonzero=False):
    while True:
        c = [rng.randint(-height, height) for _ in range(n + 1)]
        if lead_nonzero and not c[0]:
            continue
        return BinaryForm(n, tuple(c))


def imprimitive_form(n, rng, height=20):
    """Random form with content > 1."""
    g = rng.randint(2, 6)
    while True:
        f = random_form(n, rng, max(1, height // g))
        if not f.is_zero():
            return BinaryForm(n, tuple(g * x for x in f.coeffs))


def primitive_form(n, rng, height=20):
    while True:
        f = random_form(n, rng, height)
        if not f.is_zero() and is_primitive(f):
            return f


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------


def check_universal(n):
    """Ring and module axioms over Z[f_0..f_n]; disc identity for n <= 4."""
    u = universal_form(n)
    out = []
    R = build_ring(u)
    out += [f"n={n} ring: {m}" for m in R.defects()]
    for k in range(-1, n):
        T = build_module(u, k)
        out += [f"n={n} k={k}: {m}" for m in T.defects(R)]
        M = dual_pairing_matrix(u, k)
        if M != [[u.ctx.one if i == j else u.ctx.zero for j in range(n)] for i in range(n)]:
            out.append(f"n={n} k={k}: dual pairing is not the identity")
    if n <= 4 and ring_disc(R) != disc_form(u):
        out.append(f"n={n}: ring_disc differs from disc_form")
    return out


def check_form(f):
    """Table-route identities for one integer form."""
    n = f.n
    out = []
    R = build_ring(f)
    out += R.defects()
    if ring_disc(R) != disc_form(f):
        out.append(f"{f.coeffs}: disc {ring_disc(R)} != {disc_form(f)}")
    for k in range(-1, n):
        out += [f"k={k}: {m}" for m in build_module(f, k).defects(R)]
        if dual_pairing_matrix(f, k) != _identity(n):
            out.append(f"{f.coeffs} k={k}: dual pairing is not the identity")
    if n >= 2:
        M = inverse_different_map(f)
        if abs(det(M)) != 1:
            out.append(f"{f.coeffs}: inverse different map has det {det(M)}")
        if intertwining_defects(f, M):
            out.append(f"{f.coeffs}: inverse different map does not intertwine")
    if not f.is_zero():
        prim = is_primitive(f)
        if is_invertible_family(f) != prim:
            out.append(f"{f.coeffs}: invertibility differs from primitivity")
        if n >= 3 and is_gorenstein(f) != prim:
            out.append(f"{f.coeffs}: Gorenstein test differs from primitivity")
    return out


def check_oracle(f):
    """Tables against products computed in Q_f (needs f_0 != 0)."""
    n = f.n
    out = []
    R = build_ring(f)
    z = [th.zeta(i, f) for i in range(n)]
    for i in range(n):
        for j in range(n):
            got = th.to_mixed_basis(z[i] * z[j], 0, f).coords
            if list(got) != list(R.c[i][j]):
                out.append(f"{f.coeffs}: zeta_{i} zeta_{j} table {list(R.c[i][j])} "
                           f"oracle {list(got)}")
    for k in range(-1, n):
        T = build_module(f, k)
        basis = th.module_basis(f, k)
        for i in range(n):
            for b in range(n):
                try:
                    got = th.to_mixed_basis(z[i] * basis[b], k, f).coords
                except th.MembershipError as exc:
                    out.append(f"{f.coeffs} k={k}: zeta_{i} e_{b} not in module ({exc})")
                    continue
                if list(got) != list(T.d[i][b]):
                    out.append(f"{f.coeffs} k={k}: zeta_{i} e_{b} table {list(T.d[i][b])} "
                               f"oracle {list(got)}")
        if f.coeffs[n]:
            if th.Span(f, th.global_sections(f, k)) != th.Span(f, basis):
                out.append(f"{f.coeffs} k={k}: global sections span a different module")
    return out


def first_mismatch(p, q):
    """Where two based pairs first differ, as a short string (None if equal)."""
    if p.a != q.a:
        return f"coefficients {list(p.a)} != {list(q.a)}"
    A, B = p.pair, q.pair
    n = A.n
    for i in range(n):
        for j in range(n):
            for l in range(n):
                if A.R.c[i][j][l] != B.R.c[i][j][l]:
                    return f"R.c[{i}][{j}][{l}]: {A.R.c[i][j][l]} != {B.R.c[i][j][l]}"
                if A.I.d[i][j][l] != B.I.d[i][j][l]:
                    return f"I.d[{i}][{j}][{l}]: {A.I.d[i][j][l]} != {B.I.d[i][j][l]}"
    if A != B:
        return "quotient or phi differ"
    return None


def check_roundtrip(f, seed=0):
    """form -> pair -> form, and coefficients -> pair -> same tables."""
    out = []
    bp = form_to_pair(f)
    g = pair_to_form(bp, seed=seed)
    if g.coeffs != f.coeffs:
        out.append(f"{list(f.coeffs)}: pair gives form {list(g.coeffs)}")
    rc = reconstruct_from_coefficients(g.coeffs, f.n, f.ctx)
    mm = first_mismatch(rc, bp)
    if mm:
        out.append(f"{list(f.coeffs)}: reconstruction differs at {mm}")
    return out


def check_base_change(f, m):
    out = []
    h = Reduce(m)
    fr = BinaryForm(f.n, tuple(h(x) for x in f.coeffs), IntegersMod(m))
    if specialize_table(build_ring(f), h) != build_ring(fr):
        out.append(f"{f.coeffs} mod {m}: ring tables differ")
    for k in range(-1, f.n):
        if specialize_table(build_module(f, k), h) != build_module(fr, k):
            out.append(f"{f.coeffs} mod {m} k={k}: module tables differ")
    return out


def check_gl2(f):
    out = []
    for name, g in (("swap", SWAP), ("shear", SHEAR)):
        try:
            gl2_invariance_witness(f, g)
        except ArithmeticError as exc:
            out.append(f"{f.coeffs} {name}: {exc}")
    return out


def check_fuzz(n, trials, rng):
    out = []
    for _ in range(trials):
        P = form_to_pair(random_form(n, rng, 9)).pair
        kind, Q = perturb_pair(P, rng)
        agree, rep = criteria_agree(Q)
        if not agree:
            out.append(f"criteria disagree after {kind} perturbation: {rep.failures[:3]}")
    return out


def run_suite(name, n, trials, seed):
    """Run a named suite; returns (checks run, failures)."""
    rng = random.Random(seed)
    if name == "universal":
        return 1, check_universal(n)
    fails = []
    count = 0
    for _ in range(trials):
        count += 1
        if name == "random":
            f = random_form(n, rng)
            fails += check_form(f)
            if n >= 3:
                fails += check_roundtrip(f, seed)
            fails += check_base_change(f, rng.choice([2, 3, 4, 5, 12]))
            if not f.is_zero():
                fails += check_gl2(f)
        elif name == "oracle":
            fails += check_oracle(random_form(n, rng, lead_nonzero=True))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return count, fails


__all__ = [
    "check_base_change", "check_form", "check_fuzz", "check_gl2", "check_oracle",
    "check_roundtrip", "check_universal", "first_mismatch", "imprimitive_form",
    "primitive_form", "random_form", "run_suite",
]

"""Acceptance gate: nine end-to-end checks at zero tolerance.

Each test prints one ``PASS``/``FAIL`` line.  Run ``python3 tests/test_acceptance.py``
to get the nine lines without pytest, or ``pytest tests/test_acceptance.py -v``.
"""

from __future__ import annotations

import random
import sys
import time

import pytest

from formring.exactalg import IntegersMod, Reduce, det, invariant_factors, matmul
from formring.forms import BinaryForm, disc_form, is_primitive, universal_form
from formring.pairs import criteria_agree, form_to_pair, perturb_pair, realexact_matrices
from formring.ringmod import (build_module, build_ring, dual_pairing_matrix, intertwining_defects,
                              inverse_different_map, is_gorenstein, is_invertible_family,
                              ring_disc)
from formring import suites


@pytest.fixture
def report(capsys):
    def emit(label, fails, checked, t0):
        status = "PASS" if not fails else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] {label}: {checked} checks, {len(fails)} failures, "
                  f"{time.time() - t0:.1f}s")
            for msg in fails[:5]:
                print(f"    {msg}")
        assert not fails, fails[:5]
    return emit


def _forms(rng, count, ns, height=20, **kw):
    return [suites.random_form(rng.choice(ns), rng, height, **kw) for _ in range(count)]


def test_1_universal_axioms(report):
    t0 = time.time()
    fails = []
    for n in (3, 4, 5, 6):
        R = build_ring(universal_form(n))
        fails += [f"n={n} ring: {m}" for m in R.defects()]
        for k in range(-1, n):
            fails += [f"n={n} k={k}: {m}" for m in build_module(universal_form(n), k).defects(R)]
    report("1 universal ring/module axioms n=3..6", fails, 4, t0)


def test_2_discriminant(report):
    t0 = time.time()
    fails = []
    for n in (2, 3, 4):
        u = universal_form(n)
        if ring_disc(build_ring(u)) != disc_form(u):
            fails.append(f"universal n={n}")
    rng = random.Random(2)
    forms = _forms(rng, 500, range(2, 7), height=50)
    for f in forms:
        if ring_disc(build_ring(f)) != disc_form(f):
            fails.append(f"{f.coeffs}")
    report("2 ring discriminant equals form discriminant", fails, 3 + len(forms), t0)


def test_3_oracle_equivalence(report):
    t0 = time.time()
    rng = random.Random(3)
    fails = []
    count = 0
    for n in range(2, 7):
        for _ in range(200):
            fails += suites.check_oracle(suites.random_form(n, rng, lead_nonzero=True))
            count += 1
    report("3 tables agree with the theta model", fails, count, t0)


def test_4_duality(report):
    t0 = time.time()
    rng = random.Random(4)
    fails = []
    forms = _forms(rng, 100, range(2, 7))
    for f in forms:
        n = f.n
        eye = [[int(i == j) for j in range(n)] for i in range(n)]
        for k in range(-1, n):
            if dual_pairing_matrix(f, k) != eye:
                fails.append(f"{f.coeffs} k={k}: pairing not the identity")
        M = inverse_different_map(f)
        if abs(det(M)) != 1:
            fails.append(f"{f.coeffs}: inverse different det {det(M)}")
        if intertwining_defects(f, M):
            fails.append(f"{f.coeffs}: inverse different not R-linear")
    report("4 duality pairing and inverse different", fails, len(forms), t0)


def test_5_invertibility_gorenstein(report):
    t0 = time.time()
    rng = random.Random(5)
    fails = []
    count = 0
    for n in (3, 4, 5, 6):
        forms = ([suites.primitive_form(n, rng) for _ in range(50)]
                 + [suites.imprimitive_form(n, rng) for _ in range(50)])
        for f in forms:
            prim = is_primitive(f)
            if is_invertible_family(f) != prim:
                fails.append(f"{f.coeffs}: invertibility != primitivity")
            if is_gorenstein(f) != prim:
                fails.append(f"{f.coeffs}: Gorenstein != primitivity")
            count += 1
    report("5 invertible and Gorenstein exactly when primitive", fails, count, t0)


def test_6_round_trips(report):
    t0 = time.time()
    rng = random.Random(6)
    fails = []
    count = 0
    for n in range(3, 9):
        for _ in range(200):
            fails += suites.check_roundtrip(suites.random_form(n, rng), seed=count)
            count += 1
    for n in (3, 4):
        fails += suites.check_roundtrip(universal_form(n))
        count += 1
    report("6 form <-> pair <-> coefficients round trips", fails, count, t0)


def test_7_base_change(report):
    t0 = time.time()
    rng = random.Random(7)
    fails = []
    divisible = 0
    for i in range(100):
        m = rng.choice([2, 3, 4, 5, 12])
        f = suites.random_form(rng.randint(2, 6), rng)
        if i % 5 == 0:
            f = BinaryForm(f.n, tuple(m * x for x in f.coeffs))
        if all(x % m == 0 for x in f.coeffs):
            divisible += 1
            # the reduction is the zero form: every product of zetas vanishes
            fr = BinaryForm(f.n, tuple(Reduce(m)(x) for x in f.coeffs), IntegersMod(m))
            R = build_ring(fr)
            if any(R.c[i][j][l] for i in range(1, f.n) for j in range(1, f.n)
                   for l in range(f.n)):
                fails.append(f"{f.coeffs} mod {m}: zero form has nonzero products")
        fails += suites.check_base_change(f, m)
    assert divisible >= 20
    report("7 build-then-reduce equals reduce-then-build", fails, 100, t0)


def test_8_gl2_witnesses(report):
    t0 = time.time()
    rng = random.Random(8)
    fails = []
    count = 0
    while count < 100:
        f = suites.random_form(rng.randint(2, 5), rng)
        if f.is_zero():
            continue
        fails += suites.check_gl2(f)
        count += 1
    report("8 GL2 swap/shear witnesses are unimodular intertwiners", fails, count, t0)


def test_9_exactness_and_fuzz(report):
    t0 = time.time()
    fails = []
    for n in range(3, 9):
        A, B = realexact_matrices(n)
        if any(any(row) for row in matmul(B, A)):
            fails.append(f"n={n}: B A != 0")
        if invariant_factors(A) != [1] * n:
            fails.append(f"n={n}: left map factors {invariant_factors(A)}")
        if invariant_factors(B) != [1] * (n - 2):
            fails.append(f"n={n}: right map factors {invariant_factors(B)}")
    rng = random.Random(9)
    outcomes = set()
    for t in range(1000):
        P = form_to_pair(suites.random_form(3 + t % 4, rng, 9)).pair
        kind, Q = perturb_pair(P, rng)
        agree, rep = criteria_agree(Q)
        outcomes.add(rep.zeros_ones)
        if not agree:
            fails.append(f"criteria disagree after {kind} perturbation: {rep.failures[:3]}")
    if outcomes != {True, False}:
        fails.append(f"fuzzing only produced outcome {outcomes}")
    report("9 exact sequence SNF and agreement of pair criteria", fails, 1006, t0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

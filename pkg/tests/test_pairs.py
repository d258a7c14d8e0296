import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formring.exactalg import IntegersMod, Reduce, det, identity, matmul, universal_ring
from formring.forms import BinaryForm, universal_form
from formring.pairs import (BasedPair, BinaryPair, PairError, criteria_agree,
                            exactness_check, form_to_pair, normalize, pair_search,
                            pair_to_form, perturb_pair, realexact_matrices,
                            reconstruct_from_coefficients, validate_pair)
from formring.ringmod import build_module, build_ring
from formring.suites import first_mismatch, random_form


def int_forms(nmin=3, nmax=7):
    return st.integers(nmin, nmax).flatmap(
        lambda n: st.lists(st.integers(-15, 15), min_size=n + 1, max_size=n + 1).map(
            lambda c: BinaryForm(n, tuple(c))))


def _image_in_q(pair, i, j):
    """Q-coordinates of zeta_i k_j in a normalized pair."""
    n = pair.n
    col = pair.I.d[i][j - 1]
    return col[n - 2], col[n - 1]


def _check_zeros_and_ones(pair):
    n = pair.n
    one, zero = pair.ctx.one, pair.ctx.zero
    for i in range(1, n):
        for j in range(1, n - 1):
            want = (one if i + j == n - 1 else zero, one if i + j == n else zero)
            assert _image_in_q(pair, i, j) == want, (i, j)


def test_cubic_example():
    f = BinaryForm(3, (1, 0, 0, 1))
    bp = form_to_pair(f)
    assert bp.a == (1, 0, 0, 1)
    assert pair_to_form(bp).coeffs == (1, 0, 0, 1)
    assert pair_to_form(bp).twist == -1
    assert validate_pair(bp.pair).ok


def test_cubic_module_is_the_ring():
    f = BinaryForm(3, (2, -1, 3, 5))
    assert build_module(f, 0).d == build_ring(f).c
    rep = validate_pair(form_to_pair(f).pair)
    assert rep.ok and abs(det(rep.n3_witness)) == 1


@settings(max_examples=40, deadline=None)
@given(int_forms())
def test_form_pair_form(f):
    bp = form_to_pair(f)
    assert bp.a == f.coeffs
    assert pair_to_form(bp, seed=1).coeffs == f.coeffs
    assert pair_to_form(bp, seed=2).coeffs == f.coeffs
    assert validate_pair(bp.pair).ok
    _check_zeros_and_ones(bp.pair)


@settings(max_examples=40, deadline=None)
@given(int_forms())
def test_reconstruction_matches(f):
    bp = form_to_pair(f)
    rc = reconstruct_from_coefficients(f.coeffs, f.n)
    assert first_mismatch(rc, bp) is None
    assert rc == bp


@pytest.mark.parametrize("n", [3, 4])
def test_universal_round_trip(n):
    u = universal_form(n)
    bp = form_to_pair(u)
    assert bp.a == tuple(universal_ring(n).gens())
    assert pair_to_form(bp).coeffs == u.coeffs
    assert reconstruct_from_coefficients(u.coeffs, n, u.ctx) == bp
    _check_zeros_and_ones(bp.pair)


def test_reconstructed_actions_commute():
    for n in (3, 4, 5):
        u = universal_form(n)
        I = reconstruct_from_coefficients(u.coeffs, n, u.ctx).pair.I
        Z = [I.matrix(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                assert matmul(Z[i], Z[j], u.ctx) == matmul(Z[j], Z[i], u.ctx)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_zero_coefficients(n):
    bp = reconstruct_from_coefficients([0] * (n + 1), n)
    R = bp.pair.R
    assert all(x == 0 for i in range(1, n) for j in range(1, n) for x in R.c[i][j])
    assert pair_to_form(bp).is_zero()
    assert validate_pair(bp.pair).ok
    assert form_to_pair(BinaryForm(n, (0,) * (n + 1))) == bp


def test_residue_ring_pairs():
    f = BinaryForm(4, (3, 1, 4, 1, 5)).specialize(Reduce(6))
    bp = form_to_pair(f)
    assert bp.a == f.coeffs
    assert reconstruct_from_coefficients(f.coeffs, 4, IntegersMod(6)) == bp


def test_normalize_is_idempotent():
    bp = form_to_pair(BinaryForm(5, (2, -3, 1, 0, 4, 7)))
    assert normalize(bp.pair) == bp


@settings(max_examples=30, deadline=None)
@given(int_forms(3, 6), st.integers(0, 10**6))
def test_normalize_forgets_the_basis(f, seed):
    rng = random.Random(seed)
    bp = form_to_pair(f)
    for kind in ("kernel", "lift", "ibasis"):
        while True:
            k, Q = perturb_pair(bp.pair, rng)
            if k == kind:
                break
        assert normalize(Q) == bp


def test_perturbed_action_is_rejected_with_location():
    bp = form_to_pair(BinaryForm(4, (1, 2, 3, 4, 5)))
    I = bp.pair.I
    bad = bp.pair.with_I(I.with_entry(1, 2, 0, I.d[1][2][0] + 1))
    rep = validate_pair(bad)
    assert not rep.ok
    assert any("module axiom" in m and "z_1" in m for m in rep.failures)
    with pytest.raises(PairError):
        normalize(bad)


def test_shape_errors():
    bp = form_to_pair(BinaryForm(3, (1, 0, 0, 1)))
    P = bp.pair
    with pytest.raises(PairError):
        validate_pair(BinaryPair(3, P.R, P.I, P.quot[:1], P.phi))
    with pytest.raises(PairError):
        validate_pair(BinaryPair(3, P.R, P.I, P.quot, [[1]]))
    with pytest.raises(ValueError):
        form_to_pair(BinaryForm(2, (1, 1, 1)))


def test_phi_must_be_invertible():
    P = form_to_pair(BinaryForm(4, (1, 2, 3, 4, 5))).pair
    phi = [list(r) for r in P.phi]
    phi[0][0] = 2
    rep = validate_pair(BinaryPair(4, P.R, P.I, P.quot, phi))
    assert not rep.ok and "phi is not invertible" in rep.failures


def test_realexact_shapes():
    for n in range(3, 9):
        A, B = realexact_matrices(n)
        assert len(A) == 2 * (n - 1) and len(A[0]) == n
        assert len(B) == n - 2 and len(B[0]) == 2 * (n - 1)
        assert all(not any(r) for r in matmul(B, A))


def test_exactness_on_valid_pair():
    P = form_to_pair(BinaryForm(5, (1, -2, 0, 3, 1, 4))).pair
    ok, msgs = exactness_check(P)
    assert ok and msgs == []


def test_fuzzed_criteria_agree():
    rng = random.Random(11)
    seen = {True: 0, False: 0}
    for t in range(150):
        P = form_to_pair(random_form(3 + t % 3, rng, 9)).pair
        kind, Q = perturb_pair(P, rng)
        agree, rep = criteria_agree(Q)
        assert agree, (kind, rep.failures)
        seen[rep.zeros_ones] += 1
    assert seen[True] and seen[False]


def test_json_round_trip():
    for f in (BinaryForm(4, (1, 2, 3, 4, 5)), universal_form(3)):
        bp = form_to_pair(f)
        data = json.loads(json.dumps(bp.to_json()))
        assert BasedPair.from_json(data) == bp
        assert BinaryPair.from_json(data) == bp.pair


def test_pair_search_is_a_harness():
    rows = list(pair_search(3, 1))
    assert len(rows) == 3**4
    assert all(r["valid"] for r in rows)
    assert {"a", "valid", "disc"} <= set(rows[0])


def test_identity_kernel_change_for_normalized_pairs():
    bp = form_to_pair(BinaryForm(6, (1, 1, 2, 3, 5, 8, 13)))
    assert validate_pair(bp.pair).kernel_change == identity(4)

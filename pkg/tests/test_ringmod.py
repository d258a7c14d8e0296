import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formring import thetaoracle as th
from formring.exactalg import (ContextError, IntegersMod, Reduce, Specialize, det, identity,
                               universal_ring)
from formring.forms import (IDENTITY, SHEAR, SWAP, BinaryForm, GL2Matrix, disc_form, gl2_act,
                            is_primitive, universal_form)
from formring.ringmod import (ActionTable, MultTable, build_module, build_ring,
                              dual_pairing_matrix, gl2_invariance_witness,
                              intertwining_defects, inverse_different_map, is_gorenstein,
                              is_invertible_family, module_power_experiment, ring_disc,
                              specialize_table)


def int_forms(nmin=2, nmax=5, lo=-12, hi=12):
    return st.integers(nmin, nmax).flatmap(
        lambda n: st.lists(st.integers(lo, hi), min_size=n + 1, max_size=n + 1).map(
            lambda c: BinaryForm(n, tuple(c))))


def _vec(n, pairs):
    v = [0] * n
    for i, x in pairs:
        v[i] = x
    return v


def test_universal_cubic_products():
    R = build_ring(universal_form(3))
    f0, f1, f2, f3 = universal_ring(3).gens()
    Z = universal_ring(3).zero
    assert list(R.c[1][2]) == [-f0 * f3, -f2, Z]
    assert list(R.c[1][1]) == [Z, -f1, f0]
    assert R.defects() == []


def test_cubic_ring_from_x3_plus_y3():
    R = build_ring(BinaryForm(3, (1, 0, 0, 1)))
    assert list(R.c[1][2]) == [-1, 0, 0]
    assert list(R.c[2][2]) == [0, -1, 0]  # theta^4 = -theta


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_zero_form_gives_null_products(n):
    R = build_ring(BinaryForm(n, (0,) * (n + 1)))
    assert all(x == 0 for i in range(1, n) for j in range(1, n) for x in R.c[i][j])
    assert ring_disc(R) == 0


def test_module_examples():
    u = universal_form(3)
    f1 = universal_ring(3).gens()[1]
    T = build_module(u, 1)  # basis 1, theta, zeta_2
    assert list(T.d[1][1]) == [0, -f1, 1]
    n = 4
    f = BinaryForm(n, (3, -1, 2, 5, 7))
    T0, R = build_module(f, 0), build_ring(f)
    for i in range(n):
        assert list(T0.d[i][0]) == list(R.c[i][0])
        assert T0.d[i] == R.c[i]


def test_module_range_checked():
    with pytest.raises(ValueError):
        build_module(BinaryForm(3, (1, 2, 3, 4)), 3)
    with pytest.raises(ValueError):
        build_module(BinaryForm(3, (1, 2, 3, 4)), -2)


@pytest.mark.parametrize("c", [(1, 2, -3, 4), (1, 0, 5, -2, 7), (1, -4, 0, 0, 3, 1)])
def test_monogenic_modules_are_regular(c):
    f = BinaryForm(len(c) - 1, c)
    n = f.n
    base = build_module(f, 0)
    for k in range(-1, n):
        cols = [th.to_mixed_basis(e, 0, f).coords for e in th.module_basis(f, k)]
        S = [[cols[b][a] for b in range(n)] for a in range(n)]
        assert abs(det(S)) == 1
        assert base.rebase(identity(n), S) == build_module(f, k)


@pytest.mark.parametrize("n,c,d", [(2, (1, 1, 1), -3), (3, (1, 0, 0, 1), -27),
                                   (3, (0, 0, 0, 0), 0)])
def test_ring_disc_examples(n, c, d):
    assert ring_disc(build_ring(BinaryForm(n, c))) == d


@settings(max_examples=40, deadline=None)
@given(int_forms(2, 5, -30, 30))
def test_disc_identity(f):
    assert ring_disc(build_ring(f)) == disc_form(f)


@settings(max_examples=30, deadline=None)
@given(int_forms(2, 5))
def test_axioms_on_integer_forms(f):
    R = build_ring(f)
    assert R.defects() == []
    for k in range(-1, f.n):
        assert build_module(f, k).defects(R) == []


@settings(max_examples=30, deadline=None)
@given(int_forms(2, 5), st.sampled_from([2, 3, 4, 6]))
def test_axioms_over_residue_rings(f, m):
    g = f.specialize(Reduce(m))
    R = build_ring(g)
    assert R.defects() == []
    assert build_module(g, 1).defects(R) == []


def test_universal_specializes_to_concrete():
    u = universal_form(3)
    hom = Specialize(universal_ring(3), [1, 0, 0, 1])
    assert specialize_table(build_ring(u), hom) == build_ring(BinaryForm(3, (1, 0, 0, 1)))
    assert specialize_table(build_module(u, -1), hom) == build_module(BinaryForm(3, (1, 0, 0, 1)),
                                                                      -1)


@settings(max_examples=30, deadline=None)
@given(int_forms(2, 5), st.sampled_from([2, 3, 4, 5, 12]), st.booleans())
def test_base_change(f, m, scale):
    if scale:
        f = BinaryForm(f.n, tuple(m * x for x in f.coeffs))
    h = Reduce(m)
    fr = f.specialize(h)
    assert specialize_table(build_ring(f), h) == build_ring(fr)
    for k in range(-1, f.n):
        assert specialize_table(build_module(f, k), h) == build_module(fr, k)


def test_reduction_composes_on_tables():
    f = BinaryForm(3, (5, 7, -3, 11))
    R6 = specialize_table(build_ring(f), Reduce(6))
    assert specialize_table(R6, Reduce(2)) == specialize_table(build_ring(f), Reduce(2))


# duality -------------------------------------------------------------------


def _oracle_pairing(f, k):
    n = f.n
    if k == -1:
        left = [th.nu(b, f) for b in range(n)]
    else:
        left = [th.theta(f, b) if b <= k else th.zeta(b, f) + f.coeffs[b] for b in range(n)]
    K = n - 2 - k
    if K == -1:
        right = [th.nu(b, f) for b in range(n)]
    else:
        right = [th.theta(f, a) for a in range(K + 1)]
        right += [th.theta(f, K) * th.zeta(m, f) for m in range(1, n - K)]
    right.reverse()
    return [[th.to_mixed_basis(u * v, n - 2, f).coords[n - 1] for v in right] for u in left]


@settings(max_examples=25, deadline=None)
@given(int_forms(2, 5).filter(lambda f: f.coeffs[0] != 0))
def test_pairing_matches_theta_model(f):
    n = f.n
    for k in range(-1, n):
        M = dual_pairing_matrix(f, k)
        assert M == _oracle_pairing(f, k)
        assert M == identity(n)


def _phi(f, x):
    return th.to_mixed_basis(x, f.n - 2, f).coords[f.n - 1]


def _tail(f, j, k):
    # f_0 theta^j + ... + f_(j+k+1-n) theta^(n-k-1)
    n = f.n
    return sum((th.theta(f, j - m) * f.coeffs[m] for m in range(j + k + 2 - n)), th._lift(f, 0))


def test_pairing_spot_values():
    f = BinaryForm(4, (3, -2, 5, 7, 1))
    n, k = 4, 1
    for i in range(k + 1, n):
        for j in range(n - k - 1, n):
            assert _phi(f, (th.zeta(i, f) + f.coeffs[i]) * _tail(f, j, k)) == 0
    for i in range(k + 1):
        for j in range(n - k - 1, n):
            assert _phi(f, th.theta(f, i) * _tail(f, j, k)) == int(i + j == n - 1)


def test_universal_pairing_is_identity():
    u = universal_form(4)
    R = universal_ring(4)
    for k in range(-1, 4):
        assert dual_pairing_matrix(u, k) == [[R.one if i == j else R.zero for j in range(4)]
                                             for i in range(4)]


@settings(max_examples=30, deadline=None)
@given(int_forms(2, 6))
def test_inverse_different(f):
    M = inverse_different_map(f)
    assert abs(det(M)) == 1
    assert intertwining_defects(f, M) == []


def test_inverse_different_detects_wrong_map():
    f = BinaryForm(3, (1, 0, 0, 1))
    M = inverse_different_map(f)
    bad = [row[:] for row in M]
    bad[0][0] += 1
    assert intertwining_defects(f, bad)


# invertibility and Gorenstein ----------------------------------------------


@pytest.mark.parametrize("n,c,expected", [(3, (1, 2, 3, 4), True), (2, (2, 4, 6), False),
                                          (2, (3, 6, 4), True)])
def test_invertible_examples(n, c, expected):
    assert is_invertible_family(BinaryForm(n, c)) is expected


@pytest.mark.parametrize("n,c,expected", [(3, (1, 0, 0, 1), True), (3, (2, 0, 0, 2), False),
                                          (4, (1, 1, 1, 1, 1), True), (3, (0, 0, 0, 3), False),
                                          (4, (0, 2, 0, 3, 0), True)])
def test_gorenstein_examples(n, c, expected):
    assert is_gorenstein(BinaryForm(n, c)) is expected


@settings(max_examples=40, deadline=None)
@given(int_forms(3, 5, -8, 8).filter(lambda f: not f.is_zero()))
def test_invertibility_tracks_primitivity(f):
    assert is_invertible_family(f) == is_primitive(f)
    assert is_gorenstein(f) == is_primitive(f)


def test_decisions_need_integers():
    with pytest.raises(ContextError):
        is_invertible_family(BinaryForm(3, (0, 0, 0, 0)))
    with pytest.raises(ContextError):
        is_gorenstein(BinaryForm(3, (1, 0, 0, 1), IntegersMod(5)))
    with pytest.raises(ContextError):
        is_invertible_family(universal_form(3))


# GL2 -----------------------------------------------------------------------


def test_identity_witness():
    f = BinaryForm(3, (2, -1, 4, 3))
    P, S = gl2_invariance_witness(f, IDENTITY)
    assert P == identity(3) and S == identity(3)


@settings(max_examples=30, deadline=None)
@given(int_forms(2, 5).filter(lambda f: not f.is_zero()),
       st.sampled_from([SWAP, SHEAR, GL2Matrix(0, -1, 1, 0), GL2Matrix(1, 2, 0, 1)]))
def test_gl2_witness(f, g):
    P, S = gl2_invariance_witness(f, g)
    g_f = gl2_act(f, g)
    assert build_ring(f).rebase(P) == build_ring(g_f)
    assert build_module(f, 1).rebase(P, S) == build_module(g_f, 1)


def test_gl2_witness_other_k():
    f = BinaryForm(4, (2, 1, -3, 0, 5))
    for k in range(-1, 4):
        gl2_invariance_witness(f, SWAP, k)


def test_gl2_rejects_zero_form():
    with pytest.raises(ContextError):
        gl2_invariance_witness(BinaryForm(2, (0, 0, 0)), SWAP)


# experiment and serialization ---------------------------------------------


def test_module_power_experiment_reports_without_asserting():
    out = module_power_experiment(BinaryForm(3, (1, 2, 3, 4)), 2)
    assert out["equal"] and out["primitive"]
    out = module_power_experiment(BinaryForm(3, (2, 0, 0, 2)), 2)
    assert set(out) >= {"power", "table", "equal", "primitive"}


def test_table_json_round_trip():
    for f in (BinaryForm(3, (1, 2, 3, 4)), universal_form(3),
              BinaryForm(3, (1, 2, 3, 4)).specialize(Reduce(5))):
        R = build_ring(f)
        assert MultTable.from_json(R.to_json()) == R
        T = build_module(f, -1)
        assert ActionTable.from_json(T.to_json()) == T


def test_defects_reported_for_broken_tables():
    f = BinaryForm(3, (1, 2, 3, 4))
    R = build_ring(f)
    c = [[list(v) for v in row] for row in R.c]
    c[1][2][1] += 1
    assert any("commutativity" in m for m in MultTable(3, R.ctx, c).defects())
    T = build_module(f, 1).with_entry(1, 2, 0, 99)
    assert any("module axiom" in m for m in T.defects(R))

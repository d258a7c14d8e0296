import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from formring.exactalg import (ZZ, Compose, ContextError, FractionField, IntegersMod, Mod,
                               NotDivisible, PolyRing, RatFunc, Reduce, Specialize, apply_hom,
                               content, det, hnf_rows, identity, inverse_unimodular,
                               invariant_factors, matmul, parse_context, ring_ops,
                               smith_normal_form, universal_ring)

from conftest import to_sympy

small = st.integers(-9, 9)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


# ring contexts ------------------------------------------------------------


def test_integer_exact_div():
    ops = ring_ops(ZZ)
    assert ops["exact_div"](6, 3) == 2
    with pytest.raises(NotDivisible):
        ops["exact_div"](7, 3)


def test_polynomial_exact_div_factors_out_f0():
    f0, f1 = PolyRing(["f0", "f1"]).gens()
    R = f0.ring
    assert R.exact_div(f0 * f1 + f0 * f0, f0) == f1 + f0
    with pytest.raises(NotDivisible):
        R.exact_div(f0 * f1 + 1, f0)


def test_content_examples():
    assert content([2, 4, 6]) == (2, False)
    assert content([3, 5]) == (1, True)
    assert content([0, 0]) == (0, False)


def test_content_rejects_polynomials():
    with pytest.raises(ContextError):
        content([1], universal_ring(2))


def test_mod_arithmetic():
    Z6 = IntegersMod(6)
    a, b = Z6.coerce(4), Z6.coerce(5)
    assert a + b == Z6.coerce(3)
    assert a * b == Z6.coerce(2)
    assert not IntegersMod(6).is_domain
    assert Z6.is_unit(Z6.coerce(5)) and not Z6.is_unit(Z6.coerce(2))
    assert Z6.exact_div(Z6.coerce(4), Z6.coerce(5)) * Z6.coerce(5) == Z6.coerce(4)
    with pytest.raises(ContextError):
        Mod(1, 6) + Mod(1, 5)


@pytest.mark.parametrize("text,expected", [
    ("ZZ", ZZ), ("ZZ/12", IntegersMod(12)), ("ZZ[a,b]", PolyRing(["a", "b"])),
    ("Frac(ZZ)", FractionField(ZZ)),
])
def test_parse_context(text, expected):
    assert parse_context(text) == expected


def test_parse_context_rejects_garbage():
    with pytest.raises(ContextError):
        parse_context("QQbar")


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.tuples(*[st.integers(0, 3)] * 3), small), max_size=5),
       st.lists(st.tuples(st.tuples(*[st.integers(0, 3)] * 3), small), max_size=5))
def test_poly_arithmetic_matches_sympy(ta, tb):
    R = universal_ring(2)
    a = sum((R.from_int(c) * _mono(R, e) for e, c in ta), R.zero)
    b = sum((R.from_int(c) * _mono(R, e) for e, c in tb), R.zero)
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a - b) == sympy.expand(to_sympy(a) - to_sympy(b))
    assert R.parse(R.format(a * b)) == a * b
    if b:
        assert R.exact_div(a * b, b) == a


def _mono(R, e):
    out = R.one
    for g, k in zip(R.gens(), e):
        out = out * g**k
    return out


def test_ratfunc_reduces_to_polynomial():
    f0, f1, _ = universal_ring(2).gens()
    F = FractionField(universal_ring(2))
    x = F.coerce(f0 * f1) / F.coerce(f0)
    assert isinstance(x, RatFunc)
    assert x.is_polynomial() and x.as_polynomial() == f1
    y = F.coerce(f1) / F.coerce(f0)
    assert not y.is_polynomial()
    assert y * F.coerce(f0) == F.coerce(f1)
    z = y + 1
    assert sympy.expand(to_sympy(z.num) * to_sympy(y.den)) == sympy.expand(
        (to_sympy(y.num) + to_sympy(y.den)) * to_sympy(z.den))


# homomorphisms -------------------------------------------------------------


def test_apply_hom_examples():
    assert apply_hom(7, Reduce(5)) == IntegersMod(5).coerce(2)
    R = universal_ring(4)
    f = R.gens()
    at = Specialize(R, [1, 0, 0, 0, 2])
    assert apply_hom(f[0] * f[2], at) == 0
    assert apply_hom(f[0] * f[4], at) == 2
    S = PolyRing(["f1"])
    p = S.gen("f1") + 4
    both = Compose(Reduce(3), Specialize(S, [2]))
    assert apply_hom(p, both) == IntegersMod(3).coerce(0)
    spec_mod = Specialize(S, [2], IntegersMod(3))
    assert apply_hom(p, spec_mod) == IntegersMod(3).coerce(0)


def test_reduce_composes():
    assert Reduce(2)(Reduce(6)(11)) == Reduce(2)(11)


# linear algebra ------------------------------------------------------------


def test_snf_examples():
    assert smith_normal_form([[1, 0], [0, 1]])[1] == [[1, 0], [0, 1]]
    assert smith_normal_form([[2, 0], [0, 3]])[1] == [[1, 0], [0, 6]]
    assert smith_normal_form([[0, 0], [0, 0]])[1] == [[0, 0], [0, 0]]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_properties(A):
    U, D, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i][i] for i in range(min(len(A), len(A[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert diag[len(nz):] == [0] * (len(diag) - len(nz))
    oracle = [int(x) for x in sympy_invariant_factors(sympy.Matrix(A), domain=sympy.ZZ)]
    assert [abs(x) for x in oracle if x] == invariant_factors(A)[:len([x for x in oracle if x])]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(A):
    assert det(A) == int(sympy.Matrix(A).det())


@settings(max_examples=80, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_hnf_is_a_lattice_invariant(A, r):
    H = hnf_rows(A)
    assert hnf_rows(H) == H
    # unimodular row operations do not change the HNF
    B = [list(row) for row in A]
    for _ in range(6):
        i, j = r.randrange(len(B)), r.randrange(len(B))
        if i != j:
            t = r.randint(-3, 3)
            B[i] = [x + t * y for x, y in zip(B[i], B[j])]
    r.shuffle(B)
    assert hnf_rows(B) == H
    assert len(H) == sympy.Matrix(A).rank()


def test_inverse_unimodular():
    M = [[2, 1], [1, 1]]
    assert matmul(M, inverse_unimodular(M)) == identity(2)
    with pytest.raises(ContextError):
        inverse_unimodular([[2, 0], [0, 1]])

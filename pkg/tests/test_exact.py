import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qcube.errors import NotRational, Singular
from qcube.exact import (
    DIFF,
    SUM,
    Cyclotomic,
    HomoPoly,
    RationalMatrix,
    cyc_arith,
    cyc_as_rational,
    cyc_normalize,
    cyclotomic_polynomial,
    independent_subset,
    mat_inverse,
    mat_nullspace,
)

F = Fraction


# -- cyclotomic polynomials and numbers --


@pytest.mark.parametrize(
    "q,coeffs",
    [(1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)), (12, (1, 0, -1, 0, 1))],
)
def test_cyclotomic_polynomial(q, coeffs):
    assert cyclotomic_polynomial(q) == coeffs


def test_cyclotomic_polynomial_degree_is_totient():
    from math import gcd

    for q in range(1, 31):
        phi = sum(1 for k in range(1, q + 1) if gcd(k, q) == 1)
        poly = cyclotomic_polynomial(q)
        assert len(poly) - 1 == phi and poly[-1] == 1


def test_normalize_examples():
    assert cyc_normalize([1, 1, 1], 3) == (0, 0, 0)
    assert cyc_normalize([5, 2], 2) == (3, 0)
    assert Cyclotomic.root(4, 2) == -1
    assert Cyclotomic(4, [0, 0, 1, 0]).coeffs == (-1, 0, 0, 0)


def test_canonical_zeroes_high_positions():
    rng = random.Random(1)
    for q in range(2, 13):
        deg = len(cyclotomic_polynomial(q)) - 1
        c = Cyclotomic(q, [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(q)])
        assert all(x == 0 for x in c.coeffs[deg:])


def test_as_rational():
    assert cyc_as_rational(Cyclotomic.rational(5, F(7, 2))) == F(7, 2)
    assert cyc_as_rational(Cyclotomic(3, [1, 1, 1])) == 0
    with pytest.raises(NotRational):
        cyc_as_rational(Cyclotomic.root(3, 1))


def test_conj_and_products():
    for q in range(2, 8):
        assert Cyclotomic.root(q, 1).conj() == Cyclotomic.root(q, q - 1)
    xi = Cyclotomic.root(3, 1)
    assert cyc_arith("mul", xi, Cyclotomic.root(3, 2)) == 1
    a = Cyclotomic(5, [2, 3, 0, 0, 0])
    s = cyc_arith("add", a, cyc_arith("conj", a))
    assert s.conj() == s


@pytest.mark.parametrize("q", [2, 3, 4, 5, 6])
def test_root_of_unity_sums(q):
    for b in range(q):
        total = sum((Cyclotomic.root(q, a * b) for a in range(q)), Cyclotomic.zero(q))
        assert total == (q if b == 0 else 0)


def test_mixing_fields_is_an_error():
    with pytest.raises(ValueError):
        Cyclotomic.one(3) + Cyclotomic.one(4)


def test_cyc_arith_unknown_op():
    with pytest.raises(ValueError):
        cyc_arith("div", Cyclotomic.one(3), Cyclotomic.one(3))


small_q = st.integers(2, 9)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def cyclotomics(draw, q=None, count=1):
    q = q or draw(small_q)
    vals = [Cyclotomic(q, draw(st.lists(rationals, min_size=q, max_size=q))) for _ in range(count)]
    return q, vals


@given(cyclotomics(count=3))
def test_field_axioms(data):
    q, (a, b, c) = data
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(cyclotomics(count=2))
def test_conj_is_involutive_homomorphism(data):
    q, (a, b) = data
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


@given(small_q, st.lists(rationals, min_size=1, max_size=20))
def test_normalize_idempotent_and_value_preserving(q, raw):
    once = cyc_normalize(raw, q)
    assert cyc_normalize(once, q) == once
    # value preservation: raw and canonical differ by a multiple of Φ_q,
    # hence agree after multiplying by any element
    probe = Cyclotomic.root(q, 1) + 2
    assert Cyclotomic(q, raw) * probe == Cyclotomic(q, once) * probe
    shifted = list(raw) + [0] * q
    assert cyc_normalize(shifted, q) == once


# -- homogeneous polynomials --


def test_substitute_dual_swaps_linear_forms():
    for q in range(2, 8):
        s = HomoPoly.linear_power(SUM, q, 1)
        d = HomoPoly.linear_power(DIFF, q, 1)
        assert s.substitute_dual() == d
        assert d.substitute_dual() == s


def test_substitute_dual_examples():
    g = HomoPoly(3, [1, 3, 0])  # x² + 3xy
    assert g.substitute_dual().substitute_dual() == g
    assert HomoPoly(2, [0, 1]).substitute_dual() == HomoPoly(2, [0, -1])


def test_mul_linear_power_examples():
    g = HomoPoly(3, [2, 5])
    assert g.mul_linear_power(SUM, 0) == g
    assert HomoPoly.constant(2, 1).mul_linear_power(SUM, 2) == HomoPoly(2, [1, 2, 1])
    assert HomoPoly(2, [1, -1]).mul_linear_power(DIFF, 1) == HomoPoly(2, [1, -2, 1])
    assert g.mul_linear_power(DIFF, 3).degree == g.degree + 3


def test_homogeneous_add_requires_equal_degree():
    with pytest.raises(ValueError):
        HomoPoly(3, [1]) + HomoPoly(3, [1, 1])


def test_text_form():
    assert HomoPoly(3, [1, 0, 2]).text() == "1 · x^2 + 2 · y^2"
    assert HomoPoly(3, [0, F(1, 2)]).text() == "1/2 · y"
    assert HomoPoly(3, [0, 0]).text() == "0"


@st.composite
def homopolys(draw, q, degree=None):
    k = draw(st.integers(0, 4)) if degree is None else degree
    coeffs = []
    for _ in range(k + 1):
        coeffs.append(Cyclotomic(q, draw(st.lists(rationals, min_size=q, max_size=q))))
    return HomoPoly(q, coeffs)


@given(st.data())
def test_homopoly_ops_agree_with_evaluation(data):
    q = data.draw(small_q)
    g = data.draw(homopolys(q))
    h = data.draw(homopolys(q, degree=g.degree))
    k = data.draw(homopolys(q))
    x0 = Cyclotomic.rational(q, data.draw(rationals))
    y0 = Cyclotomic.rational(q, data.draw(rationals))
    c = data.draw(cyclotomics(q=q))[1][0]
    gv, hv, kv = g.evaluate(x0, y0), h.evaluate(x0, y0), k.evaluate(x0, y0)
    assert (g + h).evaluate(x0, y0) == gv + hv
    assert (g * k).evaluate(x0, y0) == gv * kv
    assert (g * c).evaluate(x0, y0) == gv * c
    xs, ys = x0 + y0 * (q - 2), -y0
    assert g.substitute_dual().evaluate(x0, y0) == g.evaluate(xs, ys)
    assert g.substitute_dual().substitute_dual() == g


# -- rational matrices --


def test_nullspace_examples():
    assert mat_nullspace(RationalMatrix.identity(3)) == []
    assert mat_nullspace(RationalMatrix([[0, 0], [0, 0]])) == [[1, 0], [0, 1]]
    a = RationalMatrix([[1, 1], [1, 1]])
    basis = mat_nullspace(a)
    assert basis == [[-1, 1]]
    assert a.apply(basis[0]) == [0, 0]


def test_nullspace_rectangular_spans_kernel():
    a = RationalMatrix([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]])
    basis = mat_nullspace(a)
    assert len(basis) == 4 - a.rank()
    for v in basis:
        assert a.apply(v) == [0, 0, 0]
    assert RationalMatrix(basis).rank() == len(basis)


def test_inverse_examples():
    assert mat_inverse(RationalMatrix.identity(3)) == RationalMatrix.identity(3)
    assert mat_inverse(RationalMatrix([[2, 0], [0, 4]])) == RationalMatrix([[F(1, 2), 0], [0, F(1, 4)]])
    with pytest.raises(Singular):
        mat_inverse(RationalMatrix([[1, 2], [2, 4]]))
    with pytest.raises(Singular):
        mat_inverse(RationalMatrix([[1, 2, 3]]))


def test_inverse_random_4x4():
    rng = random.Random(7)
    done = 0
    while done < 20:
        a = RationalMatrix([[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)])
        if a.rank() < 4:
            continue
        assert a @ mat_inverse(a) == RationalMatrix.identity(4)
        done += 1


def test_independent_subset():
    vecs = [[1, 0, 1], [2, 0, 2], [0, 1, 0], [1, 1, 1], [0, 0, 1]]
    assert independent_subset(vecs) == [0, 2, 4]

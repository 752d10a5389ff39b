"""Tests for skew polynomial arithmetic, division and Euclidean algorithms."""

import pytest
from hypothesis import given, settings, strategies as st

from skewlcp.errors import InputError
from skewlcp.fields.finite import FieldAut, build_ext_field
from skewlcp.skew.euclid import (
    extend_by_root,
    gcld,
    gcrd,
    is_p_independent,
    lclm,
    lclm_and_gcrd,
    lcrm,
    linear_lclm,
)
from skewlcp.skew.poly import SkewRing, left_divmod, left_eval, right_divmod, right_eval, right_rem

from conftest import GF16_MODULUS, random_code


GF16 = build_ext_field(2, GF16_MODULUS)
R = SkewRing(FieldAut(GF16, 1))
OTHER = SkewRing(FieldAut(GF16, 2))

coeff_lists = st.lists(st.integers(0, 15), min_size=1, max_size=7)
nonzero_polys = coeff_lists.map(R.poly).filter(lambda f: not f.is_zero)


def test_x_twists_scalars():
    for a in range(16):
        c = GF16(a)
        assert R.x() * R.constant(c) == R.monomial(R.aut(c), 1)


def test_poly_trims_trailing_zeros():
    f = R.poly([1, 2, 0, 0])
    assert f.degree == 1
    assert R.zero().is_zero
    assert R.zero().degree == float("-inf")
    with pytest.raises(InputError):
        R.zero().leading


@settings(deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_multiplication_is_associative(a, b, c):
    f, g, h = R.poly(a), R.poly(b), R.poly(c)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(deadline=None)
@given(coeff_lists, nonzero_polys)
def test_right_division(a, g):
    f = R.poly(a)
    q, r = right_divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@settings(deadline=None)
@given(coeff_lists, nonzero_polys)
def test_left_division(a, g):
    f = R.poly(a)
    q, r = left_divmod(f, g)
    assert g * q + r == f
    assert r.degree < g.degree


def test_division_by_zero_and_mixed_rings():
    with pytest.raises(ZeroDivisionError):
        right_divmod(R.x(2), R.zero())
    with pytest.raises(ZeroDivisionError):
        left_divmod(R.x(2), R.zero())
    with pytest.raises(InputError):
        R.x() + OTHER.x()


@settings(deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_lclm_and_gcrd(f, g):
    m, d = lclm_and_gcrd(f, g)
    assert m.is_monic and d.is_monic
    assert right_rem(f, d).is_zero and right_rem(g, d).is_zero
    assert right_rem(m, f).is_zero and right_rem(m, g).is_zero
    assert m.degree + d.degree == f.degree + g.degree


@settings(deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_gcld_and_lcrm(f, g):
    d = gcld(f, g)
    m = lcrm(f, g)
    assert left_divmod(f, d)[1].is_zero and left_divmod(g, d)[1].is_zero
    assert left_divmod(m, f)[1].is_zero and left_divmod(m, g)[1].is_zero
    assert m.degree + d.degree == f.degree + g.degree


def test_many_argument_forms():
    f, g, h = R.poly([1, 1]), R.poly([2, 1]), R.poly([3, 0, 1])
    assert gcrd(f, g, h) == gcrd([f, g, h])
    assert lclm(f, g, h) == lclm([f, g, h])
    assert lclm(ring=R) == R.one()
    with pytest.raises(InputError):
        gcrd(R.zero(), R.zero())
    with pytest.raises(InputError):
        lclm()


@given(coeff_lists, st.integers(0, 15))
def test_right_eval_is_remainder(a, beta):
    f = R.poly(a)
    b = GF16(beta)
    assert right_eval(f, b) == right_rem(f, R.linear(b)).coefficient(0)


@given(coeff_lists, st.integers(0, 15))
def test_left_eval_is_remainder(a, gamma):
    f = R.poly(a)
    c = GF16(gamma)
    assert left_eval(f, c) == left_divmod(f, R.linear(c))[1].coefficient(0)


def test_p_independence():
    b = GF16(3)
    assert not is_p_independent(R, [b, b])
    assert is_p_independent(R, [b])
    g = linear_lclm(R, [GF16(1), GF16(2), GF16(7)])
    for beta in (1, 2, 7):
        assert right_eval(g, GF16(beta)) == 0
    grown, grew = extend_by_root(g, GF16(1))
    assert not grew and grown == g


@given(nonzero_polys)
def test_monic_normalizations(f):
    assert f.monic().is_monic
    assert f.right_monic().is_monic
    # right_monic generates the same right ideal
    assert left_divmod(f.right_monic(), f)[1].is_zero


def test_apply_aut_and_with_ring():
    f = R.poly([2, 3, 5])
    assert f.apply_aut(4) == f
    assert f.apply_aut(1).to_ints() == [int(GF16(c) ** 2) for c in (2, 3, 5)]
    assert f.with_ring(OTHER).ring == OTHER
    assert f.weight() == 3
    with pytest.raises(InputError):
        f.padded(2)


@settings(deadline=None, max_examples=100)
@given(coeff_lists)
def test_modulus_is_central(constacyclic_ring, ternary_ring, a):
    for ring in (constacyclic_ring, ternary_ring):
        f = ring.poly([c % ring.field.order for c in a])
        m = ring.modulus
        assert f * m == m * f


@settings(deadline=None, max_examples=100)
@given(st.integers(0, 2**32 - 1))
def test_cofactors_commute_with_divisors(constacyclic_ring, ternary_ring, seed):
    """gh = x^n − λ if and only if hg = x^n − λ."""
    for ring in (constacyclic_ring, ternary_ring):
        g = random_code(ring, seed).g
        h, r = left_divmod(ring.modulus, g)
        assert r.is_zero
        assert g * h == ring.modulus
        assert h * g == ring.modulus
        h_left, r_left = right_divmod(ring.modulus, g)
        assert r_left.is_zero and h_left == h

"""Tests for finite fields, automorphisms, embeddings and field towers."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from skewlcp.errors import InputError
from skewlcp.fields.finite import (
    FieldAut,
    build_ext_field,
    coordinates,
    element_from_coeffs,
    embed,
    fixed_field_basis,
    generator,
    modulus_of,
    norm,
    norm_prefix,
    truncated_norm,
)
from skewlcp.fields.tower import (
    conjugate,
    cyclic_vector,
    hilbert90_solve,
    is_cyclic_vector,
    norm_preimage,
    theta_exponent,
    tower_from_top,
)

from conftest import GF4_MODULUS, GF16_MODULUS


GF16 = build_ext_field(2, GF16_MODULUS)
GF256 = build_ext_field(2, [1, 0, 1, 1, 1, 0, 0, 0, 1])


def test_build_ext_field_rejects_bad_moduli():
    with pytest.raises(InputError):
        build_ext_field(4, [1, 1, 1])
    with pytest.raises(InputError):
        build_ext_field(2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2
    with pytest.raises(InputError):
        build_ext_field(2, [1, 1, 0])
    with pytest.raises(InputError):
        build_ext_field(3, [1, 3, 1])
    with pytest.raises(InputError):
        build_ext_field(2, [1, 1])


def test_prime_field_and_generator_convention():
    F = build_ext_field(5, [0, 1])
    assert F.order == 5
    assert generator(F) == F.primitive_element
    assert modulus_of(F) == [0, 1]
    assert int(generator(GF16)) == 2
    assert modulus_of(GF16) == GF16_MODULUS


def test_element_from_coeffs_is_little_endian():
    a = element_from_coeffs(GF16, [1, 0, 1])
    assert int(a) == 5
    assert coordinates(GF16, a).tolist() == [1, 0, 1, 0]
    with pytest.raises(InputError):
        element_from_coeffs(GF16, [0, 0, 0, 0, 1])


def test_field_aut_orders():
    assert FieldAut(GF16, 0).order == 1
    assert FieldAut(GF16, 1).order == 4
    assert FieldAut(GF16, 2).order == 2
    assert FieldAut(GF16, 3).order == 4
    with pytest.raises(InputError):
        FieldAut(GF16, 4)


@given(st.integers(0, 15), st.integers(-3, 6))
def test_field_aut_is_frobenius_power(value, k):
    aut = FieldAut(GF16, 1)
    a = GF16(value)
    assert aut(a, k) == a ** (2 ** (k % 4))


@pytest.mark.parametrize("k", range(8))
def test_field_aut_order_is_minimal(k):
    aut = FieldAut(GF256, k)
    g = generator(GF256)
    assert aut(g, aut.order) == g
    assert all(aut(g, j) != g for j in range(1, aut.order))


@settings(max_examples=200)
@given(st.integers(0, 255), st.integers(0, 7))
def test_field_aut_order_fixes_every_element(value, k):
    aut = FieldAut(GF256, k)
    a = GF256(value)
    assert aut(a, aut.order) == a


@given(st.integers(1, 15))
def test_norm_lands_in_fixed_field(value):
    aut = FieldAut(GF16, 2)
    a = GF16(value)
    n = norm(aut, a)
    assert aut(n) == n
    assert n == a * aut(a)


def test_norm_prefix_matches_truncated_norms():
    aut = FieldAut(GF16, 1)
    a = GF16(7)
    prefix = norm_prefix(aut, a, 5)
    for i in range(5):
        assert prefix[i] == truncated_norm(aut, i, a)
    with pytest.raises(InputError):
        truncated_norm(aut, -1, a)


def test_embedding_is_a_field_homomorphism():
    F = build_ext_field(2, GF4_MODULUS)
    f = embed(F, GF16)
    for a in range(4):
        for b in range(4):
            x, y = F(a), F(b)
            assert f(x * y) == f(x) * f(y)
            assert f(x + y) == f(x) + f(y)
        assert f.preimage(f(F(a))) == F(a)
    assert not f.contains(GF16(2))
    with pytest.raises(InputError):
        f.preimage(GF16(2))


def test_fixed_field_basis_dimensions():
    assert fixed_field_basis(FieldAut(GF16, 2)).shape[0] == 2
    assert fixed_field_basis(FieldAut(GF16, 1)).shape[0] == 1
    assert fixed_field_basis(FieldAut(GF16, 0)).shape[0] == 4


def test_theta_exponent():
    assert theta_exponent(2, 1, 2) == 1
    assert theta_exponent(4, 2, 2) == 2
    assert theta_exponent(3, 1, 2) == 1


def test_build_tower_shapes(gf4_tower, gf8_tower, gf16_tower):
    assert (gf4_tower.L.order, gf4_tower.n, gf4_tower.K.order) == (16, 4, 2)
    assert (gf8_tower.L.order, gf8_tower.n, gf8_tower.mu) == (64, 6, 3)
    assert (gf16_tower.L.order, gf16_tower.n, gf16_tower.K.order) == (256, 4, 4)
    g = generator(gf16_tower.F)
    assert gf16_tower.f_to_l(gf16_tower.sigma(g)) == gf16_tower.theta(gf16_tower.f_to_l(g))


def test_lift_and_descend_round_trip(gf16_tower):
    f = gf16_tower.R.poly([3, 0, 7, 1])
    lifted = gf16_tower.lift(f)
    assert lifted.ring == gf16_tower.S
    assert gf16_tower.has_f_coefficients(lifted)
    assert gf16_tower.descend(lifted) == f


def test_tower_from_top_recovers_subfield():
    L = build_ext_field(2, GF16_MODULUS)
    eta = L(2) ** 5  # generator of the order-4 subfield
    tower = tower_from_top(L, 1, 2, eta)
    assert tower.F.order == 4
    assert tower.n == 4
    assert tower.f_to_l(generator(tower.F)) == eta
    with pytest.raises(InputError):
        tower_from_top(L, 1, 2, L(2))
    with pytest.raises(InputError):
        tower_from_top(L, 1, 3, eta)


def test_norm_preimage_is_seeded(gf16_tower, k_generator):
    lam = gf16_tower.f_to_l(k_generator)
    u1 = norm_preimage(gf16_tower, lam, seed=11)
    u2 = norm_preimage(gf16_tower, lam, seed=11)
    assert u1 == u2
    assert gf16_tower.norm_lk(u1) == lam
    assert norm_preimage(gf16_tower, gf16_tower.L(1)) == 1
    with pytest.raises(InputError):
        norm_preimage(gf16_tower, gf16_tower.L(2))


@settings(deadline=None, max_examples=25)
@given(st.integers(1, 255), st.integers(0, 1000))
def test_hilbert90_solves_norm_one_elements(value, seed):
    theta = FieldAut(GF256, 2)
    a = GF256(value)
    beta = theta(a) / a
    alpha = hilbert90_solve(theta, beta, seed=seed)
    assert alpha != 0
    assert alpha**-1 * theta(alpha) == beta


def test_hilbert90_rejects_wrong_norm():
    theta = FieldAut(GF16, 2)  # N(x) = x^5
    with pytest.raises(InputError):
        hilbert90_solve(theta, GF16(2))


def test_cyclic_vectors(gf8_tower):
    u = gf8_tower.L(1)
    alpha = cyclic_vector(gf8_tower, u, seed=3)
    assert is_cyclic_vector(gf8_tower, u, alpha)
    assert alpha == cyclic_vector(gf8_tower, u, seed=3)
    assert not is_cyclic_vector(gf8_tower, u, gf8_tower.L(0))
    # elements of K are fixed by θ, so their orbits are K-dependent
    assert not is_cyclic_vector(gf8_tower, u, gf8_tower.L(1))


def test_conjugate_preserves_norm(gf16_tower):
    u = gf16_tower.L(37)
    for b in (1, 5, 200):
        v = conjugate(gf16_tower, u, b)
        assert gf16_tower.norm_lk(v) == gf16_tower.norm_lk(u)
    with pytest.raises(InputError):
        conjugate(gf16_tower, u, 0)


def test_coordinates_shape():
    arr = GF16(np.arange(16))
    assert coordinates(GF16, arr).shape == (16, 4)


@pytest.mark.parametrize("tower_name", ["gf4_tower", "gf8_tower", "gf9_tower", "gf16_tower"])
def test_norm_of_embedded_elements(request, tower_name):
    """N_{L/K}(a) = N_{F/K}(a)^s for every a ∈ F."""
    tower = request.getfixturevalue(tower_name)
    for value in range(tower.F.order):
        a = tower.F(value)
        assert tower.norm_lk(tower.f_to_l(a)) == tower.f_to_l(norm(tower.sigma, a) ** tower.s)

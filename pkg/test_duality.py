"""Tests for the anti-isomorphism Θ, dual codes and the γ factorization."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from skewlcp.cli.fixtures import fixture
from skewlcp.cli.manifest import Context
from skewlcp.codes.code import full_code, zero_code
from skewlcp.codes.ring import CodeRing
from skewlcp.duality.theta import (
    ThetaContext,
    check_polynomial,
    dual,
    dual_linear_factorization,
    gamma_of,
    is_lcd,
    monic_reciprocal,
)
from skewlcp.errors import InputError
from skewlcp.fields.linalg import same_span
from skewlcp.fields.tower import cyclic_vector, norm_preimage
from skewlcp.lcp.distance import min_distance
from skewlcp.runtime.config import AppConfig
from skewlcp.skew.euclid import gcrd
from skewlcp.skew.poly import left_eval

from conftest import random_code


coeffs4 = st.lists(st.integers(0, 15), min_size=4, max_size=4)


@given(coeffs4, coeffs4)
def test_theta_is_anti_multiplicative(constacyclic_ring, a, b):
    ring = constacyclic_ring
    ctx = ThetaContext(ring)
    f, g = ring.poly(a), ring.poly(b)
    lhs = ctx.theta(ring.mul(f, g))
    rhs = ctx.ring_hat.mul(ctx.theta(g), ctx.theta(f))
    assert lhs == rhs


@given(coeffs4)
def test_theta_hat_inverts_theta(constacyclic_ring, a):
    ctx = ThetaContext(constacyclic_ring)
    f = constacyclic_ring.poly(a)
    assert ctx.theta_hat(ctx.theta(f)) == constacyclic_ring.reduce(f)


def test_x_inverse(constacyclic_ring):
    ctx = ThetaContext(constacyclic_ring)
    x = ctx.ring_hat.skew.x()
    assert ctx.ring_hat.mul(x, ctx.x_inverse) == ctx.ring_hat.skew.one()


@pytest.mark.parametrize("seed", range(10))
def test_dual_dimension_orthogonality_and_involution(constacyclic_ring, seed):
    code = random_code(constacyclic_ring, seed)
    other = dual(code)
    assert other.ring == constacyclic_ring.hat()
    assert other.dimension == code.n - code.dimension
    if not code.is_zero and not other.is_zero:
        G, G_perp = code.generator_matrix, other.generator_matrix
        assert not np.any((G @ G_perp.T).view(np.ndarray))
    back = dual(other)
    assert back.ring == code.ring and back.g == code.g


def test_dual_of_trivial_codes(constacyclic_ring):
    assert dual(full_code(constacyclic_ring)).is_zero
    assert dual(zero_code(constacyclic_ring)).is_full


def test_hamming_dual_is_simplex(hamming_code):
    simplex = dual(hamming_code)
    assert simplex.dimension == 3
    assert simplex.label == "hamming^perp"
    assert min_distance(simplex, "exhaustive").value == 4
    h = check_polynomial(hamming_code)
    assert h * hamming_code.g == hamming_code.ring.modulus


def test_monic_reciprocal(hamming_ring):
    h = hamming_ring.poly([1, 1, 1, 0, 1])
    assert monic_reciprocal(h, 7).to_ints() == [1, 0, 1, 1, 1]
    with pytest.raises(InputError):
        monic_reciprocal(hamming_ring.poly([0, 1]), 7)
    with pytest.raises(InputError):
        monic_reciprocal(hamming_ring.skew.x(7), 7)


def test_lcd_check(gf9_tower):
    ring = CodeRing.over_base(gf9_tower, gf9_tower.F(2))  # λ = -1
    assert is_lcd(full_code(ring))
    for seed in range(6):
        code = random_code(ring, seed)
        verdict = is_lcd(code)
        other = dual(code)
        assert verdict == (code.dimension + other.dimension == code.n and _coprime(code, other))


def _coprime(c, d) -> bool:
    return gcrd(c.g, d.g).degree == 0


def test_lcd_needs_lambda_squared_one(constacyclic_ring):
    with pytest.raises(InputError):
        is_lcd(full_code(constacyclic_ring))


def test_gamma_factorization(gf8_tower):
    u = gf8_tower.L(1)
    alpha = cyclic_vector(gf8_tower, u, seed=2)
    gamma = gamma_of(gf8_tower, u, alpha, 1)
    modulus = gf8_tower.S.binomial(gf8_tower.n, 1)
    assert left_eval(modulus, gamma) == 0
    with pytest.raises(InputError):
        gamma_of(gf8_tower, u, gf8_tower.L(1), 1)


def test_dual_linear_factorization(gf16_tower, k_generator):
    lam = gf16_tower.f_to_l(k_generator)
    u = norm_preimage(gf16_tower, lam, seed=3)
    alpha = cyclic_vector(gf16_tower, u, seed=3)
    gamma = gamma_of(gf16_tower, u, alpha, lam)
    ring = CodeRing.over_base(gf16_tower, k_generator).extension()
    gammas = [gf16_tower.theta(gamma, i) for i in range(2)]
    h_hat = dual_linear_factorization(ring, gammas)
    assert h_hat.degree == 2
    with pytest.raises(InputError):
        dual_linear_factorization(ring, [gf16_tower.L(1)])


def _parity_rows_span_dual(code) -> bool:
    other = dual(code)
    if code.is_full:
        return other.is_zero
    return same_span(code.parity_check_matrix, other.generator_matrix)


@pytest.mark.parametrize("ring_name", ["constacyclic_ring", "ternary_ring"])
@pytest.mark.parametrize("seed", range(25))
def test_parity_check_spans_dual_code(request, ring_name, seed):
    code = random_code(request.getfixturevalue(ring_name), seed)
    assert _parity_rows_span_dual(code)


@pytest.mark.parametrize(
    "name,label",
    [
        ("binary-bch-12", "C"),
        ("ternary-cyclic-44", "C"),
        ("quinary-bch-10", "D"),
        ("quartic-constacyclic-20", "C"),
        ("binary-conjugates-16", "C"),
        ("quartic-constacyclic-12", "C"),
        ("quartic-constacyclic-12", "P"),
    ],
)
def test_parity_check_spans_dual_of_example_codes(name, label):
    code = Context(fixture(name), AppConfig.from_env()).code(label)
    assert _parity_rows_span_dual(code)

"""Tests for code rings, codes, matrices and E-spaces."""

import numpy as np
import pytest

from skewlcp.codes.code import (
    BoundProvenance,
    Code,
    DistanceBound,
    code_from_generator,
    full_code,
    zero_code,
)
from skewlcp.codes.espace import ESpace, divisor_from_subspace, e_space
from skewlcp.codes.ring import CodeRing, hamming_distance, weight
from skewlcp.errors import InputError
from skewlcp.fields.linalg import rank
from skewlcp.fields.tower import norm_preimage
from skewlcp.lcp.criteria import is_lcp
from skewlcp.skew.euclid import lclm_and_gcrd
from skewlcp.skew.poly import right_eval, right_rem

from conftest import random_code


def test_ring_validation(gf16_tower, k_generator):
    R = gf16_tower.R
    with pytest.raises(InputError):
        CodeRing(R, 5, 1)
    with pytest.raises(InputError):
        CodeRing(R, 4, 0)
    with pytest.raises(InputError):
        CodeRing(R, 4, gf16_tower.F(2))  # not fixed by σ
    ring = CodeRing.over_base(gf16_tower, k_generator)
    assert (ring.n, ring.mu, ring.s) == (4, 2, 2)
    assert ring.hat().lam == k_generator**-1
    assert ring.extension().skew == gf16_tower.S
    assert ring.extension().base() == ring


def test_reduction_and_weights(constacyclic_ring):
    ring = constacyclic_ring
    x4 = ring.skew.x(4)
    assert ring.reduce(x4) == ring.skew.constant(ring.lam)
    f = ring.poly([1, 0, 3])
    assert weight(ring, f) == 2
    assert hamming_distance(ring, f, f) == 0
    assert ring.from_vector(ring.vector(f)) == f
    with pytest.raises(InputError):
        ring.from_vector([1, 2, 3])


def test_code_requires_monic_right_divisor(hamming_ring):
    with pytest.raises(InputError):
        Code(hamming_ring, hamming_ring.poly([1, 1, 1]))  # x^2 + x + 1 does not divide x^7 - 1
    with pytest.raises(InputError):
        Code(hamming_ring, hamming_ring.poly([0, 1]))
    assert Code(hamming_ring, hamming_ring.poly([1, 0, 1, 1])).dimension == 4
    assert full_code(hamming_ring).is_full
    assert zero_code(hamming_ring).is_zero
    # x is a unit modulo x^n - λ, so x^2·g generates the same code
    g = hamming_ring.poly([1, 1, 0, 1])
    assert code_from_generator(hamming_ring, hamming_ring.skew.x(2) * g).g == g


def test_hamming_matrices(hamming_code):
    G = hamming_code.generator_matrix
    H = hamming_code.parity_check_matrix
    assert G.shape == (4, 7) and H.shape == (3, 7)
    assert rank(G) == 4
    assert not np.any((H @ G.T).view(np.ndarray))
    word = hamming_code.codeword([1, 0, 1, 1])
    assert hamming_code.contains(word)
    assert not np.any(hamming_code.syndrome(word).view(np.ndarray))
    assert not hamming_code.contains([1, 0, 0, 0, 0, 0, 0])


@pytest.mark.parametrize("seed", range(12))
def test_generator_rows_lie_in_the_code(constacyclic_ring, seed):
    code = random_code(constacyclic_ring, seed)
    if code.is_zero:
        return
    G = code.generator_matrix
    assert rank(G) == code.dimension
    for row in G:
        assert code.contains(row)
    if not code.is_full:
        assert not np.any((code.parity_check_matrix @ G.T).view(np.ndarray))


def test_lift_and_descend_codes(constacyclic_ring):
    code = random_code(constacyclic_ring, 5)
    lifted = code.lift()
    assert lifted.ring.skew == constacyclic_ring.tower.S
    assert lifted.is_over_subfield()
    assert lifted.descend() == code


@pytest.fixture(scope="module")
def u_constacyclic(constacyclic_ring):
    tower = constacyclic_ring.tower
    return norm_preimage(tower, tower.f_to_l(constacyclic_ring.lam), seed=1)


@pytest.mark.parametrize("seed", range(8))
def test_espace_dimension_and_round_trip(constacyclic_ring, u_constacyclic, seed):
    code = random_code(constacyclic_ring, seed)
    space = e_space(constacyclic_ring, code, u_constacyclic)
    assert space.dimension == code.g.degree
    g = divisor_from_subspace(constacyclic_ring, space, u_constacyclic)
    assert g == constacyclic_ring.tower.lift(code.g)


@pytest.mark.parametrize("seed", range(8))
def test_espace_lattice_correspondence(constacyclic_ring, u_constacyclic, seed):
    c = random_code(constacyclic_ring, seed)
    d = random_code(constacyclic_ring, seed + 100)
    lclm, gcrd = lclm_and_gcrd(c.g, d.g)
    ec = e_space(constacyclic_ring, c, u_constacyclic)
    ed = e_space(constacyclic_ring, d, u_constacyclic)
    assert e_space(constacyclic_ring, lclm, u_constacyclic) == ec.sum(ed)
    assert e_space(constacyclic_ring, gcrd, u_constacyclic) == ec.intersection(ed)


def _members(space: ESpace, order: int) -> frozenset:
    return frozenset(a for a in range(order) if space.contains(a))


def test_espace_bijection_on_all_subspaces(gf4_tower):
    """Every K-subspace of L is E(g, u) for exactly one monic right divisor g of x^n − 1."""
    ring = CodeRing.over_base(gf4_tower, 1)
    u = gf4_tower.L(1)
    order = gf4_tower.L.order
    zero = ESpace.zero(gf4_tower, u)
    spaces = {_members(zero, order): zero}
    frontier = [zero]
    while frontier:
        grown = []
        for space in frontier:
            for a in range(1, order):
                if space.contains(a):
                    continue
                bigger = space.sum(ESpace.spanned_by(gf4_tower, u, [a]))
                key = _members(bigger, order)
                if key not in spaces:
                    spaces[key] = bigger
                    grown.append(bigger)
        frontier = grown
    # subspaces of GF(2)^4
    assert len(spaces) == 67
    modulus = ring.extension().modulus
    divisors = set()
    for space in spaces.values():
        g = divisor_from_subspace(ring, space, u)
        assert g.degree == space.dimension
        assert right_rem(modulus, g).is_zero
        assert e_space(ring, g, u) == space
        divisors.add(tuple(g.to_ints()))
    assert len(divisors) == len(spaces)


def test_right_roots_are_closed_under_theta_mu(constacyclic_ring, ternary_ring):
    found = 0
    for ring in (constacyclic_ring, ternary_ring):
        tower = ring.tower
        for seed in range(4):
            g = tower.lift(random_code(ring, seed).g)
            for value in range(1, tower.L.order):
                gamma = tower.L(value)
                if right_eval(g, gamma) != 0:
                    continue
                found += 1
                assert right_eval(g, tower.theta(gamma, tower.mu)) == 0
    assert found


def test_espace_requires_norm_preimage(constacyclic_ring):
    with pytest.raises(InputError):
        e_space(constacyclic_ring, random_code(constacyclic_ring, 0), constacyclic_ring.tower.L(1))


def test_espace_k_basis(gf16_tower, u_constacyclic):
    space = ESpace.spanned_by(gf16_tower, u_constacyclic, [3, 77])
    basis = space.k_basis()
    assert len(basis) == space.dimension
    assert ESpace.spanned_by(gf16_tower, u_constacyclic, basis) == space
    assert space.contains(3) and space.contains(0)
    with pytest.raises(InputError):
        divisor_from_subspace(
            CodeRing.over_base(gf16_tower, gf16_tower.F(1)), [3, 3], gf16_tower.L(1)
        )


def test_bound_metadata_survives_relabel(hamming_code):
    code = Code(
        hamming_code.ring,
        hamming_code.g,
        bound=DistanceBound(3, BoundProvenance.ASSERTED),
        label="H",
    )
    relabeled = code.relabel("H2")
    assert relabeled.bound.value == 3 and relabeled.label == "H2"
    assert relabeled == code
    assert is_lcp(full_code(code.ring), zero_code(code.ring)).verdict

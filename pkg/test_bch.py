"""Tests for skew BCH constacyclic codes and their complementary partners."""

import numpy as np
import pytest

from skewlcp.bch.construct import (
    BchSpec,
    bch_dual,
    bch_generator,
    bch_lcp,
    complementary_factorization,
    conjugates_code,
    designed_distance_for_dimension,
    dual_spec,
)
from skewlcp.codes.code import BoundProvenance
from skewlcp.duality.theta import dual
from skewlcp.errors import InputError
from skewlcp.fields.finite import FieldAut, build_ext_field
from skewlcp.fields.tower import build_tower, cyclic_vector, norm_preimage
from skewlcp.lcp.criteria import is_lcp
from skewlcp.lcp.distance import min_distance

from conftest import GF8_MODULUS


@pytest.fixture(scope="module")
def binary_spec_args(gf8_tower):
    u = gf8_tower.L(1)
    return gf8_tower, u, cyclic_vector(gf8_tower, u, seed=5)


@pytest.mark.parametrize("delta", [2, 3])
@pytest.mark.parametrize("r", [0, 1, 4])
def test_bch_pair_is_complementary_with_designed_distances(binary_spec_args, r, delta):
    tower, u, alpha = binary_spec_args
    c, d = bch_lcp(BchSpec(tower, u, alpha, r, delta))
    assert is_lcp(c, d, mode="audit").verdict
    assert c.dimension == tower.n - tower.s * (delta - 1)
    assert d.dimension == tower.s * (delta - 1)
    assert c.bound.value == delta and c.bound.provenance is BoundProvenance.BCH_DESIGNED
    assert min_distance(c, "exhaustive").value >= delta
    assert min_distance(d, "exhaustive").value >= tower.mu - delta + 2
    assert min_distance(dual(d), "exhaustive").value >= delta


@pytest.mark.parametrize("case", range(20))
def test_random_bch_specs_meet_designed_distances(request, case):
    rng = np.random.default_rng(case)
    if case % 2 == 0:
        tower = request.getfixturevalue("gf8_tower")
        lam = tower.F(1)
    else:
        tower = request.getfixturevalue("gf9_tower")
        lam = tower.F(int(rng.integers(1, 3)))
    seed = int(rng.integers(0, 2**16))
    u = norm_preimage(tower, tower.f_to_l(lam), seed=seed)
    alpha = cyclic_vector(tower, u, seed=seed)
    r = int(rng.integers(0, tower.n))
    delta = int(rng.integers(2, tower.mu + 1))
    c, d = bch_lcp(BchSpec(tower, u, alpha, r, delta))
    assert c.ring.lam == lam
    assert is_lcp(c, d).verdict
    assert min_distance(c, "exhaustive").value >= delta
    assert min_distance(d, "exhaustive").value >= tower.mu - delta + 2
    assert min_distance(dual(c), "exhaustive").value >= tower.mu - delta + 2


@pytest.mark.parametrize("delta", [2, 3])
def test_bch_dual_is_bch_code(binary_spec_args, delta):
    tower, u, alpha = binary_spec_args
    spec = BchSpec(tower, u, alpha, 0, delta)
    other = dual_spec(spec, seed=1)
    assert other.delta == tower.mu - delta + 2
    assert other.r == delta - 1
    code = bch_dual(spec, seed=1)
    expected = dual(bch_generator(spec))
    assert code.g == expected.g
    assert code.dimension == tower.s * (delta - 1)


def test_constacyclic_bch_pair(gf16_tower, k_generator):
    lam = gf16_tower.f_to_l(k_generator)
    u = norm_preimage(gf16_tower, lam, seed=2)
    alpha = cyclic_vector(gf16_tower, u, seed=2)
    spec = BchSpec(gf16_tower, u, alpha, 0, 2)
    assert spec.ring.lam == k_generator
    c, d = bch_lcp(spec)
    assert c.ring.lam == k_generator
    assert is_lcp(c, d, mode="audit").verdict
    assert min_distance(c, "exhaustive").value >= 2


@pytest.mark.parametrize("delta", [2, 3])
def test_bch_codes_without_extension_are_mds(delta):
    F = build_ext_field(2, GF8_MODULUS)
    tower = build_tower(F, FieldAut(F, 1), 1)
    u = tower.L(1)
    spec = BchSpec(tower, u, cyclic_vector(tower, u, seed=0), 0, delta)
    c, d = bch_lcp(spec)
    assert min_distance(c, "exhaustive").value == tower.n - c.dimension + 1 == delta
    assert min_distance(dual(d), "exhaustive").value == delta


def test_conjugates_code_matches_single_window(binary_spec_args):
    tower, u, alpha = binary_spec_args
    code = conjugates_code(tower, u, alpha, [0])
    assert code.g == bch_generator(BchSpec(tower, u, alpha, 0, 2)).g
    assert conjugates_code(tower, u, alpha, [0, 3]).g.degree == tower.s


def test_designed_distance_for_dimension():
    assert designed_distance_for_dimension(6, 2, 4) == 5
    assert designed_distance_for_dimension(3, 2, 2) == 3
    for mu, s, k in [(6, 2, 3), (3, 2, 6), (3, 2, 0)]:
        with pytest.raises(InputError):
            designed_distance_for_dimension(mu, s, k)


def test_spec_validation(binary_spec_args):
    tower, u, alpha = binary_spec_args
    with pytest.raises(InputError):
        BchSpec(tower, u, alpha, tower.n, 2)
    with pytest.raises(InputError):
        BchSpec(tower, u, alpha, 0, 1)
    with pytest.raises(InputError):
        BchSpec(tower, u, alpha, 0, tower.mu + 1)
    with pytest.raises(InputError):
        BchSpec(tower, tower.L(0), alpha, 0, 2)
    with pytest.raises(InputError):
        BchSpec(tower, u, tower.L(1), 0, 2)


@pytest.mark.parametrize("subset", [[0], [0, 1], [1, 3, 5], []])
def test_complementary_factorization_degrees(binary_spec_args, subset):
    tower, u, alpha = binary_spec_args
    left, right = complementary_factorization(tower, u, alpha, subset)
    assert right.degree == len(subset)
    assert left.degree + right.degree == tower.n
    assert left * right == tower.S.binomial(tower.n, tower.norm_lk(u))

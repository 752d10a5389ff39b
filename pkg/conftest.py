"""Small field towers and rings shared by the test suites."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import settings

from skewlcp.codes.code import Code
from skewlcp.codes.ring import CodeRing
from skewlcp.fields.finite import FieldAut, build_ext_field
from skewlcp.fields.tower import build_tower
from skewlcp.isometry.group import betas_with_norm_power
from skewlcp.skew.euclid import linear_lclm
from skewlcp.skew.poly import SkewRing


settings.register_profile("skewlcp", deadline=None, max_examples=50)
settings.load_profile("skewlcp")

GF4_MODULUS = [1, 1, 1]
GF8_MODULUS = [1, 1, 0, 1]
GF9_MODULUS = [2, 2, 1]
GF16_MODULUS = [1, 1, 0, 0, 1]


@pytest.fixture(scope="session")
def gf4_tower():
    """GF(4) ⊂ GF(16), σ = Frobenius, n = 4, K = GF(2)."""
    F = build_ext_field(2, GF4_MODULUS)
    return build_tower(F, FieldAut(F, 1), 2)


@pytest.fixture(scope="session")
def gf8_tower():
    """GF(8) ⊂ GF(64), σ = Frobenius (order 3), n = 6, K = GF(2)."""
    F = build_ext_field(2, GF8_MODULUS)
    return build_tower(F, FieldAut(F, 1), 2)


@pytest.fixture(scope="session")
def gf9_tower():
    """GF(9) ⊂ GF(729), σ = Frobenius, n = 6, K = GF(3)."""
    F = build_ext_field(3, GF9_MODULUS)
    return build_tower(F, FieldAut(F, 1), 3)


@pytest.fixture(scope="session")
def gf16_tower():
    """GF(16) ⊂ GF(256), σ = Frobenius², n = 4, K = GF(4)."""
    F = build_ext_field(2, GF16_MODULUS)
    return build_tower(F, FieldAut(F, 2), 2)


@pytest.fixture(scope="session")
def k_generator(gf16_tower):
    """A generator of K* = GF(4)* inside F = GF(16)."""
    K = gf16_tower.K
    return gf16_tower.F(int(gf16_tower.k_to_f(K.primitive_element)))


@pytest.fixture(scope="session")
def constacyclic_ring(gf16_tower, k_generator):
    return CodeRing.over_base(gf16_tower, k_generator)


@pytest.fixture(scope="session")
def ternary_ring(gf9_tower):
    """Negacyclic codes of length 6 over GF(9)."""
    return CodeRing.over_base(gf9_tower, gf9_tower.F(2))


@pytest.fixture(scope="session")
def hamming_ring():
    """Binary cyclic codes of length 7 (σ = identity)."""
    F = build_ext_field(2, [0, 1])
    return CodeRing(SkewRing(FieldAut(F, 0)), 7, 1)


@pytest.fixture(scope="session")
def hamming_code(hamming_ring):
    return Code(hamming_ring, hamming_ring.poly([1, 1, 0, 1]), label="hamming")


def random_code(ring: CodeRing, seed: int) -> Code:
    """R·lclm{x − β} over a seeded random set of right roots β ∈ F of x^n − λ."""
    rng = np.random.default_rng(seed)
    roots = betas_with_norm_power(ring, ring.lam)
    size = int(rng.integers(0, len(roots) + 1))
    picked = [ring.field(int(b)) for b in rng.permutation(roots)[:size]]
    return Code(ring, linear_lclm(ring.skew, picked))

"""Hamming isometries φ_β ∘ φ_x^i of skew constacyclic codes.

φ_x^i(Σ a_j x^j) = Σ σ^i(a_j) x^j and φ_β(Σ a_j x^j) = Σ N_j(β)^{-1} a_j x^j.
φ_β maps R/R(x^n − λ) onto R/R(x^n − λ′) with λ′ = N_{F/K}(β)^s·λ; the group
G collects the pairs (β, i) with N_{F/K}(β)^s = 1 and 0 ≤ i < μ. Since σ^μ is
the identity on F, φ_x^μ is the identity and i is kept modulo μ.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

import numpy as np

from ..codes.code import Code, code_from_generator
from ..codes.ring import CodeRing
from ..duality.theta import dual
from ..errors import ConsistencyError, InputError
from ..fields.finite import generator, norm_prefix
from ..fields.tower import FieldTower, hilbert90_solve
from ..skew.poly import SkewPoly


logger = logging.getLogger("skewlcp.isometry")

# Units of F are scanned directly below this order.
SCAN_LIMIT = 2**20


def apply_phi_x(f: SkewPoly, i: int = 1) -> SkewPoly:
    return f.apply_aut(i)


def apply_varphi_beta(ring: CodeRing, f: SkewPoly, beta) -> tuple[CodeRing, SkewPoly]:
    """φ_β(f) and the ring it lands in."""
    beta = ring.field(int(beta))
    if beta == 0:
        raise InputError("beta must be nonzero")
    target = ring.with_lambda(target_lambda(ring, beta))
    f = ring.reduce(f)
    if f.is_zero:
        return target, target.skew.zero()
    scales = norm_prefix(ring.aut, beta**-1, len(f.coeffs))
    return target, SkewPoly(target.skew, f.coeffs * scales)


def target_lambda(ring: CodeRing, beta):
    """λ′ = N_{F/K}(β)^s·λ."""
    return ring.norm_to_fixed(ring.field(int(beta))) ** ring.s * ring.lam


@dataclass(frozen=True)
class Isometry:
    """φ_β ∘ φ_x^i on `ring`."""

    ring: CodeRing
    beta: int
    i: int

    def __post_init__(self) -> None:
        if self.beta == 0:
            raise InputError("beta must be nonzero")
        object.__setattr__(self, "i", self.i % self.ring.mu)

    @property
    def beta_element(self):
        return self.ring.field(self.beta)

    @property
    def target(self) -> CodeRing:
        return self.ring.with_lambda(target_lambda(self.ring, self.beta_element))

    @property
    def is_identity(self) -> bool:
        return self.beta == 1 and self.i == 0

    def __call__(self, f: SkewPoly) -> SkewPoly:
        return apply_varphi_beta(self.ring, apply_phi_x(self.ring.reduce(f), self.i), self.beta_element)[1]

    def compose(self, other: "Isometry") -> "Isometry":
        """self ∘ other = φ_{β1 σ^{i1}(β2)} ∘ φ_x^{i1+i2}."""
        aut = self.ring.aut
        beta = self.beta_element * aut(other.beta_element, self.i)
        return Isometry(self.ring, int(beta), self.i + other.i)

    def inverse(self) -> "Isometry":
        """φ_{σ^{-i}(β^{-1})} ∘ φ_x^{μ−i}."""
        aut = self.ring.aut
        beta = aut(self.beta_element**-1, -self.i)
        return Isometry(self.ring, int(beta), (self.ring.mu - self.i) % self.ring.mu)

    def signature(self) -> tuple[int, int]:
        """Images of x and of the field generator, which determine the map."""
        f = self.ring.field
        return int(self.beta_element**-1), int(self.ring.aut(generator(f), self.i))

    def to_dict(self) -> dict:
        return {"beta": self.beta, "i": self.i}


def act_on_code(zeta: Isometry, code: Code) -> Code:
    """ζ(C), with its monic generator recomputed in the target ring."""
    if code.ring != zeta.ring:
        raise InputError("isometry and code use different rings")
    target = zeta.target
    if code.is_zero:
        return Code(target, target.modulus, code.bound, code.dual_bound, code.label)
    image = code_from_generator(target, zeta(code.g), code.bound, code.dual_bound, code.label)
    if image.dimension != code.dimension:
        raise ConsistencyError("isometry changed the code dimension")
    return image


def isomorphism_image(code: Code, beta, i: int) -> Code:
    """Image of C under φ_β ∘ φ_x^i for any nonzero β ∈ F."""
    return act_on_code(Isometry(code.ring, int(code.ring.field(int(beta))), i), code)


def betas_with_norm_power(ring: CodeRing, target) -> list[int]:
    """All β ∈ F* with N_{F/K}(β)^s = target, sorted by integer value."""
    field = ring.field
    target = field(int(target))
    if target == 0:
        return []
    if field.order <= SCAN_LIMIT:
        units = field.elements[1:]
        values = ring.norm_to_fixed(units) ** ring.s
        hits = np.flatnonzero((values == target).view(np.ndarray))
        return sorted(int(b) for b in units[hits])
    # N(ω^k)^s = ω_K^{ks} for ω primitive in F and ω_K = N(ω) primitive in K
    omega = field.primitive_element
    omega_k = ring.norm_to_fixed(omega)
    q_k = field.characteristic ** (field.degree // ring.mu)
    order_k = q_k - 1
    power, t = field(1), None
    for e in range(order_k):
        if power == target:
            t = e
            break
        power = power * omega_k
    if t is None:
        return []
    d = gcd(ring.s, order_k)
    if t % d:
        return []
    modulus = order_k // d
    k0 = (t // d) * pow(ring.s // d, -1, modulus) % modulus if modulus > 1 else 0
    exponents = np.arange(k0, field.order - 1, modulus, dtype=np.int64)
    return sorted(int(b) for b in omega**exponents)


def group_order_formula(ring: CodeRing) -> int:
    """μ·(|F*|/|K*|)·gcd(s, |K*|)."""
    field = ring.field
    k_units = field.characteristic ** (field.degree // ring.mu) - 1
    return ring.mu * ((field.order - 1) // k_units) * gcd(ring.s, k_units)


class IsometryGroup:
    """All φ_β ∘ φ_x^i with N_{F/K}(β)^s = 1 and 0 ≤ i < μ, ordered by (i, β)."""

    def __init__(self, ring: CodeRing) -> None:
        self.ring = ring
        self.betas = betas_with_norm_power(ring, 1)
        self.elements = [Isometry(ring, b, i) for i in range(ring.mu) for b in self.betas]
        expected = group_order_formula(ring)
        if len(self.elements) != expected:
            raise ConsistencyError(
                f"group has {len(self.elements)} elements, formula gives {expected}"
            )
        logger.info("isometry group enumerated", extra={"order": len(self.elements), "mu": ring.mu})

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Isometry]:
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Isometry:
        return Isometry(self.ring, 1, 0)

    def contains(self, zeta: Isometry) -> bool:
        return zeta.ring == self.ring and zeta.beta in set(self.betas)

    def non_identity(self) -> list[Isometry]:
        return [z for z in self.elements if not z.is_identity]

    def signatures_distinct(self) -> bool:
        return len({z.signature() for z in self.elements}) == len(self.elements)


def group(ring: CodeRing) -> IsometryGroup:
    return IsometryGroup(ring)


def dual_commutation_check(zeta: Isometry, code: Code) -> bool:
    """ζ(D)^⊥ equals (φ_{β^{-1}} ∘ φ_x^i)(D^⊥) as left ideals."""
    left = dual(act_on_code(zeta, code))
    d_perp = dual(code)
    mirror = Isometry(d_perp.ring, int(zeta.beta_element**-1), zeta.i)
    right = act_on_code(mirror, d_perp)
    return left.ring == right.ring and left.g == right.g


def inner_check(tower: FieldTower, beta, samples: int = 8, seed: int = 0) -> bool:
    """For β ∈ L* of norm 1, φ_β on L[x; θ] is conjugation by α with β = α^{-1}θ(α).

    Checks α·f·α^{-1} = φ_β(f) on seeded random polynomials of degree < n.
    """
    L = tower.L
    beta = L(int(beta))
    if tower.norm_lk(beta) != 1:
        raise InputError("inner isometries need N_{L/K}(beta) = 1")
    alpha = hilbert90_solve(tower.theta, beta, seed=seed)
    ring = CodeRing(tower.S, tower.n, L(1), tower)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        f = SkewPoly(tower.S, L.Random(tower.n, seed=rng))
        conj = tower.S.constant(alpha) * f * tower.S.constant(alpha**-1)
        if conj != apply_varphi_beta(ring, f, beta)[1]:
            return False
    return True


def dual_bridge(code: Code) -> Optional[Code]:
    """A code in the ring of C isometric to C^⊥, or None when no φ_β reaches it.

    C^⊥ lives in R/R(x^n − λ^{-1}); φ_β carries it back to λ when
    N_{F/K}(β)^s = λ^2, and the smallest such β is used.
    """
    ring = code.ring
    d_perp = dual(code)
    if ring.lam**2 == 1:
        return d_perp
    betas = betas_with_norm_power(ring, ring.lam**2)
    if not betas:
        logger.debug("no dual bridge", extra={"lambda": int(ring.lam)})
        return None
    image = act_on_code(Isometry(d_perp.ring, betas[0], 0), d_perp)
    if image.ring != ring:
        raise ConsistencyError("dual bridge landed in the wrong ring")
    return image

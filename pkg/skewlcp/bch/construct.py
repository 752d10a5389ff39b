"""Skew BCH λ-constacyclic codes of designed distance and their LCP partners.

The generator of a code over a window of indices W is
lclm{x − θ^{i+jμ}(u^α) : i ∈ W, 0 ≤ j < s}, built in L[x; θ] and read back in
F[x; σ] (its coefficients always lie in F).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..codes.code import BoundProvenance, Code, DistanceBound
from ..codes.ring import CodeRing
from ..duality.theta import dual, gamma_of
from ..errors import ConsistencyError, InputError
from ..fields.tower import FieldTower, conjugate, hilbert90_solve, is_cyclic_vector
from ..skew.euclid import lclm_and_gcrd, linear_lclm, linear_lcrm
from ..skew.poly import SkewPoly


logger = logging.getLogger("skewlcp.bch")


@dataclass(frozen=True, eq=False)
class BchSpec:
    tower: FieldTower
    u: object
    alpha: object
    r: int
    delta: int

    def __post_init__(self) -> None:
        L = self.tower.L
        object.__setattr__(self, "u", L(int(self.u)))
        object.__setattr__(self, "alpha", L(int(self.alpha)))
        if not 0 <= self.r < self.tower.n:
            raise InputError(f"offset r must satisfy 0 <= r < {self.tower.n}")
        if not 2 <= self.delta <= self.tower.mu:
            raise InputError(f"designed distance must satisfy 2 <= delta <= {self.tower.mu}")
        if self.u == 0:
            raise InputError("u must be nonzero")
        if not is_cyclic_vector(self.tower, self.u, self.alpha):
            raise InputError("alpha is not a cyclic vector for u")

    @property
    def lam(self):
        """λ = N_{L/K}(u), as an element of L."""
        return self.tower.norm_lk(self.u)

    @property
    def ring(self) -> CodeRing:
        return CodeRing.over_base(self.tower, self.tower.f_to_l.preimage(self.lam))

    @property
    def base_root(self):
        return conjugate(self.tower, self.u, self.alpha)


def window_roots(tower: FieldTower, base_root, indices: Iterable[int]) -> list:
    """[θ^{i+jμ}(base_root) for i in indices, 0 ≤ j < s], exponents mod n."""
    exponents = []
    for i in indices:
        for j in range(tower.s):
            e = (i + j * tower.mu) % tower.n
            if e not in exponents:
                exponents.append(e)
    return [tower.theta(base_root, e) for e in exponents]


def _descended(tower: FieldTower, ring: CodeRing, g: SkewPoly) -> SkewPoly:
    if not tower.has_f_coefficients(g):
        raise ConsistencyError("BCH generator has coefficients outside F")
    return tower.descend(g).with_ring(ring.skew)


def conjugates_code(
    tower: FieldTower, u, alpha, indices: Sequence[int], label: Optional[str] = None
) -> Code:
    """Code generated by the conjugates of u^α over an arbitrary index set."""
    u, alpha = tower.L(int(u)), tower.L(int(alpha))
    ring = CodeRing.over_base(tower, tower.f_to_l.preimage(tower.norm_lk(u)))
    g = linear_lclm(tower.S, window_roots(tower, conjugate(tower, u, alpha), indices))
    return Code(ring, _descended(tower, ring, g), label=label)


def bch_generator(spec: BchSpec, label: Optional[str] = None) -> Code:
    """The skew BCH code of designed distance δ over the window r..r+δ−2."""
    tower = spec.tower
    window = range(spec.r, spec.r + spec.delta - 1)
    g = linear_lclm(tower.S, window_roots(tower, spec.base_root, window))
    if g.degree != tower.s * (spec.delta - 1):
        raise ConsistencyError(f"BCH generator has degree {g.degree}, expected {tower.s * (spec.delta - 1)}")
    ring = spec.ring
    logger.debug("bch generator built", extra={"r": spec.r, "delta": spec.delta, "degree": int(g.degree)})
    return Code(
        ring,
        _descended(tower, ring, g),
        bound=DistanceBound(spec.delta, BoundProvenance.BCH_DESIGNED),
        dual_bound=DistanceBound(tower.mu - spec.delta + 2, BoundProvenance.BCH_DESIGNED),
        label=label,
    )


def bch_partner(spec: BchSpec, label: Optional[str] = None) -> Code:
    """D over the complementary window r+δ−1..r+μ−1."""
    tower = spec.tower
    window = range(spec.r + spec.delta - 1, spec.r + tower.mu)
    h = linear_lclm(tower.S, window_roots(tower, spec.base_root, window))
    ring = spec.ring
    partner_delta = tower.mu - spec.delta + 2
    return Code(
        ring,
        _descended(tower, ring, h),
        bound=DistanceBound(partner_delta, BoundProvenance.BCH_DESIGNED),
        dual_bound=DistanceBound(spec.delta, BoundProvenance.BCH_DESIGNED),
        label=label,
    )


def bch_lcp(spec: BchSpec) -> tuple[Code, Code]:
    """(C, D) with gcrd(g, h) = 1, lclm(g, h) = x^n − λ and deg g + deg h = n."""
    c = bch_generator(spec, label="C")
    d = bch_partner(spec, label="D")
    lclm, gcrd = lclm_and_gcrd(c.g, d.g)
    if gcrd.degree != 0 or lclm != c.ring.modulus or c.g.degree + d.g.degree != c.n:
        raise ConsistencyError("BCH pair is not complementary")
    return c, d


def dual_spec(spec: BchSpec, seed: int = 0) -> BchSpec:
    """The BCH λ^{-1} spec (u^{-1}, ᾱ, r+δ−1, μ−δ+2) whose code is C^⊥.

    γ′ = θ(γ)^{-1} and ᾱ solves ᾱ^{-1}θ(ᾱ) = u·γ′, so γ′ = (u^{-1})^ᾱ.
    """
    tower = spec.tower
    gamma = gamma_of(tower, spec.u, spec.alpha, spec.lam)
    gamma_prime = tower.theta(gamma) ** -1
    alpha_bar = hilbert90_solve(tower.theta, spec.u * gamma_prime, seed=seed)
    u_bar = spec.u**-1
    if conjugate(tower, u_bar, alpha_bar) != gamma_prime:
        raise ConsistencyError("dual cyclic vector does not reproduce gamma'")
    return BchSpec(
        tower=tower,
        u=u_bar,
        alpha=alpha_bar,
        r=(spec.r + spec.delta - 1) % tower.n,
        delta=tower.mu - spec.delta + 2,
    )


def bch_dual(spec: BchSpec, seed: int = 0) -> Code:
    """C^⊥ built as a BCH λ^{-1} code, cross-checked against `dual`."""
    tower = spec.tower
    code = bch_generator(dual_spec(spec, seed=seed))
    expected = dual(bch_generator(spec))
    if code.g != expected.g or code.ring != expected.ring:
        raise ConsistencyError("BCH dual disagrees with the reciprocal dual")
    if code.dimension != tower.s * spec.delta - tower.s:
        raise ConsistencyError(f"BCH dual has dimension {code.dimension}")
    return code


def complementary_factorization(
    tower: FieldTower, u, alpha, subset: Iterable[int]
) -> tuple[SkewPoly, SkewPoly]:
    """(lcrm{x − θ^i(γ) : i ∉ T}, lclm{x − θ^i(u^α) : i ∈ T}); their product is x^n − λ."""
    u, alpha = tower.L(int(u)), tower.L(int(alpha))
    lam = tower.norm_lk(u)
    subset = sorted({i % tower.n for i in subset})
    rest = [i for i in range(tower.n) if i not in subset]
    gamma = gamma_of(tower, u, alpha, lam)
    base = conjugate(tower, u, alpha)
    left = linear_lcrm(tower.S, [tower.theta(gamma, i) for i in rest])
    right = linear_lclm(tower.S, [tower.theta(base, i) for i in subset])
    if left * right != tower.S.binomial(tower.n, lam):
        raise ConsistencyError("complementary factorization does not multiply to x^n - lambda")
    return left, right


def designed_distance_for_dimension(mu: int, s: int, k: int) -> int:
    """Designed distance of the skew BCH codes of dimension k = s·k'."""
    if k % s or not 1 <= k // s <= mu - 1:
        raise InputError(f"dimension {k} is not s*k' with 1 <= k' < mu")
    return mu - k // s + 1

"""Field towers K ⊆ F ⊆ L and the seeded constructive searches on them.

A tower carries θ on L, its restriction σ on F, and K = L^θ = F^σ. The searches
(`norm_preimage`, `hilbert90_solve`, `cyclic_vector`) draw from
`numpy.random.default_rng(seed)` so equal seeds give equal answers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Optional

import galois
import numpy as np

from ..errors import ConsistencyError, InputError, SearchExhausted
from ..metrics.registry import RANDOM_TRIALS
from ..skew.poly import SkewPoly, SkewRing, right_eval
from .finite import (
    TABLE_LIMIT,
    FieldAut,
    FieldClass,
    FieldEmbedding,
    build_ext_field,
    coordinates,
    embed,
    fixed_field_basis,
    generator,
    identity_embedding,
    norm,
    norm_prefix,
    prime_field,
)
from .linalg import rank, same_span


logger = logging.getLogger("skewlcp.tower")

# Candidates drawn per vectorized batch in random searches.
SEARCH_BATCH = 256


@dataclass(frozen=True, eq=False)
class FieldTower:
    L: FieldClass
    theta: FieldAut
    F: FieldClass
    sigma: FieldAut
    K: FieldClass
    f_to_l: FieldEmbedding
    k_to_l: FieldEmbedding
    k_to_f: FieldEmbedding
    mu: int
    s: int
    n: int

    @cached_property
    def S(self) -> SkewRing:
        return SkewRing(self.theta)

    @cached_property
    def R(self) -> SkewRing:
        return SkewRing(self.sigma)

    @cached_property
    def k_basis_in_l(self):
        """GF(p)-basis of K, as elements of L."""
        p, e = self.K.characteristic, self.K.degree
        basis = self.K(p ** np.arange(e, dtype=np.int64))
        return self.k_to_l(basis)

    def norm_lk(self, a):
        return norm(self.theta, a)

    def norm_fk(self, a):
        return norm(self.sigma, a)

    def lift(self, f: SkewPoly) -> SkewPoly:
        """View a polynomial of F[x; σ] in L[x; θ]."""
        if f.ring != self.R:
            raise InputError("polynomial does not belong to F[x; sigma]")
        if f.is_zero:
            return self.S.zero()
        return SkewPoly(self.S, self.f_to_l(f.coeffs))

    def descend(self, f: SkewPoly) -> SkewPoly:
        """Pull a polynomial of L[x; θ] with coefficients in F back to F[x; σ]."""
        if f.ring != self.S:
            raise InputError("polynomial does not belong to L[x; theta]")
        if f.is_zero:
            return self.R.zero()
        return SkewPoly(self.R, self.f_to_l.preimage(f.coeffs))

    def has_f_coefficients(self, f: SkewPoly) -> bool:
        return all(self.f_to_l.contains(c) for c in f.coeffs)

    def verify(self) -> None:
        """Check θ|F = σ, |θ| = n = s·μ and L^θ = K = F^σ."""
        if self.theta.order != self.n or self.n != self.s * self.mu:
            raise ConsistencyError(
                f"theta has order {self.theta.order}, expected n = s*mu = {self.s * self.mu}"
            )
        if self.sigma.order != self.mu:
            raise ConsistencyError(f"sigma has order {self.sigma.order}, expected {self.mu}")
        g = generator(self.F)
        if self.f_to_l(self.sigma(g)) != self.theta(self.f_to_l(g)):
            raise ConsistencyError("theta does not restrict to sigma on F")
        gfp = prime_field(self.L)
        k_in_l = gfp(coordinates(self.L, self.k_basis_in_l))
        if not same_span(fixed_field_basis(self.theta), k_in_l):
            raise ConsistencyError("fixed field of theta differs from K")
        p, e = self.K.characteristic, self.K.degree
        k_in_f = gfp(coordinates(self.F, self.k_to_f(self.K(p ** np.arange(e, dtype=np.int64)))))
        if not same_span(fixed_field_basis(self.sigma), k_in_f):
            raise ConsistencyError("fixed field of sigma differs from K")


def _subfield_from(L: FieldClass, degree: int) -> tuple[FieldClass, FieldEmbedding]:
    """GF(p^degree) defined by the minimal polynomial of a primitive element of
    the order-p^degree subfield of L, with its embedding into L."""
    p = L.characteristic
    if degree == 1:
        sub = galois.GF(p)
        return sub, FieldEmbedding(sub, L)
    zeta = L.primitive_element ** ((L.order - 1) // (p**degree - 1))
    minpoly = zeta.minimal_poly()
    sub = build_ext_field(p, [int(c) for c in minpoly.coeffs[::-1]])
    return sub, FieldEmbedding(sub, L, zeta)


def _fixed_subfield(
    L: FieldClass, F: FieldClass, f_to_l: FieldEmbedding, k_degree: int
) -> tuple[FieldClass, FieldEmbedding, FieldEmbedding]:
    K, k_to_l = _subfield_from(L, k_degree)
    if K.degree == 1:
        return K, k_to_l, FieldEmbedding(K, F)
    return K, k_to_l, FieldEmbedding(K, F, f_to_l.preimage(k_to_l.image))


def theta_exponent(e: int, j: int, s: int) -> int:
    """Smallest t ≡ j (mod e) in [0, e·s) with gcd(e·s, t) = gcd(e, j)."""
    es = e * s
    target = gcd(e, j)
    for t in range(j % e, es, e):
        if gcd(es, t) == target:
            return t
    raise ConsistencyError(f"no extension of Frobenius^{j} on GF(p^{e}) of degree {s}")


def build_tower(F: FieldClass, sigma: FieldAut, s: int) -> FieldTower:
    """Extend σ on F to θ on a degree-s extension L with |θ| = s·|σ|."""
    if s < 1:
        raise InputError("extension degree s must be positive")
    if sigma.field is not F:
        raise InputError("sigma does not act on F")
    p, e, j = F.characteristic, F.degree, sigma.t
    mu = sigma.order
    if s == 1:
        L, f_to_l, theta = F, identity_embedding(F), sigma
    else:
        L = galois.GF(p ** (e * s), irreducible_poly=galois.primitive_poly(p, e * s))
        f_to_l = embed(F, L)
        theta = FieldAut(L, theta_exponent(e, j, s))
    n = s * mu
    K, k_to_l, k_to_f = _fixed_subfield(L, F, f_to_l, L.degree // n)
    tower = FieldTower(
        L=L, theta=theta, F=F, sigma=sigma, K=K,
        f_to_l=f_to_l, k_to_l=k_to_l, k_to_f=k_to_f, mu=mu, s=s, n=n,
    )
    tower.verify()
    logger.info(
        "tower built",
        extra={"p": p, "F_degree": e, "L_degree": L.degree, "theta_t": theta.t, "n": n, "K_degree": K.degree},
    )
    return tower


def tower_from_top(L: FieldClass, t: int, mu: int, eta) -> FieldTower:
    """Tower with θ = Frobenius^t on L and F = L^{θ^μ} generated by η."""
    theta = FieldAut(L, t)
    n = theta.order
    if mu < 1 or n % mu:
        raise InputError(f"mu = {mu} does not divide the order {n} of theta")
    s = n // mu
    eta = L(int(eta))
    if theta(eta, mu) != eta:
        raise InputError("subfield generator is not fixed by theta^mu")
    e = L.degree // s
    p = L.characteristic
    if e == 1:
        F = galois.GF(p)
        f_to_l = FieldEmbedding(F, L)
    else:
        minpoly = eta.minimal_poly()
        if minpoly.degree != e:
            raise InputError(f"subfield generator has degree {minpoly.degree}, expected {e}")
        F = build_ext_field(p, [int(c) for c in minpoly.coeffs[::-1]])
        f_to_l = FieldEmbedding(F, L, eta)
    sigma = theta.restrict(F)
    K, k_to_l, k_to_f = _fixed_subfield(L, F, f_to_l, L.degree // n)
    tower = FieldTower(
        L=L, theta=theta, F=F, sigma=sigma, K=K,
        f_to_l=f_to_l, k_to_l=k_to_l, k_to_f=k_to_f, mu=mu, s=s, n=n,
    )
    tower.verify()
    return tower


# -- seeded searches -------------------------------------------------------------


def _random_units(field: FieldClass, rng: np.random.Generator, size: int):
    return field.Random(size, low=1, seed=rng)


def norm_preimage(
    tower: FieldTower, lam, seed: int = 0, retry_budget: int = 1_000_000
):
    """u ∈ L with N_{L/K}(u) = λ, for λ ∈ K given as an element of L."""
    L = tower.L
    lam = L(int(lam))
    if lam == 0:
        raise InputError("lambda must be nonzero")
    if not tower.k_to_l.contains(lam):
        raise InputError("lambda does not lie in K")
    if lam == 1:
        return L(1)
    rng = np.random.default_rng(seed)
    tried = 0
    while tried < retry_budget:
        batch = min(SEARCH_BATCH, retry_budget - tried)
        candidates = _random_units(L, rng, batch)
        hits = np.flatnonzero((tower.norm_lk(candidates) == lam).view(np.ndarray))
        tried += batch
        if hits.size:
            RANDOM_TRIALS.labels(search="norm_preimage").inc(int(hits[0]) + 1)
            u = candidates[int(hits[0])]
            logger.debug("norm preimage found", extra={"trials": tried, "u": int(u)})
            return u
        RANDOM_TRIALS.labels(search="norm_preimage").inc(batch)
    raise SearchExhausted(f"no norm preimage of {int(lam)} within {retry_budget} trials")


def hilbert90_solve(aut: FieldAut, beta, seed: int = 0, retry_budget: int = 1_000_000):
    """α ≠ 0 with β = α^{-1}·aut(α), for β of norm 1.

    α = Σ_{i<ord} N_i(β^{-1})·aut^i(c) for random c; when the retries run out on
    a field of at most 2^16 elements every unit is scanned instead.
    """
    field = aut.field
    beta = field(int(beta))
    if beta == 0 or norm(aut, beta) != 1:
        raise InputError("Hilbert 90 needs an element of norm 1")
    if beta == 1:
        return field(1)
    weights = norm_prefix(aut, beta**-1, aut.order)
    rng = np.random.default_rng(seed)
    for trial in range(1, retry_budget + 1):
        c = _random_units(field, rng, 1)[0]
        alpha = np.sum(weights * aut.orbit(c, aut.order))
        if alpha != 0:
            RANDOM_TRIALS.labels(search="hilbert90").inc(trial)
            if aut(alpha) != beta * alpha:
                raise ConsistencyError("Hilbert 90 resolvent failed verification")
            return alpha
    RANDOM_TRIALS.labels(search="hilbert90").inc(retry_budget)
    if field.order <= TABLE_LIMIT:
        units = field.elements[1:]
        hits = np.flatnonzero((aut(units) == beta * units).view(np.ndarray))
        if hits.size:
            return units[int(hits[0])]
    raise SearchExhausted(f"Hilbert 90 search failed within {retry_budget} trials")


def cyclic_orbit(tower: FieldTower, u, alpha):
    """[θ^i(α)·N_i(u) : 0 ≤ i < n] computed as v_{i+1} = θ(v_i)·u."""
    out = tower.L.Zeros(tower.n)
    cur = tower.L(int(alpha))
    for i in range(tower.n):
        out[i] = cur
        cur = tower.theta(cur) * u
    return out


def is_cyclic_vector(tower: FieldTower, u, alpha) -> bool:
    """Whether the θ-orbit of α twisted by u is a K-basis of L."""
    if tower.L(int(alpha)) == 0:
        return False
    orbit = cyclic_orbit(tower, u, alpha)
    products = tower.k_basis_in_l[:, None] * orbit[None, :]
    gfp = prime_field(tower.L)
    rows = gfp(coordinates(tower.L, products).reshape(-1, tower.L.degree))
    return rank(rows) == tower.L.degree


def cyclic_vector(
    tower: FieldTower, u, seed: int = 0, retry_budget: int = 1_000_000
):
    """A seeded random cyclic vector for (θ, u)."""
    u = tower.L(int(u))
    if u == 0:
        raise InputError("u must be nonzero")
    rng = np.random.default_rng(seed)
    for trial in range(1, retry_budget + 1):
        alpha = _random_units(tower.L, rng, 1)[0]
        if is_cyclic_vector(tower, u, alpha):
            RANDOM_TRIALS.labels(search="cyclic_vector").inc(trial)
            return alpha
    RANDOM_TRIALS.labels(search="cyclic_vector").inc(retry_budget)
    raise SearchExhausted(f"no cyclic vector within {retry_budget} trials")


def w_polynomial_context(tower: FieldTower, lam, seed: int = 0) -> Optional[object]:
    """A norm preimage u of λ, verified by x − u right-dividing x^n − λ."""
    u = norm_preimage(tower, lam, seed=seed)
    if right_eval(tower.S.binomial(tower.n, lam), u) != 0:
        raise ConsistencyError("x - u does not right-divide x^n - lambda")
    return u


def conjugate(tower: FieldTower, u, b):
    """u^b = θ(b)·u·b^{-1}."""
    b = tower.L(int(b))
    if b == 0:
        raise InputError("cannot conjugate by zero")
    return tower.theta(b) * tower.L(int(u)) * b**-1

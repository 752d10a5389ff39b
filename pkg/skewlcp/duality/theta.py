"""The anti-isomorphism Θ: R/R(x^n − λ) → R/R(x^n − λ^{-1}) and dual codes.

Θ(Σ a_i x^i) = Σ σ^{-i}(a_i) x^{-i}, and in the target ring x^{-1} = λ·x^{n−1},
so the coefficient of x^{n−i} in Θ(f) is σ^{-i}(a_i)·λ for i ≥ 1.
"""

from __future__ import annotations

import logging
from typing import Sequence

from ..codes.code import Code, zero_code
from ..codes.ring import CodeRing
from ..errors import ConsistencyError, InputError
from ..fields.tower import FieldTower, conjugate
from ..skew.euclid import gcrd, lclm_and_gcrd, linear_lclm, linear_lcrm
from ..skew.poly import SkewPoly, left_eval, right_divmod


logger = logging.getLogger("skewlcp.duality")


class ThetaContext:
    """Θ from `ring` (λ) to `ring.hat()` (λ^{-1}), and Θ̂ back."""

    def __init__(self, ring: CodeRing) -> None:
        self.ring = ring
        self.ring_hat = ring.hat()

    @property
    def x_inverse(self) -> SkewPoly:
        """λ·x^{n−1}, the inverse of x in the target ring."""
        return self.ring_hat.skew.monomial(self.ring.lam, self.ring.n - 1)

    def theta(self, f: SkewPoly) -> SkewPoly:
        return _anti(self.ring, self.ring_hat, f)

    def theta_hat(self, f: SkewPoly) -> SkewPoly:
        return _anti(self.ring_hat, self.ring, f)


def _anti(source: CodeRing, target: CodeRing, f: SkewPoly) -> SkewPoly:
    f = source.reduce(f)
    n, aut, lam = source.n, source.aut, source.lam
    out = source.field.Zeros(n)
    if f.is_zero:
        return target.skew.zero()
    out[0] = f.coeffs[0]
    for i in range(1, len(f.coeffs)):
        if f.coeffs[i] != 0:
            out[n - i] = aut(f.coeffs[i], -i) * lam
    return SkewPoly(target.skew, out)


def monic_reciprocal(h: SkewPoly, n: int) -> SkewPoly:
    """h^Θ = σ^k(a_0)^{-1} Σ_{i=0}^{k} σ^i(a_{k−i}) x^i for h of degree k < n."""
    if h.is_zero:
        raise InputError("the zero polynomial has no reciprocal")
    k = int(h.degree)
    if k >= n:
        raise InputError(f"degree {k} must be below the length {n}")
    a0 = h.coeffs[0]
    if a0 == 0:
        raise InputError("reciprocal needs a nonzero constant term")
    aut = h.ring.aut
    field = h.ring.field
    coeffs = field.Zeros(k + 1)
    for i in range(k + 1):
        coeffs[i] = aut(h.coeffs[k - i], i)
    return SkewPoly(h.ring, coeffs * aut(a0, k) ** -1)


def check_polynomial(code: Code) -> SkewPoly:
    """h with h·g = x^n − λ."""
    q, r = right_divmod(code.ring.modulus, code.g)
    if not r.is_zero:
        raise ConsistencyError("generator does not divide x^n - lambda")
    return q


def dual(code: Code) -> Code:
    """C^⊥ = R̂·h^Θ in R/R(x^n − λ^{-1})."""
    ring_hat = code.ring.hat()
    if code.is_full:
        result = zero_code(ring_hat)
    else:
        h = check_polynomial(code)
        if code.is_zero:
            g_hat = ring_hat.skew.one()
        else:
            g_hat = gcrd(monic_reciprocal(h, code.n), ring_hat.modulus)
        result = Code(ring_hat, g_hat)
    logger.debug("dual computed", extra={"label": code.label, "n": code.n, "k": result.dimension})
    return Code(
        result.ring,
        result.g,
        bound=code.dual_bound,
        dual_bound=code.bound,
        label=f"{code.label}^perp" if code.label else None,
    )


def is_lcd(code: Code) -> bool:
    """(C, C^⊥) is an LCP; needs λ^2 = 1 so that both live in one ring."""
    if code.ring.lam**2 != 1:
        raise InputError("LCD check needs lambda^2 = 1")
    other = dual(code)
    if code.dimension + other.dimension != code.n:
        return False
    _, common = lclm_and_gcrd(code.g, other.g)
    return common.degree == 0


def gamma_of(tower: FieldTower, u, alpha, lam):
    """γ with (x − γ)·lclm{x − θ^i(u^α) : 1 ≤ i ≤ n−1} = x^n − λ."""
    L, n = tower.L, tower.n
    lam = L(int(lam))
    base = conjugate(tower, u, alpha)
    roots = [tower.theta(base, i) for i in range(1, n)]
    w = linear_lclm(tower.S, roots)
    if w.degree != n - 1:
        raise InputError("alpha is not a cyclic vector for u")
    modulus = tower.S.binomial(n, lam)
    q, r = right_divmod(modulus, w)
    if not r.is_zero or q.degree != 1 or not q.is_monic:
        raise ConsistencyError("x^n - lambda does not factor through the lclm")
    gamma = -q.coeffs[0]
    if tower.S.linear(gamma) * w != modulus:
        raise ConsistencyError("gamma factorization failed verification")
    return gamma


def dual_linear_factorization(ring: CodeRing, gammas: Sequence) -> SkewPoly:
    """ĥ = lclm{x − θ(γ_i^{-1})}, checked against the reciprocal of lcrm{x − γ_i}.

    `ring` is the extension ring R/R(x^n − λ) over L[x; θ]; every γ_i must be
    a left root of x^n − λ.
    """
    skew = ring.skew
    for gamma in gammas:
        if left_eval(ring.modulus, gamma) != 0:
            raise InputError(f"{int(gamma)} is not a left root of x^n - lambda")
    h_hat = linear_lclm(skew, (ring.aut(gamma**-1) for gamma in gammas))
    h = linear_lcrm(skew, gammas)
    if h.degree < ring.n:
        ring_hat = ring.hat()
        via_theta = gcrd(monic_reciprocal(h, ring.n), ring_hat.modulus)
        if via_theta != h_hat:
            raise ConsistencyError("dual factorization disagrees with the reciprocal route")
    return h_hat

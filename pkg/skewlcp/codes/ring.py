"""The quotient ring R/R(x^n − λ) in which skew constacyclic codes live."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..errors import InputError
from ..fields.finite import FieldClass, norm
from ..fields.tower import FieldTower
from ..skew.poly import SkewPoly, SkewRing, right_divmod


class CodeRing:
    """R/R(x^n − λ) over `skew` (F[x; σ] or L[x; θ]) with λ ≠ 0 fixed by the automorphism.

    `tower` is optional; E-spaces and bch constructions need it, plain codes
    over F do not.
    """

    def __init__(
        self, skew: SkewRing, n: int, lam, tower: Optional[FieldTower] = None
    ) -> None:
        field = skew.field
        lam = field(int(lam))
        mu = skew.aut.order
        if lam == 0:
            raise InputError("lambda must be nonzero")
        if skew.aut(lam) != lam:
            raise InputError("lambda is not fixed by the ring automorphism")
        if n < 1 or n % mu:
            raise InputError(f"length {n} is not a positive multiple of the automorphism order {mu}")
        if tower is not None and (skew not in (tower.R, tower.S) or n != tower.n):
            raise InputError("ring does not match its field tower")
        self.skew = skew
        self.n = n
        self.lam = lam
        self.tower = tower
        self.modulus = skew.binomial(n, lam)

    @classmethod
    def over_base(cls, tower: FieldTower, lam) -> "CodeRing":
        return cls(tower.R, tower.n, lam, tower)

    @property
    def field(self) -> FieldClass:
        return self.skew.field

    @property
    def aut(self):
        return self.skew.aut

    @property
    def mu(self) -> int:
        return self.aut.order

    @property
    def s(self) -> int:
        return self.n // self.mu

    @property
    def is_extension(self) -> bool:
        return self.tower is not None and self.skew == self.tower.S and self.tower.s > 1

    def __repr__(self) -> str:
        return f"CodeRing(n={self.n}, lambda={int(self.lam)}, {self.skew!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CodeRing):
            return NotImplemented
        return self.skew == other.skew and self.n == other.n and int(self.lam) == int(other.lam)

    def __hash__(self) -> int:
        return hash((self.skew, self.n, int(self.lam)))

    def with_lambda(self, lam) -> "CodeRing":
        return CodeRing(self.skew, self.n, lam, self.tower)

    def hat(self) -> "CodeRing":
        """The ring R/R(x^n − λ^{-1}) that hosts duals."""
        return self.with_lambda(self.lam**-1)

    def extension(self) -> "CodeRing":
        """The same quotient over L[x; θ]."""
        if self.tower is None:
            raise InputError("ring has no field tower")
        if self.skew == self.tower.S:
            return self
        return CodeRing(self.tower.S, self.n, self.tower.f_to_l(self.lam), self.tower)

    def base(self) -> "CodeRing":
        """The same quotient over F[x; σ]."""
        if self.tower is None or self.skew == self.tower.R:
            return self
        return CodeRing(self.tower.R, self.n, self.tower.f_to_l.preimage(self.lam), self.tower)

    def norm_to_fixed(self, a):
        """N_{F/K}(a) for the coefficient field F and K its fixed field."""
        return norm(self.aut, a)

    # -- elements ------------------------------------------------------------

    def poly(self, coeffs) -> SkewPoly:
        return self.skew.poly(coeffs)

    def reduce(self, f: SkewPoly) -> SkewPoly:
        if f.ring != self.skew:
            raise InputError("polynomial does not belong to this ring")
        if f.degree < self.n:
            return f
        return right_divmod(f, self.modulus)[1]

    def mul(self, f: SkewPoly, g: SkewPoly) -> SkewPoly:
        return self.reduce(f * g)

    def vector(self, f: SkewPoly):
        return self.reduce(f).padded(self.n)

    def from_vector(self, v) -> SkewPoly:
        if not isinstance(v, self.field):
            v = self.field(np.asarray(v, dtype=np.int64))
        v = v.reshape(-1)
        if v.size != self.n:
            raise InputError(f"expected a vector of length {self.n}, got {v.size}")
        return SkewPoly(self.skew, v)


def weight(ring: CodeRing, f: SkewPoly) -> int:
    """Number of nonzero coefficients of the degree-<n representative."""
    return ring.reduce(f).weight()


def hamming_distance(ring: CodeRing, f: SkewPoly, g: SkewPoly) -> int:
    return weight(ring, f - g)

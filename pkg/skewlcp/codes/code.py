"""Skew λ-constacyclic codes as left ideals R·g, g a monic right divisor of x^n − λ."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from ..errors import InputError
from ..skew.euclid import gcrd
from ..skew.poly import SkewPoly, right_divmod
from .ring import CodeRing


logger = logging.getLogger("skewlcp.codes")


class BoundProvenance(str, enum.Enum):
    BCH_DESIGNED = "bch-designed"
    ASSERTED = "externally-asserted"
    COMPUTED = "computed"


@dataclass(frozen=True)
class DistanceBound:
    value: int
    provenance: BoundProvenance

    def to_dict(self) -> dict:
        return {"value": self.value, "provenance": self.provenance.value}


class Code:
    """The code R·g of dimension n − deg g.

    `bound` and `dual_bound` are optional lower bounds on d(C) and d(C^⊥)
    carried as metadata; they are never used to decide membership.
    """

    def __init__(
        self,
        ring: CodeRing,
        g: SkewPoly,
        bound: Optional[DistanceBound] = None,
        dual_bound: Optional[DistanceBound] = None,
        label: Optional[str] = None,
    ) -> None:
        if g.ring != ring.skew:
            raise InputError("generator does not belong to the code ring")
        if not g.is_monic:
            raise InputError("code generator must be monic")
        if g.degree > ring.n or not right_divmod(ring.modulus, g)[1].is_zero:
            raise InputError("generator does not right-divide x^n - lambda")
        self.ring = ring
        self.g = g
        self.bound = bound
        self.dual_bound = dual_bound
        self.label = label

    def __repr__(self) -> str:
        return f"Code([{self.n}, {self.dimension}], g={self.g.to_ints()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.ring == other.ring and self.g == other.g

    def __hash__(self) -> int:
        return hash((self.ring, self.g))

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def dimension(self) -> int:
        return self.n - int(self.g.degree)

    @property
    def is_zero(self) -> bool:
        return self.dimension == 0

    @property
    def is_full(self) -> bool:
        return self.g.degree == 0

    def relabel(self, label: str) -> "Code":
        return Code(self.ring, self.g, self.bound, self.dual_bound, label)

    @cached_property
    def generator_matrix(self):
        """Rows x^i·g for 0 ≤ i < k."""
        k = self.dimension
        if k == 0:
            raise InputError("the zero code has no generator matrix")
        field, aut = self.ring.field, self.ring.aut
        d = int(self.g.degree)
        G = field.Zeros((k, self.n))
        row = self.g.coeffs
        for i in range(k):
            G[i, i : i + d + 1] = row
            row = aut(row)
        return G

    @cached_property
    def parity_check_matrix(self):
        """(n − k)×n matrix whose column i holds the coefficients of x^i mod_r g."""
        d = int(self.g.degree)
        if d == 0:
            raise InputError("the full code has no parity-check matrix")
        field, aut = self.ring.field, self.ring.aut
        H = field.Zeros((d, self.n))
        low = self.g.coeffs[:d]
        col = field.Zeros(d)
        col[0] = 1
        for i in range(self.n):
            H[:, i] = col
            # x·col, then subtract (leading)·g
            shifted = field.Zeros(d)
            shifted[1:] = aut(col[:-1])
            lead = aut(col[-1:])[0]
            col = shifted - lead * low
        return H

    def contains(self, c) -> bool:
        """Membership via the right remainder by g."""
        f = c if isinstance(c, SkewPoly) else self.ring.from_vector(c)
        return right_divmod(self.ring.reduce(f), self.g)[1].is_zero

    def codeword(self, message):
        """Encode a length-k message through the generator matrix."""
        field = self.ring.field
        m = message if isinstance(message, field) else field(np.asarray(message, dtype=np.int64))
        if m.shape != (self.dimension,):
            raise InputError(f"message must have length {self.dimension}")
        return m @ self.generator_matrix

    def syndrome(self, c):
        field = self.ring.field
        v = c if isinstance(c, field) else field(np.asarray(c, dtype=np.int64))
        return self.parity_check_matrix @ v

    def is_over_subfield(self) -> bool:
        """Whether g has all coefficients in F (trivially true over F[x; σ])."""
        tower = self.ring.tower
        if tower is None or self.ring.skew != tower.S:
            return True
        return tower.has_f_coefficients(self.g)

    def descend(self) -> "Code":
        """The same code read in F[x; σ]; requires F coefficients."""
        tower = self.ring.tower
        if tower is None or self.ring.skew == tower.R:
            return self
        return Code(self.ring.base(), tower.descend(self.g), self.bound, self.dual_bound, self.label)

    def lift(self) -> "Code":
        tower = self.ring.tower
        if tower is None:
            raise InputError("code ring has no field tower")
        if self.ring.skew == tower.S:
            return self
        return Code(self.ring.extension(), tower.lift(self.g), self.bound, self.dual_bound, self.label)


def code_from_generator(
    ring: CodeRing,
    f: SkewPoly,
    bound: Optional[DistanceBound] = None,
    dual_bound: Optional[DistanceBound] = None,
    label: Optional[str] = None,
) -> Code:
    """R·f = R·gcrd(f, x^n − λ)."""
    if f.is_zero:
        raise InputError("a code needs a nonzero generator")
    g = gcrd(ring.reduce(f), ring.modulus)
    logger.debug("code generated", extra={"label": label, "n": ring.n, "degree": int(g.degree)})
    return Code(ring, g, bound, dual_bound, label)


def full_code(ring: CodeRing) -> Code:
    return Code(ring, ring.skew.one())


def zero_code(ring: CodeRing) -> Code:
    return Code(ring, ring.modulus)

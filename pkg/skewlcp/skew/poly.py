"""Skew polynomial rings F[x; σ] with left coefficients.

A `SkewPoly` stores its coefficients constant-term first as a galois array
trimmed of trailing zeros, so the zero polynomial has no coefficients. The
product obeys x·a = σ(a)·x.
"""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np

from ..errors import InputError
from ..fields.finite import FieldAut, FieldClass, field_key, norm_prefix


ZERO_DEGREE = float("-inf")


class SkewRing:
    """The ring F[x; σ] for `aut` = σ acting on F."""

    def __init__(self, aut: FieldAut) -> None:
        self.aut = aut
        self.field: FieldClass = aut.field

    def __repr__(self) -> str:
        f = self.field
        return f"SkewRing(GF({f.characteristic}^{f.degree}), t={self.aut.t})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewRing):
            return NotImplemented
        return self.aut == other.aut

    def __hash__(self) -> int:
        return hash(("SkewRing", self.aut))

    @property
    def inverse_aut(self) -> FieldAut:
        m = self.field.degree
        return FieldAut(self.field, (-self.aut.t) % m)

    def poly(self, coeffs: Union[Iterable, "np.ndarray"]) -> "SkewPoly":
        """Build a polynomial from field elements or integer representations."""
        if isinstance(coeffs, self.field):
            return SkewPoly(self, coeffs.copy())
        values = [int(c) for c in coeffs]
        return SkewPoly(self, self.field(values) if values else self.field.Zeros(0))

    def zero(self) -> "SkewPoly":
        return SkewPoly(self, self.field.Zeros(0))

    def one(self) -> "SkewPoly":
        return SkewPoly(self, self.field.Ones(1))

    def monomial(self, c, k: int) -> "SkewPoly":
        coeffs = self.field.Zeros(k + 1)
        coeffs[k] = c
        return SkewPoly(self, coeffs)

    def x(self, k: int = 1) -> "SkewPoly":
        return self.monomial(self.field(1), k)

    def constant(self, c) -> "SkewPoly":
        return self.monomial(self.field(int(c)), 0)

    def linear(self, beta) -> "SkewPoly":
        """x − β."""
        coeffs = self.field.Ones(2)
        coeffs[0] = -self.field(int(beta))
        return SkewPoly(self, coeffs)

    def binomial(self, n: int, lam) -> "SkewPoly":
        """x^n − λ."""
        coeffs = self.field.Zeros(n + 1)
        coeffs[n] = 1
        coeffs[0] = coeffs[0] - self.field(int(lam))
        return SkewPoly(self, coeffs)


class SkewPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewRing, coeffs) -> None:
        if not isinstance(coeffs, ring.field):
            raise InputError("coefficients do not belong to the ring's field")
        coeffs = coeffs.reshape(-1)
        nz = np.flatnonzero(coeffs.view(np.ndarray))
        self.ring = ring
        self.coeffs = coeffs[: int(nz[-1]) + 1] if nz.size else coeffs[:0]

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if len(self.coeffs) else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    @property
    def leading(self):
        if self.is_zero:
            raise InputError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and int(self.coeffs[-1]) == 1

    def coefficient(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.field(0)

    def padded(self, length: int):
        """Coefficient vector of exactly `length` entries."""
        if len(self.coeffs) > length:
            raise InputError(f"degree {self.degree} does not fit in {length} coefficients")
        out = self.ring.field.Zeros(length)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def to_ints(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    def weight(self) -> int:
        return int(np.count_nonzero(self.coeffs.view(np.ndarray)))

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.ring == other.ring and self.to_ints() == other.to_ints()

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self.to_ints())))

    def __repr__(self) -> str:
        return f"SkewPoly({self.to_ints()}, field=GF({self.ring.field.order}), t={self.ring.aut.t})"

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "SkewPoly") -> None:
        if not isinstance(other, SkewPoly) or self.ring != other.ring:
            raise InputError("skew polynomials belong to different rings")

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.ring, -self.coeffs)

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, self.padded(size) + other.padded(size))

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, self.padded(size) - other.padded(size))

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.ring.zero()
        aut = self.ring.aut
        f, g = self.coeffs, other.coeffs
        dg = len(g) - 1
        out = self.ring.field.Zeros(len(f) + dg)
        conj = g
        for i in range(len(f)):
            if f[i] != 0:
                out[i : i + dg + 1] = out[i : i + dg + 1] + f[i] * conj
            if i + 1 < len(f):
                conj = aut(conj)
        return SkewPoly(self.ring, out)

    def scale(self, c) -> "SkewPoly":
        """Left scalar multiple c·f."""
        return SkewPoly(self.ring, self.coeffs * c)

    def rscale(self, c) -> "SkewPoly":
        """Right scalar multiple f·c."""
        if self.is_zero:
            return self
        return SkewPoly(self.ring, self.coeffs * self.ring.aut.orbit(c, len(self.coeffs)))

    def monic(self) -> "SkewPoly":
        """Generator of the same left ideal with leading coefficient 1."""
        return self.scale(self.leading**-1)

    def right_monic(self) -> "SkewPoly":
        """Generator of the same right ideal with leading coefficient 1."""
        c = self.ring.aut(self.leading**-1, -int(self.degree))
        return self.rscale(c)

    def apply_aut(self, k: int = 1) -> "SkewPoly":
        """Σ σ^k(a_i) x^i."""
        return SkewPoly(self.ring, self.ring.aut(self.coeffs, k))

    def with_ring(self, ring: SkewRing) -> "SkewPoly":
        """Reinterpret the coefficients in another ring over the same field."""
        if field_key(ring.field) != field_key(self.ring.field):
            raise InputError("rings have different coefficient fields")
        return SkewPoly(ring, self.coeffs)


# -- division ---------------------------------------------------------------


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with f = q·g + r and deg r < deg g."""
    f._check(g)
    if g.is_zero:
        raise ZeroDivisionError("right division by the zero polynomial")
    ring, aut = f.ring, f.ring.aut
    dg = len(g.coeffs) - 1
    top = len(f.coeffs) - 1
    if top < dg:
        return ring.zero(), f
    r = f.coeffs.copy()
    q = ring.field.Zeros(top - dg + 1)
    shifted = [g.coeffs]
    for _ in range(top - dg):
        shifted.append(aut(shifted[-1]))
    while top >= dg:
        if r[top] != 0:
            d = top - dg
            gd = shifted[d]
            c = r[top] / gd[-1]
            q[d] = c
            r[d : top + 1] = r[d : top + 1] - c * gd
        top -= 1
    return SkewPoly(ring, q), SkewPoly(ring, r[:dg])


def left_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with f = g·q + r and deg r < deg g."""
    f._check(g)
    if g.is_zero:
        raise ZeroDivisionError("left division by the zero polynomial")
    ring, aut = f.ring, f.ring.aut
    dg = len(g.coeffs) - 1
    top = len(f.coeffs) - 1
    if top < dg:
        return ring.zero(), f
    r = f.coeffs.copy()
    q = ring.field.Zeros(top - dg + 1)
    lc = g.coeffs[-1]
    while top >= dg:
        if r[top] != 0:
            d = top - dg
            c = aut(r[top] / lc, -dg)
            q[d] = c
            r[d : top + 1] = r[d : top + 1] - g.coeffs * aut.orbit(c, dg + 1)
        top -= 1
    return SkewPoly(ring, q), SkewPoly(ring, r[:dg])


def right_rem(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return right_divmod(f, g)[1]


def left_rem(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return left_divmod(f, g)[1]


# -- evaluation -------------------------------------------------------------


def right_eval(g: SkewPoly, gamma):
    """Σ g_i N_i(γ): the remainder of g on right division by x − γ."""
    field = g.ring.field
    if g.is_zero:
        return field(0)
    return np.sum(g.coeffs * norm_prefix(g.ring.aut, gamma, len(g.coeffs)))


def left_eval(g: SkewPoly, gamma):
    """Σ σ^{-i}(g_i) N^{σ^{-1}}_i(γ): the remainder of g on left division by x − γ."""
    field = g.ring.field
    if g.is_zero:
        return field(0)
    aut = g.ring.aut
    norms = norm_prefix(g.ring.inverse_aut, gamma, len(g.coeffs))
    total = field(0)
    for i in range(len(g.coeffs)):
        if g.coeffs[i] != 0:
            total = total + aut(g.coeffs[i], -i) * norms[i]
    return total

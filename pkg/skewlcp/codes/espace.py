"""E(g, u): the K-subspace of L attached to a right divisor g of x^n − λ.

E(g, u) is the kernel of g(T_u) with T_u(a) = θ(a)·u. Subspaces are held as
GF(p) row spans of coefficient vectors in L, so K-dimensions are GF(p)
dimensions divided by [K : GF(p)].
"""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np

from ..errors import ConsistencyError, InputError
from ..fields.finite import coordinates, from_coordinates, prime_field
from ..fields.linalg import contains_vector, rank, rref, same_span, span_intersection, span_sum
from ..fields.tower import FieldTower
from ..skew.euclid import extend_by_root
from ..skew.poly import SkewPoly
from .code import Code
from .ring import CodeRing


class ESpace:
    def __init__(self, tower: FieldTower, u, rows) -> None:
        self.tower = tower
        self.u = tower.L(int(u))
        self.rows = rref(rows) if rows.shape[0] else rows

    @classmethod
    def zero(cls, tower: FieldTower, u) -> "ESpace":
        return cls(tower, u, prime_field(tower.L).Zeros((0, tower.L.degree)))

    @classmethod
    def spanned_by(cls, tower: FieldTower, u, elements) -> "ESpace":
        """K-span of the given elements of L."""
        elements = tower.L(np.asarray([int(a) for a in elements], dtype=np.int64))
        if elements.size == 0:
            return cls.zero(tower, u)
        products = tower.k_basis_in_l[:, None] * elements[None, :]
        gfp = prime_field(tower.L)
        return cls(tower, u, gfp(coordinates(tower.L, products).reshape(-1, tower.L.degree)))

    @property
    def dimension(self) -> int:
        """Dimension over K."""
        return rank(self.rows) // self.tower.K.degree

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ESpace):
            return NotImplemented
        return same_span(self.rows, other.rows)

    def __repr__(self) -> str:
        return f"ESpace(dim={self.dimension})"

    def sum(self, other: "ESpace") -> "ESpace":
        return ESpace(self.tower, self.u, span_sum(self.rows, other.rows))

    def intersection(self, other: "ESpace") -> "ESpace":
        return ESpace(self.tower, self.u, span_intersection(self.rows, other.rows))

    def contains(self, alpha) -> bool:
        gfp = prime_field(self.tower.L)
        v = gfp(coordinates(self.tower.L, self.tower.L(int(alpha))))
        return contains_vector(self.rows, v)

    def k_basis(self) -> list:
        """A K-basis of the space, extracted greedily from its GF(p) rows."""
        L = self.tower.L
        picked: list = []
        span = ESpace.zero(self.tower, self.u)
        for row in self.rows:
            alpha = from_coordinates(L, row.view(np.ndarray))
            if alpha == 0 or span.contains(alpha):
                continue
            picked.append(alpha)
            span = span.sum(ESpace.spanned_by(self.tower, self.u, [alpha]))
            if span.dimension == self.dimension:
                break
        return picked


def _check_preimage(ring: CodeRing, u):
    tower = ring.tower
    if tower is None:
        raise InputError("E-spaces need a field tower")
    lam = ring.extension().lam
    u = tower.L(int(u))
    if u == 0 or tower.norm_lk(u) != lam:
        raise InputError("u is not a norm preimage of lambda")
    return tower, u


def operator_matrix(tower: FieldTower, g: SkewPoly, u):
    """GF(p) matrix of g(T_u): row k is the image of the k-th coordinate vector."""
    L = tower.L
    basis = L(L.characteristic ** np.arange(L.degree, dtype=np.int64))
    acc = L.Zeros(L.degree)
    weight = L(1)
    cur = basis
    for i in range(len(g.coeffs)):
        if g.coeffs[i] != 0:
            acc = acc + g.coeffs[i] * weight * cur
        weight = weight * tower.theta(u, i)
        cur = tower.theta(cur)
    return prime_field(L)(coordinates(L, acc))


def e_space(ring: CodeRing, g_or_code: Union[Code, SkewPoly], u) -> ESpace:
    """Kernel of g(T_u) on L; its K-dimension equals deg g."""
    tower, u = _check_preimage(ring, u)
    g = g_or_code.g if isinstance(g_or_code, Code) else g_or_code
    if g.ring == tower.R:
        g = tower.lift(g)
    if g.ring != tower.S:
        raise InputError("polynomial belongs to neither ring of the tower")
    kernel = operator_matrix(tower, g, u).left_null_space()
    space = ESpace(tower, u, kernel)
    if space.dimension != g.degree:
        raise ConsistencyError(
            f"E-space has dimension {space.dimension}, expected {g.degree}"
        )
    return space


def root_of(tower: FieldTower, u, alpha):
    """α^{-1}·u·θ(α)."""
    return alpha**-1 * u * tower.theta(alpha)


def divisor_from_subspace(
    ring: CodeRing, space: Union[ESpace, Iterable], u
) -> SkewPoly:
    """The monic right divisor g of x^n − λ in L[x; θ] with E(g, u) = V.

    A list of elements is taken as a K-basis and must be K-independent.
    """
    tower, u = _check_preimage(ring, u)
    if isinstance(space, ESpace):
        basis = space.k_basis()
        expected = space.dimension
    else:
        basis = [tower.L(int(a)) for a in space]
        expected = len(basis)
        if ESpace.spanned_by(tower, u, basis).dimension != expected:
            raise InputError("subspace basis is not K-independent")
    g = tower.S.one()
    for alpha in basis:
        if alpha == 0:
            raise InputError("zero vector in subspace basis")
        g, _ = extend_by_root(g, root_of(tower, u, alpha))
    if g.degree != expected:
        raise ConsistencyError(f"divisor has degree {g.degree}, expected {expected}")
    return g

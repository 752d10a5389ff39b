"""Finite fields, Frobenius-power automorphisms and embeddings.

Field elements are `galois.FieldArray` instances. The coefficient vector of
an element is read off its integer representation (base-p digits, constant
term first), which is the convention used by manifests and fixtures.
"""

from __future__ import annotations

import logging
from math import gcd
from typing import Optional, Sequence

import galois
import numpy as np

from ..errors import InputError


logger = logging.getLogger("skewlcp.fields")

FieldClass = type  # a galois.FieldArray subclass produced by galois.GF

# Frobenius powers are served from lookup tables below this field order.
TABLE_LIMIT = 2**16


def build_ext_field(p: int, modulus: Sequence[int]) -> FieldClass:
    """Return GF(p^m) defined by a monic irreducible `modulus` (constant term first).

    The degree-1 modulus [0, 1] denotes the prime field itself; any other
    degree-1 modulus is rejected.

    Raises:
        InputError: composite p, coefficients out of range, non-monic or
            reducible modulus.
    """
    if p < 2 or not galois.is_prime(p):
        raise InputError(f"characteristic must be prime, got {p}")
    coeffs = [int(c) for c in modulus]
    if len(coeffs) < 2:
        raise InputError("modulus must have degree at least 1")
    if any(c < 0 or c >= p for c in coeffs):
        raise InputError(f"modulus coefficients must lie in 0..{p - 1}")
    if coeffs[-1] != 1:
        raise InputError("modulus must be monic")
    m = len(coeffs) - 1
    if m == 1:
        if coeffs != [0, 1]:
            raise InputError("degree-1 fields use the modulus [0, 1]")
        return galois.GF(p)
    poly = galois.Poly(coeffs[::-1], field=galois.GF(p))
    if not poly.is_irreducible():
        raise InputError(f"modulus {poly} is reducible over GF({p})")
    field = galois.GF(p**m, irreducible_poly=poly)
    logger.debug("field built", extra={"p": p, "degree": m, "modulus": coeffs})
    return field


def prime_field(field: FieldClass) -> FieldClass:
    return galois.GF(field.characteristic)


def modulus_of(field: FieldClass) -> list[int]:
    """Little-endian modulus coefficients; [0, 1] for prime fields."""
    if field.degree == 1:
        return [0, 1]
    return [int(c) for c in field.irreducible_poly.coeffs[::-1]]


def field_key(field: FieldClass) -> tuple[int, int]:
    if field.degree == 1:
        return (field.order, 0)
    return (field.order, int(field.irreducible_poly))


def generator(field: FieldClass):
    """The distinguished generator: the class of x, or the primitive element of GF(p)."""
    if field.degree == 1:
        return field.primitive_element
    return field(field.characteristic)


def coordinates(field: FieldClass, arr) -> np.ndarray:
    """Integer coefficient vectors (constant term first), shape arr.shape + (m,)."""
    p, m = field.characteristic, field.degree
    ints = np.asarray(arr.view(np.ndarray), dtype=np.int64)
    powers = p ** np.arange(m, dtype=np.int64)
    return (ints[..., None] // powers) % p


def from_coordinates(field: FieldClass, coords) -> "galois.FieldArray":
    p, m = field.characteristic, field.degree
    coords = np.asarray(coords, dtype=np.int64)
    if coords.shape[-1] != m:
        raise InputError(f"expected {m} coordinates, got {coords.shape[-1]}")
    if np.any((coords < 0) | (coords >= p)):
        raise InputError(f"coordinates must lie in 0..{p - 1}")
    powers = p ** np.arange(m, dtype=np.int64)
    return field((coords * powers).sum(axis=-1))


def element_from_coeffs(field: FieldClass, coeffs: Sequence[int]):
    """Element with the given little-endian coefficients (shorter lists are zero-padded)."""
    coeffs = [int(c) % field.characteristic for c in coeffs]
    if len(coeffs) > field.degree and any(coeffs[field.degree:]):
        raise InputError(f"element has more than {field.degree} coefficients")
    padded = (coeffs + [0] * field.degree)[: field.degree]
    return from_coordinates(field, padded)


class FieldAut:
    """The automorphism a ↦ a^(p^t) of `field`, with 0 ≤ t < m."""

    def __init__(self, field: FieldClass, t: int) -> None:
        m = field.degree
        if not 0 <= t < m:
            raise InputError(f"Frobenius exponent must satisfy 0 <= t < {m}, got {t}")
        self.field = field
        self.t = t
        self.order = 1 if t == 0 else m // gcd(m, t)
        self._tables: dict[int, object] = {}

    def __repr__(self) -> str:
        return f"FieldAut(GF({self.field.characteristic}^{self.field.degree}), t={self.t})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldAut):
            return NotImplemented
        return field_key(self.field) == field_key(other.field) and self.t == other.t

    def __hash__(self) -> int:
        return hash((field_key(self.field), self.t))

    def _steps(self, k: int) -> int:
        return (self.t * k) % self.field.degree

    def _table(self, steps: int):
        table = self._tables.get(steps)
        if table is None:
            table = self.field.elements ** (self.field.characteristic**steps)
            self._tables[steps] = table
        return table

    def __call__(self, a, k: int = 1):
        """Apply the k-th power of the automorphism (k may be negative)."""
        steps = self._steps(k)
        if steps == 0:
            return a
        if self.field.order <= TABLE_LIMIT:
            return self._table(steps)[a.view(np.ndarray)]
        p = self.field.characteristic
        out = a
        for _ in range(steps):
            out = out**p
        return out

    def orbit(self, a, count: int):
        """[a, aut(a), ..., aut^(count-1)(a)] for a scalar a."""
        out = self.field.Zeros(count)
        cur = a
        for i in range(count):
            out[i] = cur
            cur = self(cur)
        return out

    def restrict(self, field: FieldClass) -> "FieldAut":
        """The same Frobenius power acting on another field of the same characteristic."""
        return FieldAut(field, self.t % field.degree)


def truncated_norm(aut: FieldAut, i: int, a):
    """N_i(a) = a·aut(a)⋯aut^(i-1)(a); N_0 = 1. Vectorized over arrays."""
    if i < 0:
        raise InputError("truncated norm index must be nonnegative")
    result = aut.field.Ones(np.shape(a)) if np.ndim(a) else aut.field(1)
    cur = a
    for _ in range(i):
        result = result * cur
        cur = aut(cur)
    return result


def norm(aut: FieldAut, a):
    """Norm down to the fixed field of `aut`."""
    return truncated_norm(aut, aut.order, a)


def norm_prefix(aut: FieldAut, a, count: int):
    """[N_0(a), N_1(a), ..., N_(count-1)(a)] for a scalar a."""
    out = aut.field.Ones(count)
    acc = aut.field(1)
    cur = a
    for i in range(count):
        out[i] = acc
        acc = acc * cur
        cur = aut(cur)
    return out


class FieldEmbedding:
    """Injective homomorphism sub → sup sending sub's generator to `image`.

    The map is GF(p)-linear and stored as a matrix on coefficient vectors;
    `preimage` inverts it on the image and rejects everything else.
    """

    def __init__(self, sub: FieldClass, sup: FieldClass, image=None) -> None:
        if sub.characteristic != sup.characteristic:
            raise InputError("embedding needs fields of the same characteristic")
        if sup.degree % sub.degree:
            raise InputError(
                f"GF(p^{sub.degree}) does not embed in GF(p^{sup.degree})"
            )
        self.sub = sub
        self.sup = sup
        e = sub.degree
        if e == 1:
            images = sup.Ones(1)
        else:
            if image is None:
                raise InputError("embedding of a proper extension needs a generator image")
            r = sup(int(image))
            images = sup.Zeros(e)
            acc = sup(1)
            for i in range(e):
                images[i] = acc
                acc = acc * r
            if _evaluate_modulus(sub, r) != 0:
                raise InputError("generator image is not a root of the subfield modulus")
        self.image = images[1] if e > 1 else sup(1)
        gfp = prime_field(sup)
        self._matrix = gfp(coordinates(sup, images))  # e × m_sup
        pivots = []
        reduced = self._matrix.row_reduce()
        for row in reduced:
            nz = np.flatnonzero(row.view(np.ndarray))
            if nz.size:
                pivots.append(int(nz[0]))
        if len(pivots) != e:
            raise InputError("generator image does not generate a subfield of the right degree")
        self._pivots = pivots
        self._inverse = np.linalg.inv(self._matrix[:, pivots])

    @property
    def is_identity(self) -> bool:
        return self.sub is self.sup and (self.sub.degree == 1 or int(self.image) == int(generator(self.sub)))

    def __call__(self, a):
        gfp = prime_field(self.sup)
        coords = gfp(coordinates(self.sub, a))
        return from_coordinates(self.sup, (coords @ self._matrix).view(np.ndarray))

    def contains(self, b) -> bool:
        try:
            self.preimage(b)
        except InputError:
            return False
        return True

    def preimage(self, b):
        gfp = prime_field(self.sup)
        v = gfp(coordinates(self.sup, b))
        c = v[..., self._pivots] @ self._inverse
        if not np.array_equal((c @ self._matrix).view(np.ndarray), v.view(np.ndarray)):
            raise InputError("element does not lie in the embedded subfield")
        return from_coordinates(self.sub, c.view(np.ndarray))


def _evaluate_modulus(field: FieldClass, x):
    """Evaluate `field`'s modulus at x (an element or array of a superfield)."""
    sup = type(x)
    acc = sup.Zeros(np.shape(x)) if np.ndim(x) else sup(0)
    for c in reversed(modulus_of(field)):
        acc = acc * x + sup(c)
    return acc


def identity_embedding(field: FieldClass) -> FieldEmbedding:
    return FieldEmbedding(field, field, generator(field) if field.degree > 1 else None)


def embed(sub: FieldClass, sup: FieldClass, image: Optional[object] = None) -> FieldEmbedding:
    """Deterministic embedding of `sub` into `sup`.

    Without an explicit `image`, sub's generator is sent to the root of sub's
    modulus in sup with the smallest integer representation (the first root in
    lexicographic coefficient order). All roots live in the unique subfield of
    order |sub|, so only that subfield is scanned.
    """
    if image is not None or sub.degree == 1:
        return FieldEmbedding(sub, sup, image)
    if sub is sup:
        return identity_embedding(sub)
    if sub.characteristic != sup.characteristic or sup.degree % sub.degree:
        raise InputError(f"GF({sub.order}) does not embed in GF({sup.order})")
    zeta = sup.primitive_element ** ((sup.order - 1) // (sub.order - 1))
    candidates = zeta ** np.arange(sub.order - 1)
    candidates = sup(np.sort(candidates.view(np.ndarray)))
    values = _evaluate_modulus(sub, candidates)
    roots = np.flatnonzero(values.view(np.ndarray) == 0)
    if roots.size == 0:
        raise InputError("no root of the subfield modulus found in the superfield")
    root = candidates[int(roots[0])]
    logger.debug(
        "embedding chosen",
        extra={"sub_order": sub.order, "sup_order": sup.order, "root": int(root)},
    )
    return FieldEmbedding(sub, sup, root)


def fixed_field_basis(aut: FieldAut) -> "galois.FieldArray":
    """GF(p)-basis (rows of coefficient vectors, RREF) of the fixed field of `aut`."""
    field = aut.field
    gfp = prime_field(field)
    basis = field(field.characteristic ** np.arange(field.degree, dtype=np.int64))
    images = aut(basis)
    delta = gfp(coordinates(field, images)) - gfp(coordinates(field, basis))
    # delta[k] is the image of basis vector k under aut - id; kernel = {c : c @ delta = 0}
    kernel = delta.left_null_space()
    return kernel.row_reduce() if kernel.shape[0] else kernel

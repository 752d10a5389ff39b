"""Euclidean algorithms in F[x; σ]: gcrd, gcld, lclm, lcrm and P-independence."""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence, Union

from ..errors import InputError
from .poly import SkewPoly, SkewRing, left_divmod, right_divmod, right_eval


logger = logging.getLogger("skewlcp.skew")

PolyArgs = Union[SkewPoly, Sequence[SkewPoly]]


def _flatten(polys: tuple) -> list[SkewPoly]:
    if len(polys) == 1 and not isinstance(polys[0], SkewPoly):
        return list(polys[0])
    return list(polys)


def lclm_and_gcrd(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Monic lclm and gcrd of two nonzero polynomials from one Euclidean pass.

    Keeps r_i = s_i·f + t_i·g; when r_{k+1} = 0, s_{k+1}·f is a common left
    multiple of least degree and r_k generates Rf + Rg.
    """
    f._check(g)
    if f.is_zero or g.is_zero:
        raise InputError("lclm of the zero polynomial is undefined")
    ring = f.ring
    r_prev, r_cur = f, g
    s_prev, s_cur = ring.one(), ring.zero()
    while not r_cur.is_zero:
        q, r_next = right_divmod(r_prev, r_cur)
        r_prev, r_cur = r_cur, r_next
        s_prev, s_cur = s_cur, s_prev - q * s_cur
    return (s_cur * f).monic(), r_prev.monic()


def lcrm_and_gcld(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Right-handed twin of `lclm_and_gcrd`, normalized with `right_monic`."""
    f._check(g)
    if f.is_zero or g.is_zero:
        raise InputError("lcrm of the zero polynomial is undefined")
    ring = f.ring
    r_prev, r_cur = f, g
    s_prev, s_cur = ring.one(), ring.zero()
    while not r_cur.is_zero:
        q, r_next = left_divmod(r_prev, r_cur)
        r_prev, r_cur = r_cur, r_next
        s_prev, s_cur = s_cur, s_prev - s_cur * q
    return (f * s_cur).right_monic(), r_prev.right_monic()


def _gcd_fold(polys: list[SkewPoly], pick, normalize) -> SkewPoly:
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        raise InputError("greatest common divisor of zero polynomials is undefined")
    acc = normalize(nonzero[0])
    for p in nonzero[1:]:
        if acc.degree == 0:
            break
        acc = pick(acc, p)
    return acc


def gcrd(*polys: PolyArgs) -> SkewPoly:
    """Monic generator of Rf_1 + ... + Rf_k."""
    return _gcd_fold(_flatten(polys), lambda a, b: lclm_and_gcrd(a, b)[1], SkewPoly.monic)


def gcld(*polys: PolyArgs) -> SkewPoly:
    """Monic generator of f_1R + ... + f_kR."""
    return _gcd_fold(
        _flatten(polys), lambda a, b: lcrm_and_gcld(a, b)[1], SkewPoly.right_monic
    )


def lclm(*polys: PolyArgs, ring: Optional[SkewRing] = None) -> SkewPoly:
    """Monic generator of Rf_1 ∩ ... ∩ Rf_k; the empty lclm is 1."""
    items = _flatten(polys)
    if not items:
        if ring is None:
            raise InputError("empty lclm needs a ring")
        return ring.one()
    acc = items[0].monic() if not items[0].is_zero else items[0]
    for p in items[1:]:
        acc = lclm_and_gcrd(acc, p)[0]
    if acc.is_zero:
        raise InputError("lclm of the zero polynomial is undefined")
    return acc


def lcrm(*polys: PolyArgs, ring: Optional[SkewRing] = None) -> SkewPoly:
    """Monic generator of f_1R ∩ ... ∩ f_kR; the empty lcrm is 1."""
    items = _flatten(polys)
    if not items:
        if ring is None:
            raise InputError("empty lcrm needs a ring")
        return ring.one()
    acc = items[0].right_monic() if not items[0].is_zero else items[0]
    for p in items[1:]:
        acc = lcrm_and_gcld(acc, p)[0]
    if acc.is_zero:
        raise InputError("lcrm of the zero polynomial is undefined")
    return acc


def extend_by_root(g: SkewPoly, beta) -> tuple[SkewPoly, bool]:
    """lclm(g, x − β) for monic g, and whether the degree grew.

    With c = g(β) ≠ 0 the lclm is (x − σ(c)βc^{-1})·g; when c = 0, x − β
    already right-divides g.
    """
    c = right_eval(g, beta)
    if c == 0:
        return g, False
    aut = g.ring.aut
    return g.ring.linear(aut(c) * beta / c) * g, True


def linear_lclm(ring: SkewRing, betas: Iterable) -> SkewPoly:
    """lclm{x − β : β in betas}; the empty lclm is 1."""
    acc = ring.one()
    for beta in betas:
        acc, _ = extend_by_root(acc, beta)
    return acc


def linear_lcrm(ring: SkewRing, gammas: Iterable) -> SkewPoly:
    """lcrm{x − γ : γ in gammas}; the empty lcrm is 1."""
    return lcrm([ring.linear(gamma) for gamma in gammas], ring=ring)


def is_p_independent(ring: SkewRing, betas: Iterable) -> bool:
    """True iff deg lclm{x − β_i} equals the number of β_i."""
    acc = ring.one()
    for beta in betas:
        acc, grew = extend_by_root(acc, beta)
        if not grew:
            return False
    return True

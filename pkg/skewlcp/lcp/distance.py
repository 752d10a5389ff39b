"""Minimum Hamming distance engines.

- exhaustive: minimum weight over every nonzero codeword m·G.
- columns: the least w such that some w columns of H are dependent; levels are
  scanned in increasing w and subsets in lexicographic order, so the witness
  is the first dependent subset of the smallest size.
- declared: the bound stored on the code, tagged with its provenance.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Optional

import galois
import numpy as np

from ..codes.code import Code
from ..errors import ConsistencyError, InputError
from ..fields.finite import field_key
from ..metrics.registry import CODEWORDS_ENUMERATED, DISTANCE_SECONDS, RANK_CHECKS
from .budget import SearchBudget


logger = logging.getLogger("skewlcp.distance")

METHOD_TAGS = {
    "exhaustive": "exhaustive",
    "columns": "column-independence",
    "declared": "declared-bound",
}

EXHAUSTIVE_CHUNK = 1 << 14


@dataclass(frozen=True)
class DistanceResult:
    value: int
    method: str
    witness: Optional[list[int]] = None
    checks: int = 0
    provenance: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"value": self.value, "method": self.method, "checks": self.checks}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.provenance is not None:
            out["provenance"] = self.provenance
        return out


def min_distance(
    code: Code,
    method: str = "columns",
    budget: Optional[int] = None,
    threads: int = 1,
) -> DistanceResult:
    """d(C) by the chosen engine; raises BudgetExceeded rather than downgrading."""
    if method not in METHOD_TAGS:
        raise InputError(f"unknown distance method: {method}")
    if code.is_zero:
        raise InputError("the zero code has no minimum distance")
    if method == "declared":
        return declared_distance(code)
    started = time.perf_counter()
    with DISTANCE_SECONDS.time():
        if method == "exhaustive":
            result = _exhaustive(code, SearchBudget(budget or 2**24, "exhaustive distance"))
        else:
            result = _columns(code, SearchBudget(budget or 10**7, "column distance"), threads)
    logger.info(
        "distance computed",
        extra={
            "code": code.label,
            "n": code.n,
            "k": code.dimension,
            "method": result.method,
            "distance": result.value,
            "checks": result.checks,
            "seconds": round(time.perf_counter() - started, 3),
        },
    )
    return result


def declared_distance(code: Code) -> DistanceResult:
    if code.bound is None:
        raise InputError(f"code {code.label or '(unnamed)'} carries no declared distance bound")
    return DistanceResult(
        value=code.bound.value,
        method=METHOD_TAGS["declared"],
        provenance=code.bound.provenance.value,
    )


# -- exhaustive ---------------------------------------------------------------------


def _exhaustive(code: Code, budget: SearchBudget) -> DistanceResult:
    field = code.ring.field
    q, k, n = field.order, code.dimension, code.n
    total = q**k - 1
    budget.charge(total, "codewords")
    G = code.generator_matrix
    powers = np.array([q**i for i in range(k)], dtype=np.int64)
    best, witness = n + 1, None
    for start in range(1, total + 1, EXHAUSTIVE_CHUNK):
        idx = np.arange(start, min(start + EXHAUSTIVE_CHUNK, total + 1), dtype=np.int64)
        messages = field((idx[:, None] // powers[None, :]) % q)
        words = messages @ G
        weights = np.count_nonzero(words.view(np.ndarray), axis=1)
        j = int(np.argmin(weights))
        if weights[j] < best:
            best = int(weights[j])
            witness = [int(c) for c in words[j]]
    CODEWORDS_ENUMERATED.inc(total)
    return DistanceResult(value=best, method=METHOD_TAGS["exhaustive"], witness=witness, checks=total)


# -- column independence -------------------------------------------------------------


def _first_nonzero(v: np.ndarray) -> int:
    nz = np.flatnonzero(v)
    if nz.size == 0:
        raise ConsistencyError("dependent prefix reached below the current subset size")
    return int(nz[0])


def _search(chosen: list[int], idx: list[int], V, w: int) -> tuple[Optional[list[int]], int]:
    """First w-subset extending `chosen` whose last column lies in the span.

    V holds the candidate columns `idx` already reduced modulo the span of
    `chosen`.
    """
    depth = len(chosen)
    if depth == w - 1:
        if not idx:
            return None, 0
        zero = ~np.any(V.view(np.ndarray), axis=1)
        hits = np.flatnonzero(zero)
        if hits.size:
            return chosen + [idx[int(hits[0])]], int(hits[0]) + 1
        return None, len(idx)
    checks = 0
    need = w - 1 - depth
    for a in range(len(idx) - need):
        v = V[a]
        p = _first_nonzero(v.view(np.ndarray))
        v = v / v[p]
        rest = V[a + 1 :]
        rest = rest - rest[:, p : p + 1] * v[None, :]
        found, sub = _search(chosen + [idx[a]], idx[a + 1 :], rest, w)
        checks += sub
        if found is not None:
            return found, checks
    return None, checks


def _subtree(task: tuple) -> tuple[Optional[list[int]], int]:
    """Worker entry: rebuild the field, then search subsets starting at `first`."""
    order, poly, cols, first, w = task
    field = galois.GF(order) if poly == 0 else galois.GF(order, irreducible_poly=poly)
    V = field(cols)
    return _search_from(V, first, w)


def _search_from(V, first: int, w: int) -> tuple[Optional[list[int]], int]:
    n = V.shape[0]
    v = V[first]
    nz = np.flatnonzero(v.view(np.ndarray))
    if nz.size == 0:
        raise ConsistencyError("zero column reached above the first level")
    p = int(nz[0])
    v = v / v[p]
    rest = V[first + 1 :]
    rest = rest - rest[:, p : p + 1] * v[None, :]
    return _search([first], list(range(first + 1, n)), rest, w)


def _first_dependent(cols, w: int, threads: int) -> tuple[Optional[list[int]], int]:
    n = cols.shape[0]
    if w == 1:
        zero = np.flatnonzero(~np.any(cols.view(np.ndarray), axis=1))
        return ([int(zero[0])] if zero.size else None), (int(zero[0]) + 1 if zero.size else n)
    firsts = range(n - w + 1)
    if threads <= 1:
        checks = 0
        for a in firsts:
            found, sub = _search_from(cols, a, w)
            checks += sub
            if found is not None:
                return found, checks
        return None, checks
    order, poly = field_key(type(cols))
    raw = np.asarray(cols.view(np.ndarray), dtype=np.int64)
    tasks = [(order, poly, raw, a, w) for a in firsts]
    checks = 0
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for found, sub in pool.map(_subtree, tasks):
            checks += sub
            if found is not None:
                return found, checks
    return None, checks


def _columns(code: Code, budget: SearchBudget, threads: int) -> DistanceResult:
    tag = METHOD_TAGS["columns"]
    if code.is_full:
        return DistanceResult(value=1, method=tag, witness=[0], checks=0)
    H = code.parity_check_matrix
    r, n = H.shape
    cols = H.T.copy()
    total = 0
    for w in range(1, r + 1):
        budget.charge(comb(n, w), f"{w}-column subsets")
        found, checks = _first_dependent(cols, w, threads)
        total += checks
        RANK_CHECKS.inc(checks)
        logger.debug("column level scanned", extra={"w": w, "checks": checks, "dependent": found is not None})
        if found is not None:
            return DistanceResult(value=w, method=tag, witness=found, checks=total)
    # any r + 1 columns of an r-row matrix are dependent
    return DistanceResult(value=r + 1, method=tag, witness=list(range(r + 1)), checks=total)

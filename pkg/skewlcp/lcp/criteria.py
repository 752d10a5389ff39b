"""Linear complementary pair verdicts and the security parameter.

Criteria evaluated for (C, D) = (R·g, R·h):

    (1) G_C and G_D stack to rank n with k_C + k_D = n
    (2) C ∩ D = 0 and k_C + k_D = n
    (3) C + D = R and C ∩ D = 0
    (4) gcrd(g, h) = 1 and lclm(g, h) = x^n − λ
    (5) gcrd(g, h) = 1 and deg g + deg h = n
    (6) lclm(g, h) = x^n − λ and deg g + deg h = n
    (7) E(g, u) + E(h, u) = L and E(g, u) ∩ E(h, u) = 0
    (8) E(g, u) ∩ E(h, u) = 0 and deg g + deg h = n
    (9) E(g, u) + E(h, u) = L and deg g + deg h = n

(4)-(6) always run; "audit" mode adds (1)-(3) and, with a tower, (7)-(9).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from ..codes.code import Code
from ..codes.espace import e_space
from ..duality.theta import dual
from ..errors import ConsistencyError, InputError
from ..fields.linalg import rank, span_intersection, span_sum
from ..fields.tower import norm_preimage
from ..metrics.registry import LCP_CHECKS
from ..skew.euclid import lclm_and_gcrd
from .distance import DistanceResult, min_distance


logger = logging.getLogger("skewlcp.lcp")


@dataclass
class LcpReport:
    verdict: bool
    criteria: dict[str, bool]
    gcrd: list[int]
    lclm_degree: int
    dimensions: tuple[int, int]
    security_parameter: Optional[int] = None
    distances: dict[str, DistanceResult] = field(default_factory=dict)
    unresolved: dict[str, str] = field(default_factory=dict)

    def record_distances(
        self,
        primal: Optional[DistanceResult],
        d_perp: Optional[DistanceResult],
        unresolved: Optional[dict[str, str]] = None,
    ) -> None:
        """Attach d(C) and d(D^⊥); the security parameter needs both sides."""
        self.distances = {k: v for k, v in (("C", primal), ("D_perp", d_perp)) if v is not None}
        self.unresolved = dict(unresolved or {})
        if primal is not None and d_perp is not None:
            self.security_parameter = min(primal.value, d_perp.value)
        else:
            self.security_parameter = None

    @property
    def security_method(self) -> Optional[str]:
        if self.security_parameter is None:
            return None
        methods = {r.method for r in self.distances.values()}
        return methods.pop() if len(methods) == 1 else "mixed"

    def to_dict(self) -> dict:
        out = {
            "verdict": self.verdict,
            "criteria": dict(sorted(self.criteria.items())),
            "gcrd": self.gcrd,
            "lclm_degree": self.lclm_degree,
            "dimensions": list(self.dimensions),
            "security_parameter": self.security_parameter,
            "security_method": self.security_method,
            "distances": {k: v.to_dict() for k, v in sorted(self.distances.items())},
        }
        if self.unresolved:
            out["unresolved"] = dict(sorted(self.unresolved.items()))
        return out


def _rows(code: Code):
    field = code.ring.field
    if code.is_zero:
        return field.Zeros((0, code.n))
    return code.generator_matrix


def _vector_criteria(c: Code, d: Code) -> dict[str, bool]:
    n = c.n
    dims_ok = c.dimension + d.dimension == n
    gc, gd = _rows(c), _rows(d)
    stacked = span_sum(gc, gd)
    meet = span_intersection(gc, gd)
    return {
        "1": rank(stacked) == n and dims_ok,
        "2": meet.shape[0] == 0 and dims_ok,
        "3": rank(stacked) == n and meet.shape[0] == 0,
    }


def _espace_criteria(c: Code, d: Code, u, seed: int) -> dict[str, bool]:
    ring = c.ring
    tower = ring.tower
    if u is None:
        u = norm_preimage(tower, ring.extension().lam, seed=seed)
    ec = e_space(ring, c, u)
    ed = e_space(ring, d, u)
    total = ec.sum(ed).dimension == tower.n
    trivial = ec.intersection(ed).dimension == 0
    degrees = int(c.g.degree) + int(d.g.degree) == c.n
    return {"7": total and trivial, "8": trivial and degrees, "9": total and degrees}


def is_lcp(c: Code, d: Code, mode: str = "fast", u=None, seed: int = 0) -> LcpReport:
    """Decide whether C ⊕ D is the whole ring; every evaluated criterion must agree."""
    if c.ring != d.ring:
        raise InputError("codes live in different rings")
    lclm, gcrd = lclm_and_gcrd(c.g, d.g)
    modulus = c.ring.modulus
    unit = gcrd.degree == 0
    full = lclm == modulus
    degrees = int(c.g.degree) + int(d.g.degree) == c.n
    criteria = {"4": unit and full, "5": unit and degrees, "6": full and degrees}
    if mode == "audit":
        criteria.update(_vector_criteria(c, d))
        if c.ring.tower is not None:
            criteria.update(_espace_criteria(c, d, u, seed))
    elif mode != "fast":
        raise InputError(f"unknown mode: {mode}")
    verdicts = set(criteria.values())
    if len(verdicts) != 1:
        logger.error("criteria disagree", extra={"criteria": criteria})
        raise ConsistencyError(f"LCP criteria disagree: {criteria}")
    verdict = verdicts.pop()
    LCP_CHECKS.labels(verdict=str(verdict).lower()).inc()
    return LcpReport(
        verdict=verdict,
        criteria=criteria,
        gcrd=gcrd.to_ints(),
        lclm_degree=int(lclm.degree),
        dimensions=(c.dimension, d.dimension),
    )


@dataclass(frozen=True)
class SecurityParameter:
    value: int
    primal: DistanceResult
    dual: DistanceResult

    def to_dict(self) -> dict:
        return {"value": self.value, "C": self.primal.to_dict(), "D_perp": self.dual.to_dict()}


def security_parameter(
    c: Code,
    d: Code,
    method: str = "columns",
    budget: Optional[int] = None,
    threads: int = 1,
) -> SecurityParameter:
    """min(d(C), d(D^⊥)), with the method recorded for each side."""
    primal = min_distance(c, method, budget, threads)
    d_perp = min_distance(dual(d), method, budget, threads)
    return SecurityParameter(value=min(primal.value, d_perp.value), primal=primal, dual=d_perp)

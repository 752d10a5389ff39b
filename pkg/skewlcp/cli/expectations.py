"""Claim checking for manifest `expect` blocks.

Every claim evaluates to a `ClaimResult`; a claim whose distance engine runs
out of budget is reported as unresolved instead of failing the whole run.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Optional

from ..duality.theta import dual
from ..errors import BudgetExceeded, InputError
from ..fields.tower import is_cyclic_vector
from ..isometry.group import betas_with_norm_power, group_order_formula, isomorphism_image
from ..isometry.search import pairwise_images
from ..lcp.criteria import is_lcp, security_parameter
from ..lcp.distance import min_distance
from ..skew.euclid import gcrd
from .manifest import Context


logger = logging.getLogger("skewlcp.expectations")


@dataclass
class ClaimResult:
    claim: str
    ok: bool
    expected: Any = None
    actual: Any = None
    skipped: bool = False
    unresolved: Optional[str] = None
    detail: Optional[str] = None

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "ok": self.ok,
            "expected": self.expected,
            "actual": self.actual,
            "skipped": self.skipped,
        }
        if self.unresolved is not None:
            out["unresolved"] = self.unresolved
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def _matrix_ints(ctx: Context, rows, field_name: str = "F") -> list[list[int]]:
    return [[int(ctx.element(e, field_name)) for e in row] for row in rows]


def _distance(ctx: Context, code, claim: dict) -> int:
    method = claim.get("method", ctx.config.method)
    budget = ctx.config.exhaustive_budget if method == "exhaustive" else ctx.config.column_budget
    return min_distance(code, method, budget, ctx.config.threads).value


def _generator(ctx: Context, claim: dict):
    code = ctx.code(claim["code"])
    expected = ctx.poly(claim["coeffs"], code.ring.skew).to_ints()
    return expected, code.g.to_ints()


def _dimension(ctx: Context, claim: dict):
    return claim["value"], ctx.code(claim["code"]).dimension


def _distance_claim(ctx: Context, claim: dict):
    return claim["value"], _distance(ctx, ctx.code(claim["code"]), claim)


def _dual_distance(ctx: Context, claim: dict):
    return claim["value"], _distance(ctx, dual(ctx.code(claim["code"])), claim)


def _security_parameter(ctx: Context, claim: dict):
    method = claim.get("method", ctx.config.method)
    budget = ctx.config.exhaustive_budget if method == "exhaustive" else ctx.config.column_budget
    sp = security_parameter(ctx.code(claim["C"]), ctx.code(claim["D"]), method, budget, ctx.config.threads)
    return claim["value"], sp.value


def _lcp(ctx: Context, claim: dict):
    report = is_lcp(ctx.code(claim["C"]), ctx.code(claim["D"]), mode=ctx.config.mode)
    return claim["value"], report.verdict


def _gcrd(ctx: Context, claim: dict):
    c, d = ctx.code(claim["C"]), ctx.code(claim["D"])
    expected = ctx.poly(claim["coeffs"], c.ring.skew).to_ints()
    return expected, gcrd(c.g, d.g).to_ints()


def _image_lcp(ctx: Context, claim: dict):
    """is_lcp(C, φ_β ∘ φ_x^i (seed))."""
    seed = ctx.code(claim["seed"])
    image = isomorphism_image(seed, ctx.element(claim.get("beta", 1)), claim.get("phi_power", 0))
    return claim["value"], is_lcp(ctx.code(claim["C"]), image, mode=ctx.config.mode).verdict


def _group_order(ctx: Context, claim: dict):
    ring = ctx.code(claim["code"]).ring if "code" in claim else ctx.ring
    group = ctx.group(ring)
    if group.order != group_order_formula(ring):
        return claim["value"], {"enumerated": group.order, "formula": group_order_formula(ring)}
    return claim["value"], group.order


def _search(ctx: Context, claim: dict):
    """Exact fields must match; `count` matches either raw or deduplicated successes."""
    report = ctx.search(claim["C"], claim["seed"], claim.get("exclude_identity", False))
    actual = {
        "candidates": report.candidates,
        "successes": report.successes,
        "distinct_successes": report.distinct_successes,
        "failures": report.failures,
    }
    expected = {k: v for k, v in claim.items() if k in actual or k == "count"}
    ok = all(actual[k] == v for k, v in expected.items() if k != "count")
    if "count" in expected:
        ok = ok and expected["count"] in (report.successes, report.distinct_successes)
    return expected, actual, ok


def _pairwise(ctx: Context, claim: dict):
    c, d = ctx.code(claim["C"]), ctx.code(claim["D"])
    report = pairwise_images(c, d, ctx.group(c.ring), mode=ctx.config.mode)
    return claim["value"], report.lcps


def _lcp_pair_total(ctx: Context, claim: dict):
    """|G| times the number of LCP images ζ(seed) other than the identity's."""
    c = ctx.code(claim["C"])
    report = ctx.search(claim["C"], claim["seed"], claim.get("exclude_identity", True))
    return claim["value"], ctx.group(c.ring).order * report.successes


def _norm(ctx: Context, claim: dict):
    a = ctx.element(claim["element"])
    return int(ctx.element(claim["value"])), int(ctx.ring.norm_to_fixed(a))


def _element_equal(ctx: Context, claim: dict):
    where = claim.get("field", "F")
    return int(ctx.element(claim["right"], where)), int(ctx.element(claim["left"], where))


def _generator_matrix(ctx: Context, claim: dict):
    code = ctx.code(claim["code"])
    actual = [[int(c) for c in row] for row in code.generator_matrix]
    return _matrix_ints(ctx, claim["rows"]), actual


def _parity_check(ctx: Context, claim: dict):
    code = ctx.code(claim["code"])
    H = code.parity_check_matrix
    if claim.get("transpose", False):
        H = H.T
    return _matrix_ints(ctx, claim["rows"]), [[int(c) for c in row] for row in H]


def _norm_power_fiber(ctx: Context, claim: dict):
    """Number of β ∈ F* with N_{F/K}(β)^s equal to the target."""
    target = ctx.element(claim["target"])
    return claim["value"], len(betas_with_norm_power(ctx.ring, target))


def _cyclic_vector(ctx: Context, claim: dict):
    u = ctx.element(claim["u"], "L") if "u" in claim else ctx.u
    return claim["value"], is_cyclic_vector(ctx.tower, u, ctx.element(claim["alpha"], "L"))


def _bch_bound(ctx: Context, claim: dict):
    code = ctx.code(claim["code"])
    bound = code.bound
    return claim["value"], None if bound is None else bound.value


CLAIMS: dict[str, Callable] = {
    "generator": _generator,
    "dimension": _dimension,
    "distance": _distance_claim,
    "dual_distance": _dual_distance,
    "security_parameter": _security_parameter,
    "lcp": _lcp,
    "gcrd": _gcrd,
    "image_lcp": _image_lcp,
    "group_order": _group_order,
    "search": _search,
    "pairwise_images": _pairwise,
    "lcp_pair_total": _lcp_pair_total,
    "norm": _norm,
    "element_equal": _element_equal,
    "generator_matrix": _generator_matrix,
    "parity_check": _parity_check,
    "norm_power_fiber": _norm_power_fiber,
    "cyclic_vector": _cyclic_vector,
    "bch_bound": _bch_bound,
}


def check_claim(ctx: Context, claim: dict) -> ClaimResult:
    name = claim.get("claim")
    handler = CLAIMS.get(name)
    if handler is None:
        raise InputError(f"unknown claim: {name}")
    if claim.get("slow", False) and not ctx.config.slow:
        return ClaimResult(
            claim=name,
            ok=False,
            expected=claim.get("value"),
            skipped=True,
            unresolved="slow claim not evaluated",
            detail="slow",
        )
    try:
        outcome = handler(ctx, claim)
    except KeyError as exc:
        raise InputError(f"claim {name} is missing field {exc}") from exc
    except BudgetExceeded as exc:
        logger.warning("claim unresolved", extra={"claim": name, "needed": exc.needed, "budget": exc.budget})
        return ClaimResult(claim=name, ok=False, expected=claim.get("value"), unresolved=str(exc))
    if len(outcome) == 3:
        expected, actual, ok = outcome
    else:
        expected, actual = outcome
        ok = expected == actual
    if not ok:
        logger.warning("claim mismatch", extra={"claim": name, "expected": expected, "actual": actual})
    return ClaimResult(claim=name, ok=ok, expected=expected, actual=actual)


def check_all(ctx: Context) -> list[ClaimResult]:
    return [check_claim(ctx, claim) for claim in ctx.manifest.expect]

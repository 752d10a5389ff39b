"""Supplement searches: images of a seed divisor under the isometry group.

Verdicts are cached per image generator, so a group element whose image was
already tested costs one gcrd and no Euclid run.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Optional

from ..codes.code import Code, code_from_generator, zero_code
from ..errors import InputError
from ..lcp.criteria import is_lcp
from ..metrics.registry import SEARCH_SECONDS, SUPPLEMENT_CANDIDATES
from ..skew.poly import SkewPoly
from .group import Isometry, IsometryGroup, act_on_code


logger = logging.getLogger("skewlcp.isometry.search")


@dataclass
class SearchReport:
    candidates: int = 0
    distinct_candidates: int = 0
    successes: int = 0
    distinct_successes: int = 0
    failures: int = 0
    succeeded: list[Isometry] = field(default_factory=list)
    failed: list[Isometry] = field(default_factory=list)
    supplements: list[Code] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "candidates": self.candidates,
            "distinct_candidates": self.distinct_candidates,
            "successes": self.successes,
            "distinct_successes": self.distinct_successes,
            "failures": self.failures,
            "succeeded": [z.to_dict() for z in self.succeeded],
            "failed": [z.to_dict() for z in self.failed],
            "supplements": [c.g.to_ints() for c in self.supplements],
        }


def supplement_search(
    code: Code,
    seed_generator: SkewPoly,
    group: IsometryGroup,
    exclude_identity: bool = False,
    mode: str = "fast",
) -> SearchReport:
    """Test is_lcp(C, R·ζ(seed)) for every ζ in the group, in group order."""
    ring = code.ring
    if group.ring != ring:
        raise InputError("group and code use different rings")
    if seed_generator.is_zero or int(seed_generator.degree) + int(code.g.degree) != code.n:
        raise InputError("seed and code generators must have degrees summing to n")
    if ring.reduce(seed_generator).is_zero:
        seed = zero_code(ring)
    else:
        seed = code_from_generator(ring, seed_generator, label="seed")
    elements = group.non_identity() if exclude_identity else group.elements
    report = SearchReport()
    verdicts: dict[tuple[int, ...], bool] = {}
    started = time.perf_counter()
    with SEARCH_SECONDS.time():
        for zeta in elements:
            image = act_on_code(zeta, seed)
            key = tuple(image.g.to_ints())
            verdict = verdicts.get(key)
            if verdict is None:
                verdict = is_lcp(code, image, mode=mode).verdict
                verdicts[key] = verdict
                if verdict:
                    report.supplements.append(image)
            report.candidates += 1
            if verdict:
                report.successes += 1
                report.succeeded.append(zeta)
            else:
                report.failures += 1
                report.failed.append(zeta)
    SUPPLEMENT_CANDIDATES.inc(report.candidates)
    report.distinct_candidates = len(verdicts)
    report.distinct_successes = len(report.supplements)
    logger.info(
        "supplement search finished",
        extra={
            "code": code.label,
            "candidates": report.candidates,
            "successes": report.successes,
            "distinct_successes": report.distinct_successes,
            "seconds": round(time.perf_counter() - started, 3),
        },
    )
    return report


@dataclass(frozen=True)
class PairwiseReport:
    pairs: int
    lcps: int
    distinct_pairs: int

    def to_dict(self) -> dict:
        return {"pairs": self.pairs, "lcps": self.lcps, "distinct_pairs": self.distinct_pairs}


def pairwise_images(
    c: Code, d: Code, group: IsometryGroup, mode: str = "fast", limit: Optional[int] = None
) -> PairwiseReport:
    """Count LCPs among all (ζ1(C), ζ2(D)) with ζ1, ζ2 in the group."""
    if c.ring != group.ring or d.ring != group.ring:
        raise InputError("group and codes use different rings")
    elements = group.elements if limit is None else group.elements[:limit]
    images_c = [act_on_code(z, c) for z in elements]
    images_d = [act_on_code(z, d) for z in elements]
    verdicts: dict[tuple, bool] = {}
    lcps = 0
    with SEARCH_SECONDS.time():
        for ic in images_c:
            for jd in images_d:
                key = (tuple(ic.g.to_ints()), tuple(jd.g.to_ints()))
                verdict = verdicts.get(key)
                if verdict is None:
                    verdict = is_lcp(ic, jd, mode=mode).verdict
                    verdicts[key] = verdict
                lcps += verdict
    SUPPLEMENT_CANDIDATES.inc(len(images_c) * len(images_d))
    logger.info("pairwise images checked", extra={"pairs": len(images_c) * len(images_d), "lcps": lcps})
    return PairwiseReport(pairs=len(images_c) * len(images_d), lcps=lcps, distinct_pairs=len(verdicts))

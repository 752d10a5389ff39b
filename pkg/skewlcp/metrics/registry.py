"""Prometheus metrics registry and metric objects used across the library."""

from __future__ import annotations

from prometheus_client import Counter, Gauge, Histogram, REGISTRY, write_to_textfile


RANK_CHECKS = Counter(
    "skewlcp_rank_checks_total", "Column subsets tested for linear independence"
)

CODEWORDS_ENUMERATED = Counter(
    "skewlcp_codewords_enumerated_total", "Codewords enumerated by the exhaustive engine"
)

LCP_CHECKS = Counter(
    "skewlcp_lcp_checks_total", "LCP verdicts computed", ["verdict"]
)

SUPPLEMENT_CANDIDATES = Counter(
    "skewlcp_supplement_candidates_total", "Group images tested as supplements"
)

RANDOM_TRIALS = Counter(
    "skewlcp_random_trials_total", "Trials spent in seeded random searches", ["search"]
)

DISTANCE_BUDGET_USED_RATIO = Gauge(
    "skewlcp_distance_budget_used_ratio", "Fraction of the last distance budget consumed (0..1)"
)

DISTANCE_SECONDS = Histogram(
    "skewlcp_distance_seconds", "Wall time per minimum-distance computation"
)

SEARCH_SECONDS = Histogram(
    "skewlcp_search_seconds", "Wall time per supplement search"
)


def write_metrics(path: str) -> None:
    """Dump the default registry in the Prometheus text format."""
    write_to_textfile(path, REGISTRY)

"""Configuration model and loader for skewlcp.

Defines the `AppConfig` dataclass that reads environment variables and
provides typed access across the library and the command line.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Any, Optional


def _get_bool(name: str, default: bool = False) -> bool:
    v = os.getenv(name)
    if v is None:
        return default
    return v.strip().lower() in {"1", "true", "yes", "on"}


def _get_int(name: str, default: int) -> int:
    v = os.getenv(name)
    try:
        return int(v) if v is not None else default
    except Exception:
        return default


def _get_choice(name: str, default: str, choices: set[str]) -> str:
    v = (os.getenv(name) or "").strip().lower()
    return v if v in choices else default


MODES = {"fast", "audit"}
METHODS = {"exhaustive", "columns", "declared"}


@dataclass(frozen=True)
class AppConfig:
    """Runtime configuration resolved from environment variables.

    Command-line flags are layered on top with `with_overrides`.
    """

    # Randomized searches (norm preimages, Hilbert 90, cyclic vectors)
    seed: int
    retry_budget: int

    # Distance engines
    exhaustive_budget: int
    column_budget: int
    threads: int

    # LCP checks
    mode: str  # fast | audit
    method: str  # exhaustive | columns | declared
    slow: bool

    # Logging
    log_level: str
    logs_dir: Optional[str]
    log_rotate_max_bytes: int
    log_rotate_backup_count: int

    # Reports
    reports_dir: Optional[str]

    @staticmethod
    def from_env() -> "AppConfig":
        return AppConfig(
            seed=_get_int("SKEWLCP_SEED", 0),
            retry_budget=max(1, _get_int("SKEWLCP_RETRY_BUDGET", 1_000_000)),
            exhaustive_budget=max(1, _get_int("SKEWLCP_EXHAUSTIVE_BUDGET", 2**24)),
            column_budget=max(1, _get_int("SKEWLCP_COLUMN_BUDGET", 10**7)),
            threads=max(1, min(_get_int("SKEWLCP_THREADS", 1), 64)),
            mode=_get_choice("SKEWLCP_MODE", "fast", MODES),
            method=_get_choice("SKEWLCP_METHOD", "columns", METHODS),
            slow=_get_bool("SKEWLCP_SLOW", False),
            log_level=os.getenv("SKEWLCP_LOG_LEVEL", "WARNING"),
            logs_dir=os.getenv("SKEWLCP_LOGS_DIR") or None,
            log_rotate_max_bytes=_get_int("SKEWLCP_LOG_ROTATE_MAX_BYTES", 5 * 1024 * 1024),
            log_rotate_backup_count=_get_int("SKEWLCP_LOG_ROTATE_BACKUP_COUNT", 10),
            reports_dir=os.getenv("SKEWLCP_REPORTS_DIR") or None,
        )

    def with_overrides(self, **overrides: Any) -> "AppConfig":
        """Return a copy with every non-None override applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        if "threads" in changes:
            changes["threads"] = max(1, min(int(changes["threads"]), 64))
        if "mode" in changes and changes["mode"] not in MODES:
            raise ValueError(f"unknown mode: {changes['mode']}")
        if "method" in changes and changes["method"] not in METHODS:
            raise ValueError(f"unknown method: {changes['method']}")
        return replace(self, **changes)

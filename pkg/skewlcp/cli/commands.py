"""Command bodies behind the `skewlcp` console script.

Each command returns its exit code; `run_command` maps library exceptions to
the codes in `EXIT_CODES`.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Callable, Optional

import orjson

from ..codes.code import Code
from ..duality.theta import dual
from ..errors import BudgetExceeded, ConsistencyError, SearchExhausted
from ..lcp.criteria import is_lcp
from ..lcp.distance import DistanceResult, declared_distance, min_distance
from ..runtime.config import AppConfig
from ..utils.report_formatter import ReportFormatter
from ..utils.slugging import report_path
from .expectations import check_all
from .fixtures import fixture
from .manifest import Context, Manifest


logger = logging.getLogger("skewlcp.cli")

EXIT_CODES = {
    "ok": 0,
    "mismatch": 1,
    "input": 2,
    "budget": 3,
}

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


def _task(manifest: Manifest, kind: str) -> dict:
    task = manifest.task or {}
    if task.get("kind") != kind:
        raise ValueError(f"manifest {manifest.name} has no {kind} task")
    return task


def _budget(config: AppConfig) -> int:
    return config.exhaustive_budget if config.method == "exhaustive" else config.column_budget


def _emit(data: dict, manifest: Manifest, command: str, config: AppConfig, out: Optional[str], summary) -> None:
    """Write the JSON report to a file and print a summary, or print the JSON."""
    payload = orjson.dumps(data, option=JSON_OPTIONS)
    path = report_path(manifest.name, command, out, config.reports_dir)
    if path is None:
        sys.stdout.write(payload.decode("utf-8") + "\n")
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(payload + b"\n")
    print(summary(manifest.name, data, str(path)))


def _distance_or_declared(
    code: Code, side: str, config: AppConfig, unresolved: dict[str, str]
) -> Optional[DistanceResult]:
    """The configured engine's distance, or the declared bound when the budget runs out."""
    try:
        return min_distance(code, config.method, _budget(config), config.threads)
    except BudgetExceeded as exc:
        unresolved[side] = str(exc)
        if code.bound is None:
            return None
        return declared_distance(code)


def cmd_check(manifest: Manifest, config: AppConfig, out: Optional[str] = None) -> int:
    task = _task(manifest, "check")
    ctx = Context(manifest, config)
    c, d = ctx.code(task["C"]), ctx.code(task["D"])
    report = is_lcp(c, d, mode=config.mode, seed=config.seed)
    unresolved: dict[str, str] = {}
    primal = _distance_or_declared(c, "C", config, unresolved)
    d_perp = _distance_or_declared(dual(d), "D_perp", config, unresolved)
    report.record_distances(primal, d_perp, unresolved)
    data = {"name": manifest.name, "lcp": report.to_dict()}
    _emit(data, manifest, "check", config, out, ReportFormatter.format_check)
    expected = task.get("expect")
    if expected is not None and expected != report.verdict:
        return EXIT_CODES["mismatch"]
    if report.security_parameter is None:
        return EXIT_CODES["budget"]
    return EXIT_CODES["ok"]


def cmd_search(manifest: Manifest, config: AppConfig, out: Optional[str] = None) -> int:
    task = _task(manifest, "search")
    ctx = Context(manifest, config)
    exclude = bool(task.get("exclude_identity", False))
    report = ctx.search(task["C"], task["seed"], exclude)
    data = {
        "name": manifest.name,
        "group_order": ctx.group(ctx.code(task["C"]).ring).order,
        "exclude_identity": exclude,
        **report.to_dict(),
    }
    _emit(data, manifest, "search", config, out, ReportFormatter.format_search)
    return EXIT_CODES["ok"]


def cmd_distance(manifest: Manifest, config: AppConfig, out: Optional[str] = None) -> int:
    task = _task(manifest, "distance")
    ctx = Context(manifest, config)
    code = ctx.code(task["code"])
    targets = {task["code"]: code}
    if task.get("dual", False):
        targets[f"{task['code']}^perp"] = dual(code)
    distances: dict[str, dict] = {}
    exhausted = False
    for label, target in targets.items():
        try:
            distances[label] = min_distance(target, config.method, _budget(config), config.threads).to_dict()
        except BudgetExceeded as exc:
            exhausted = True
            distances[label] = {"unresolved": str(exc), "needed": exc.needed, "budget": exc.budget}
    _emit(
        {"name": manifest.name, "distances": distances},
        manifest,
        "distance",
        config,
        out,
        ReportFormatter.format_distance,
    )
    return EXIT_CODES["budget"] if exhausted else EXIT_CODES["ok"]


def cmd_run(manifest: Manifest, config: AppConfig, out: Optional[str] = None) -> int:
    """Evaluate every claim of the manifest's expect block."""
    ctx = Context(manifest, config)
    results = [r.to_dict() for r in check_all(ctx)]
    _emit(
        {"name": manifest.name, "claims": results},
        manifest,
        "run",
        config,
        out,
        lambda name, data, path: ReportFormatter.format_claims(name, data["claims"], path),
    )
    if any(not r["ok"] and "unresolved" not in r for r in results):
        return EXIT_CODES["mismatch"]
    if any("unresolved" in r for r in results):
        return EXIT_CODES["budget"]
    return EXIT_CODES["ok"]


def cmd_reproduce(name: str, config: AppConfig, out: Optional[str] = None) -> int:
    """`run` on a built-in example, slow claims included."""
    return cmd_run(fixture(name), config.with_overrides(slow=True), out)


def cmd_export(name: str, out: Optional[str] = None) -> int:
    payload = fixture(name).to_json()
    if out:
        Path(out).write_bytes(payload + b"\n")
    else:
        sys.stdout.write(payload.decode("utf-8") + "\n")
    return EXIT_CODES["ok"]


def run_command(fn: Callable[..., int], *args, **kwargs) -> int:
    try:
        return fn(*args, **kwargs)
    except BudgetExceeded as exc:
        logger.error("budget exceeded", extra={"needed": exc.needed, "budget": exc.budget})
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_CODES["budget"]
    except ConsistencyError as exc:
        logger.error("consistency check failed", extra={"error": str(exc)})
        print(f"consistency error: {exc}", file=sys.stderr)
        return EXIT_CODES["mismatch"]
    except (SearchExhausted, ValueError, KeyError) as exc:
        # InputError is a ValueError; missing task fields surface as KeyError
        logger.error("invalid input", extra={"error": str(exc)})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODES["input"]

"""Human-readable summaries of reports, printed when the JSON goes to a file."""

from __future__ import annotations

from typing import Optional


class ReportFormatter:
    """Formats report dictionaries into short emoji-prefixed summaries."""

    EMOJIS = {
        "success": "✅",
        "failure": "❌",
        "warning": "⚠️",
        "skipped": "⏭️",
        "info": "ℹ️",
        "code": "📦",
        "search": "🔎",
        "distance": "📏",
        "stats": "📈",
        "file": "📄",
    }

    @classmethod
    def _verdict(cls, ok: Optional[bool]) -> str:
        if ok is None:
            return cls.EMOJIS["warning"]
        return cls.EMOJIS["success"] if ok else cls.EMOJIS["failure"]

    @classmethod
    def format_check(cls, name: str, report: dict, path: Optional[str] = None) -> str:
        lcp = report["lcp"]
        k_c, k_d = lcp["dimensions"]
        lines = [
            f"{cls._verdict(lcp['verdict'])} **LCP check:** {name}",
            f"{cls.EMOJIS['code']} **Dimensions:** {k_c} + {k_d}, gcrd degree {len(lcp['gcrd']) - 1}",
            f"{cls.EMOJIS['info']} **Criteria:** "
            + " ".join(f"({k}){'✓' if v else '✗'}" for k, v in lcp["criteria"].items()),
        ]
        if lcp.get("security_parameter") is not None:
            lines.append(
                f"{cls.EMOJIS['distance']} **Security parameter:** "
                f"{lcp['security_parameter']} ({lcp['security_method']})"
            )
        for side, reason in lcp.get("unresolved", {}).items():
            lines.append(f"{cls.EMOJIS['warning']} **Unresolved {side}:** {reason}")
        if path:
            lines.append(f"{cls.EMOJIS['file']} **Report:** `{path}`")
        return "\n".join(lines)

    @classmethod
    def format_search(cls, name: str, report: dict, path: Optional[str] = None) -> str:
        lines = [
            f"{cls.EMOJIS['search']} **Supplement search:** {name}",
            f"{cls.EMOJIS['stats']} **Candidates:** {report['candidates']} "
            f"({report['distinct_candidates']} distinct)",
            f"{cls.EMOJIS['success']} **LCPs:** {report['successes']} "
            f"({report['distinct_successes']} distinct codes)",
            f"{cls.EMOJIS['failure']} **Failures:** {report['failures']}",
        ]
        if path:
            lines.append(f"{cls.EMOJIS['file']} **Report:** `{path}`")
        return "\n".join(lines)

    @classmethod
    def format_distance(cls, name: str, report: dict, path: Optional[str] = None) -> str:
        lines = [f"{cls.EMOJIS['distance']} **Distances:** {name}"]
        for label, result in report["distances"].items():
            if "unresolved" in result:
                lines.append(f"{cls.EMOJIS['warning']} {label}: unresolved ({result['unresolved']})")
            else:
                lines.append(f"{cls.EMOJIS['code']} {label}: d = {result['value']} ({result['method']})")
        if path:
            lines.append(f"{cls.EMOJIS['file']} **Report:** `{path}`")
        return "\n".join(lines)

    @classmethod
    def format_claims(cls, name: str, results: list[dict], path: Optional[str] = None) -> str:
        passed = sum(1 for r in results if r["ok"] and not r["skipped"])
        skipped = sum(1 for r in results if r["skipped"])
        failed = [r for r in results if not r["ok"] and not r["skipped"]]
        lines = [
            f"{cls._verdict(not failed)} **Reproduction:** {name}",
            f"{cls.EMOJIS['stats']} **Claims:** {passed} passed, {len(failed)} failed, {skipped} skipped",
        ]
        for r in failed:
            if "unresolved" in r:
                lines.append(f"{cls.EMOJIS['warning']} {r['claim']}: unresolved")
            else:
                lines.append(f"{cls.EMOJIS['failure']} {r['claim']}: expected {r['expected']}, got {r['actual']}")
        if path:
            lines.append(f"{cls.EMOJIS['file']} **Report:** `{path}`")
        return "\n".join(lines)

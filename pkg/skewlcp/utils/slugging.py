"""Report file names derived from manifest names."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from slugify import slugify


SAFE_MAX_FILENAME = 120


def to_safe_slug(text: str) -> str:
    slug = slugify(text or "", lowercase=True, regex_pattern=r"[^a-zA-Z0-9._-]+")
    return slug or "manifest"


def report_filename(manifest_name: str, command: str, ext: str = "json") -> str:
    """`<slug>_<command>.<ext>`, with the slug cut to keep the name short."""
    base = f"{to_safe_slug(manifest_name)}_{to_safe_slug(command)}"
    name = f"{base}.{ext}"
    if len(name) > SAFE_MAX_FILENAME:
        overflow = len(name) - SAFE_MAX_FILENAME
        name = f"{base[:-overflow]}.{ext}"
    return name


def report_path(
    manifest_name: str, command: str, out: Optional[str], reports_dir: Optional[str]
) -> Optional[Path]:
    """--out wins; otherwise a slugged name inside the reports directory, if any."""
    if out:
        return Path(out)
    if reports_dir:
        return Path(reports_dir) / report_filename(manifest_name, command)
    return None

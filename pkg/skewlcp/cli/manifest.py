"""JSON manifests: field towers, rings, named codes, a task and expected claims.

A manifest looks like::

    {
      "name": "...",
      "field": {"p": 2, "modulus": [...], "sigma": 2, "s": 5, "tower": false}
             | {"top": {"p": 2, "modulus": [...], "theta": 1, "mu": 6,
                        "subfield_generator": <L element>}},
      "lambda": <F element>,            # default 1
      "u": <L element>,                 # default: a seeded norm preimage of lambda
      "codes": {"C": {...}, ...},
      "task": {"kind": "check" | "search" | "distance", ...},
      "expect": [{"claim": "...", ...}, ...]
    }

Elements are little-endian coefficient lists, integers (the galois integer
representation) or {"gen_pow": e}; polynomials are lists of elements,
constant term first. Code entries take one of the keys `generator`, `bch`,
`dual_of`, `image_of` or `conjugates`, plus optional `declared_distance`
and `declared_dual_distance`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Optional

import orjson

from ..bch.construct import (
    BchSpec,
    bch_dual,
    bch_generator,
    bch_partner,
    conjugates_code,
    designed_distance_for_dimension,
)
from ..codes.code import BoundProvenance, Code, DistanceBound
from ..codes.ring import CodeRing
from ..duality.theta import dual
from ..errors import InputError
from ..fields.finite import FieldAut, FieldClass, build_ext_field, element_from_coeffs, generator
from ..fields.tower import FieldTower, build_tower, norm_preimage, tower_from_top
from ..isometry.group import IsometryGroup, isomorphism_image
from ..isometry.search import SearchReport, supplement_search
from ..runtime.config import AppConfig
from ..skew.poly import SkewPoly, SkewRing


logger = logging.getLogger("skewlcp.manifest")

CODE_KINDS = ("generator", "bch", "dual_of", "image_of", "conjugates")
CODE_KIND_TYPES = {"generator": list, "bch": dict, "dual_of": str, "image_of": str, "conjugates": dict}
TASK_KINDS = ("check", "search", "distance")


def _require(data: dict, key: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise ValueError(f"missing field: {key}")
    return data[key]


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer")
    return value


def parse_element(field_cls: FieldClass, spec: Any):
    """One field element from a coefficient list, an integer or {"gen_pow": e}."""
    if isinstance(spec, bool):
        raise ValueError("booleans are not field elements")
    if isinstance(spec, int):
        if not 0 <= spec < field_cls.order:
            raise ValueError(f"element {spec} out of range for a field of order {field_cls.order}")
        return field_cls(spec)
    if isinstance(spec, list):
        return element_from_coeffs(field_cls, [_int(c, "coefficient") for c in spec])
    if isinstance(spec, dict) and set(spec) == {"gen_pow"}:
        return generator(field_cls) ** _int(spec["gen_pow"], "gen_pow")
    raise ValueError(f"cannot parse field element: {spec!r}")


def parse_poly(skew: SkewRing, spec: Any) -> SkewPoly:
    if not isinstance(spec, list) or not spec:
        raise ValueError("polynomials are non-empty lists of elements")
    coeffs = skew.field([int(parse_element(skew.field, c)) for c in spec])
    return skew.poly(coeffs)


@dataclass(frozen=True)
class Manifest:
    name: str
    field_spec: dict
    lam: Any = 1
    u: Any = None
    codes: dict = field(default_factory=dict)
    task: Optional[dict] = None
    expect: list = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: dict) -> "Manifest":
        try:
            if not isinstance(data, dict):
                raise ValueError("a manifest is a JSON object")
            name = _require(data, "name")
            field_spec = _require(data, "field")
            codes = data.get("codes", {})
            if not isinstance(name, str) or not name:
                raise ValueError("name must be a non-empty string")
            if not isinstance(field_spec, dict):
                raise ValueError("field must be an object")
            if not isinstance(codes, dict):
                raise ValueError("codes must be an object")
            for label, spec in codes.items():
                if not isinstance(spec, dict):
                    raise ValueError(f"code {label} must be an object")
                kinds = [k for k in CODE_KINDS if k in spec]
                if len(kinds) != 1:
                    raise ValueError(f"code {label} needs exactly one of {', '.join(CODE_KINDS)}")
                if not isinstance(spec[kinds[0]], CODE_KIND_TYPES[kinds[0]]):
                    raise ValueError(f"code {label}: {kinds[0]} must be a {CODE_KIND_TYPES[kinds[0]].__name__}")
            task = data.get("task")
            if task is not None and _require(task, "kind") not in TASK_KINDS:
                raise ValueError(f"unknown task kind: {task['kind']}")
            expect = data.get("expect", [])
            if not isinstance(expect, list) or any(not isinstance(c, dict) or "claim" not in c for c in expect):
                raise ValueError("expect must be a list of claims")
        except ValueError as exc:
            raise InputError(f"invalid manifest: {exc}") from exc
        return cls(
            name=name,
            field_spec=field_spec,
            lam=data.get("lambda", 1),
            u=data.get("u"),
            codes=codes,
            task=task,
            expect=expect,
        )

    @classmethod
    def load(cls, path: str | Path) -> "Manifest":
        try:
            data = orjson.loads(Path(path).read_bytes())
        except (OSError, orjson.JSONDecodeError) as exc:
            raise InputError(f"cannot read manifest {path}: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "field": self.field_spec, "lambda": self.lam}
        if self.u is not None:
            out["u"] = self.u
        out["codes"] = self.codes
        if self.task is not None:
            out["task"] = self.task
        if self.expect:
            out["expect"] = self.expect
        return out

    def to_json(self) -> bytes:
        return orjson.dumps(self.to_dict(), option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS)


class Context:
    """Lazily built objects of a manifest; codes, groups and searches are cached."""

    def __init__(self, manifest: Manifest, config: AppConfig) -> None:
        self.manifest = manifest
        self.config = config
        self._codes: dict[str, Code] = {}
        self._resolving: set[str] = set()
        self._groups: dict[CodeRing, IsometryGroup] = {}
        self._searches: dict[tuple, SearchReport] = {}

    # -- fields --------------------------------------------------------------

    @cached_property
    def _fields(self) -> tuple[FieldClass, FieldAut, Optional[FieldTower], int]:
        spec = self.manifest.field_spec
        try:
            if "top" in spec:
                top = spec["top"]
                L = build_ext_field(_int(_require(top, "p"), "p"), _require(top, "modulus"))
                eta = parse_element(L, _require(top, "subfield_generator"))
                tower = tower_from_top(L, _int(_require(top, "theta"), "theta"), _int(_require(top, "mu"), "mu"), eta)
                return tower.F, tower.sigma, tower, tower.n
            F = build_ext_field(_int(_require(spec, "p"), "p"), _require(spec, "modulus"))
            sigma = FieldAut(F, _int(spec.get("sigma", 1), "sigma"))
            s = _int(spec.get("s", 1), "s")
            if s < 1:
                raise ValueError("s must be positive")
            tower = build_tower(F, sigma, s) if spec.get("tower", False) else None
            return F, sigma, tower, s * sigma.order
        except ValueError as exc:
            raise InputError(f"invalid field spec: {exc}") from exc

    @property
    def F(self) -> FieldClass:
        return self._fields[0]

    @property
    def tower(self) -> FieldTower:
        tower = self._fields[2]
        if tower is None:
            raise InputError("this manifest declares no field tower")
        return tower

    @property
    def has_tower(self) -> bool:
        return self._fields[2] is not None

    @property
    def L(self) -> FieldClass:
        return self.tower.L

    def field_named(self, name: str) -> FieldClass:
        if name == "F":
            return self.F
        if name == "L":
            return self.L
        raise InputError(f"unknown field: {name}")

    def element(self, spec: Any, where: str = "F"):
        try:
            return parse_element(self.field_named(where), spec)
        except ValueError as exc:
            raise InputError(str(exc)) from exc

    def poly(self, spec: Any, skew: Optional[SkewRing] = None) -> SkewPoly:
        try:
            return parse_poly(skew or self.ring.skew, spec)
        except ValueError as exc:
            raise InputError(str(exc)) from exc

    # -- ring ----------------------------------------------------------------

    @cached_property
    def ring(self) -> CodeRing:
        F, sigma, tower, n = self._fields
        lam = self.element(self.manifest.lam)
        if tower is not None:
            return CodeRing.over_base(tower, lam)
        return CodeRing(SkewRing(sigma), n, lam)

    @cached_property
    def u(self):
        """The norm preimage used by BCH specs and E-spaces."""
        tower = self.tower
        if self.manifest.u is not None:
            u = self.element(self.manifest.u, "L")
        else:
            u = norm_preimage(
                tower,
                tower.f_to_l(self.ring.lam),
                seed=self.config.seed,
                retry_budget=self.config.retry_budget,
            )
        if tower.norm_lk(u) != tower.f_to_l(self.ring.lam):
            raise InputError("u is not a norm preimage of lambda")
        return u

    # -- codes ---------------------------------------------------------------

    def code(self, label: str) -> Code:
        if label in self._codes:
            return self._codes[label]
        if label not in self.manifest.codes:
            raise InputError(f"unknown code: {label}")
        if label in self._resolving:
            raise InputError(f"code {label} refers to itself")
        self._resolving.add(label)
        try:
            code = self._build_code(label, self.manifest.codes[label])
        finally:
            self._resolving.discard(label)
        self._codes[label] = code
        logger.debug("code built", extra={"code": label, "n": code.n, "k": code.dimension})
        return code

    def _bch_delta(self, bch: dict) -> int:
        """`delta` directly, or the designed distance of the `code` part of the given `dimension`."""
        if "dimension" not in bch:
            return _int(_require(bch, "delta"), "delta")
        if "delta" in bch:
            raise InputError("bch takes delta or dimension, not both")
        tower = self.tower
        return designed_distance_for_dimension(tower.mu, tower.s, _int(bch["dimension"], "dimension"))

    def _build_code(self, label: str, spec: dict) -> Code:
        if "generator" in spec:
            code = Code(self.ring, self.poly(spec["generator"]), label=label)
        elif "bch" in spec:
            bch = spec["bch"]
            bch_spec = BchSpec(
                tower=self.tower,
                u=self.u,
                alpha=self.element(_require(bch, "alpha"), "L"),
                r=_int(bch.get("r", 0), "r"),
                delta=self._bch_delta(bch),
            )
            part = bch.get("part", "code")
            if part == "code":
                code = bch_generator(bch_spec)
            elif part == "partner":
                code = bch_partner(bch_spec)
            elif part == "dual":
                code = bch_dual(bch_spec, seed=self.config.seed)
            else:
                raise InputError(f"unknown bch part: {part}")
        elif "dual_of" in spec:
            code = dual(self.code(spec["dual_of"]))
        elif "image_of" in spec:
            source = self.code(spec["image_of"])
            beta = self.element(spec.get("beta", 1))
            code = isomorphism_image(source, beta, _int(spec.get("phi_power", 0), "phi_power"))
        else:
            conj = spec["conjugates"]
            code = conjugates_code(
                self.tower,
                self.u,
                self.element(_require(conj, "alpha"), "L"),
                [_int(i, "index") for i in _require(conj, "indices")],
            )
        bound, dual_bound = code.bound, code.dual_bound
        if "declared_distance" in spec:
            bound = DistanceBound(_int(spec["declared_distance"], "declared_distance"), BoundProvenance.ASSERTED)
        if "declared_dual_distance" in spec:
            dual_bound = DistanceBound(
                _int(spec["declared_dual_distance"], "declared_dual_distance"), BoundProvenance.ASSERTED
            )
        return Code(code.ring, code.g, bound, dual_bound, label)

    # -- groups and searches -------------------------------------------------

    def group(self, ring: Optional[CodeRing] = None) -> IsometryGroup:
        ring = ring or self.ring
        if ring not in self._groups:
            self._groups[ring] = IsometryGroup(ring)
        return self._groups[ring]

    def search(self, c_label: str, seed_label: str, exclude_identity: bool = False) -> SearchReport:
        key = (c_label, seed_label, exclude_identity, self.config.mode)
        if key not in self._searches:
            c = self.code(c_label)
            self._searches[key] = supplement_search(
                c,
                self.code(seed_label).g,
                self.group(c.ring),
                exclude_identity=exclude_identity,
                mode=self.config.mode,
            )
        return self._searches[key]

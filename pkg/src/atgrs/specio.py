"""Loading code specs and search configs from structured text (JSON)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import AtgrsError, InvalidSpec
from .field import GF, field_from_descriptor
from .tgrs import CodeSpec


def _load(source) -> dict:
    if isinstance(source, dict):
        return source
    text = Path(source).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"{source}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise InvalidSpec(f"{source}: top level must be an object")
    return doc


def _need(doc: dict, key: str):
    if key not in doc:
        raise InvalidSpec(f"missing field '{key}'")
    return doc[key]


def _int_list(doc: dict, key: str) -> list[int]:
    val = _need(doc, key)
    if not isinstance(val, list) or not all(isinstance(x, int) for x in val):
        raise InvalidSpec(f"'{key}' must be a list of integers")
    return val


def load_field(doc: dict) -> GF:
    desc = _need(doc, "field")
    if not isinstance(desc, dict) or "p" not in desc:
        raise InvalidSpec("'field' must be an object with at least 'p'")
    try:
        return field_from_descriptor(desc)
    except AtgrsError as exc:
        raise InvalidSpec(f"field: {exc}") from None


def _elements(gf: GF, vals: list[int], key: str) -> list[int]:
    for x in vals:
        if not 0 <= x < gf.q:
            raise InvalidSpec(f"'{key}' entry {x} is outside [0, {gf.q})")
    return vals


def load_code_spec(source) -> CodeSpec:
    """``{"field": {...}, "n", "k", "alpha", "v" (optional), "eta"}``."""
    doc = _load(source)
    gf = load_field(doc)
    n, k = _need(doc, "n"), _need(doc, "k")
    if not isinstance(n, int) or not isinstance(k, int):
        raise InvalidSpec("'n' and 'k' must be integers")
    alpha = _elements(gf, _int_list(doc, "alpha"), "alpha")
    v = _elements(gf, _int_list(doc, "v"), "v") if "v" in doc else None
    eta = _need(doc, "eta")
    if not isinstance(eta, list) or not all(isinstance(r, list) for r in eta):
        raise InvalidSpec("'eta' must be a list of rows")
    for r in eta:
        _elements(gf, r, "eta")
    return CodeSpec(gf, n, k, alpha, eta, v)


def spec_to_dict(spec: CodeSpec) -> dict:
    return {
        "field": spec.gf.descriptor(),
        "n": spec.n,
        "k": spec.k,
        "alpha": list(spec.alpha),
        "v": list(spec.v),
        "eta": [list(r) for r in spec.eta],
    }


@dataclass
class SearchConfig:
    gf: GF
    n: int
    k: int
    alpha: list
    v: list | None
    support: list | None  # [(row, col)], 0-based
    max_weight: int | None
    mode: str = "exhaustive"
    samples: int = 100
    seed: int = 0
    novelty: list | None = None
    allow_zero: bool = False
    limit: int | None = None

    def to_dict(self) -> dict:
        return {
            "field": self.gf.descriptor(),
            "n": self.n,
            "k": self.k,
            "alpha": list(self.alpha),
            "v": None if self.v is None else list(self.v),
            "support": None if self.support is None else [list(p) for p in self.support],
            "max_weight": self.max_weight,
            "mode": self.mode,
            "samples": self.samples,
            "seed": self.seed,
            "novelty": self.novelty,
            "allow_zero": self.allow_zero,
            "limit": self.limit,
        }


def load_search_config(source) -> SearchConfig:
    doc = _load(source)
    gf = load_field(doc)
    n, k = _need(doc, "n"), _need(doc, "k")
    alpha = _elements(gf, _int_list(doc, "alpha"), "alpha")
    v = _elements(gf, _int_list(doc, "v"), "v") if doc.get("v") is not None else None
    # validates n, k, alpha, v together
    CodeSpec(gf, n, k, alpha, [[0] * (n - k) for _ in range(k)], v)
    support = doc.get("support")
    max_weight = doc.get("max_weight")
    if support is None and max_weight is None:
        raise InvalidSpec("give either 'support' or 'max_weight'")
    if support is not None:
        try:
            support = sorted({(int(r), int(c)) for r, c in support})
        except (TypeError, ValueError):
            raise InvalidSpec("'support' must be a list of [row, col] pairs") from None
        for r, c in support:
            if not (0 <= r < k and 0 <= c < n - k):
                raise InvalidSpec(f"support position {(r, c)} outside the {k} x {n - k} twist matrix")
    if max_weight is not None and (not isinstance(max_weight, int) or max_weight < 0):
        raise InvalidSpec("'max_weight' must be a non-negative integer")
    mode = doc.get("mode", "exhaustive")
    if mode not in ("exhaustive", "random"):
        raise InvalidSpec("'mode' must be 'exhaustive' or 'random'")
    novelty = doc.get("novelty")
    if novelty is not None:
        if isinstance(novelty, str):
            novelty = [novelty]
        allowed = {"condition-i", "condition-ii", "known-pattern", "neither"}
        if not set(novelty) <= allowed:
            raise InvalidSpec(f"'novelty' entries must be among {sorted(allowed)}")
    return SearchConfig(
        gf=gf, n=n, k=k, alpha=alpha, v=v, support=support, max_weight=max_weight,
        mode=mode, samples=int(doc.get("samples", 100)), seed=int(doc.get("seed", 0)),
        novelty=novelty, allow_zero=bool(doc.get("allow_zero", False)), limit=doc.get("limit"),
    )

"""Run configuration read from TOML or JSON."""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import InputError
from .linalg import RATIONALS, ExactField
from .objects import check_label
from .order import Kind, PosetSpec

SHIFT_LIMIT = 4
DEFAULT_POSET = PosetSpec(Kind.A, ("t0",), (-4, 4))


@dataclass(frozen=True)
class RunConfig:
    poset: PosetSpec = DEFAULT_POSET
    shift_range: tuple[int, int] = (-2, 2)
    field: ExactField = field(default=RATIONALS)
    seed: int = 0
    margin: int = 2

    def __post_init__(self):
        lo, hi = self.shift_range
        if not -SHIFT_LIMIT <= lo <= hi <= SHIFT_LIMIT:
            raise InputError(f"shift_range {self.shift_range} must lie within [-4, 4]")
        if self.margin < 1:
            raise InputError("margin must be at least 1")

    @property
    def shifts(self) -> range:
        return range(self.shift_range[0], self.shift_range[1] + 1)

    def with_overrides(self, **kw) -> "RunConfig":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


def parse_field(text: str) -> ExactField:
    try:
        return ExactField.parse(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def poset_from_mapping(doc: dict) -> PosetSpec:
    try:
        kind, labels, window = doc["kind"], doc["t_labels"], doc["z_window"]
    except KeyError as e:
        raise InputError(f"config is missing key {e.args[0]!r}") from None
    if kind not in ("A", "D"):
        raise InputError(f"kind must be 'A' or 'D', got {kind!r}")
    if not isinstance(labels, list) or not all(isinstance(t, str) for t in labels):
        raise InputError("t_labels must be an array of strings")
    for t in labels:
        check_label(t)
    if not (isinstance(window, list) and len(window) == 2 and all(isinstance(z, int) for z in window)):
        raise InputError("z_window must be [lo, hi]")
    return PosetSpec(Kind(kind), tuple(labels), tuple(window))


def config_from_mapping(doc: dict) -> RunConfig:
    kw: dict = {"poset": poset_from_mapping(doc)}
    if "shift_range" in doc:
        kw["shift_range"] = tuple(doc["shift_range"])
    if "field" in doc:
        kw["field"] = parse_field(doc["field"])
    for key in ("seed", "margin"):
        if key in doc:
            kw[key] = int(doc[key])
    return RunConfig(**kw)


def load_config(path: str | Path) -> RunConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError(f"cannot read config {path}: {e.strerror}") from None
    try:
        doc = json.loads(text) if path.suffix == ".json" else tomllib.loads(text)
    except (ValueError, tomllib.TOMLDecodeError) as e:
        raise InputError(f"cannot parse config {path}: {e}") from None
    return config_from_mapping(doc)

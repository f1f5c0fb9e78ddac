"""Symbolic indecomposables, derived objects, and their literal syntax.

Literal grammar::

    A[(t,z),(t,z)]@s    A1[(t,z)]@s    A2[(t,z)]@s    B[(t,z),(t,z)]@s

``@0`` may be omitted; a derived object is a ``+``-joined list, ``0`` when empty.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, ParseError, WindowExceeded
from .order import Kind, LPoint, PosetSpec, successor

KINDS = ("A", "A1", "A2", "B")
_KIND_RANK = {k: n for n, k in enumerate(KINDS)}


@dataclass(frozen=True)
class IndClass:
    """An indecomposable of the abelian category.

    ``i`` is None for the peripheral kinds A1/A2, which only carry ``j``.
    """

    kind: str
    j: LPoint
    i: LPoint | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown kind {self.kind!r}")
        if self.kind in ("A1", "A2"):
            if self.i is not None:
                raise InputError(f"{self.kind} takes a single point")
        elif self.i is None:
            raise InputError(f"{self.kind} needs two points")
        elif self.kind == "A" and not self.i <= self.j:
            raise InputError(f"A needs i <= j, got {self.i} > {self.j}")
        elif self.kind == "B" and not self.i < self.j:
            raise InputError(f"B needs i < j, got {self.i}, {self.j}")

    @property
    def sort_key(self) -> tuple:
        i = self.i if self.i is not None else self.j
        return (_KIND_RANK[self.kind], i, self.j)

    @property
    def presentation_points(self) -> tuple[LPoint, ...]:
        """The chain points a minimal projective presentation refers to."""
        if self.kind == "A":
            return (self.i, successor(self.j))
        if self.kind == "B":
            return (self.i, successor(self.i), successor(self.j))
        return (self.j, successor(self.j))

    def needs_d(self) -> bool:
        return self.kind != "A"

    def __repr__(self) -> str:
        if self.i is None:
            return f"{self.kind}{self.j!r}"
        return f"{self.kind}[{self.i!r},{self.j!r}]"


def A(i: LPoint, j: LPoint) -> IndClass:
    return IndClass("A", j, i)


def B(i: LPoint, j: LPoint) -> IndClass:
    return IndClass("B", j, i)


def A1(j: LPoint) -> IndClass:
    return IndClass("A1", j)


def A2(j: LPoint) -> IndClass:
    return IndClass("A2", j)


@dataclass(frozen=True)
class IndObj:
    cls: IndClass
    shift: int = 0

    def __getitem__(self, n: int) -> "IndObj":
        return IndObj(self.cls, self.shift + n)

    @property
    def kind(self) -> str:
        return self.cls.kind

    @property
    def sort_key(self) -> tuple:
        return (self.shift,) + self.cls.sort_key

    def __repr__(self) -> str:
        return f"{self.cls!r}@{self.shift}" if self.shift else repr(self.cls)


@dataclass(frozen=True)
class DObj:
    """A finite direct sum, stored in Krull-Schmidt normal form (sorted)."""

    summands: tuple[IndObj, ...] = ()

    @classmethod
    def of(cls, items: Iterable[IndObj]) -> "DObj":
        return cls(tuple(sorted(items, key=lambda o: o.sort_key)))

    def __getitem__(self, n: int) -> "DObj":
        return DObj(tuple(o[n] for o in self.summands))

    def __add__(self, other: "DObj") -> "DObj":
        return DObj.of(self.summands + other.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def counts(self) -> Counter:
        return Counter(self.summands)

    def __repr__(self) -> str:
        return " + ".join(map(repr, self.summands)) or "0"


def check_kind(spec: PosetSpec, cls: IndClass) -> None:
    if cls.needs_d() and spec.kind is not Kind.D:
        raise InputError(f"{cls.kind} objects only exist for kind D")


def in_window(spec: PosetSpec, cls: IndClass, policy: str = "presentation") -> bool:
    """Window membership. ``presentation`` also demands the presentation points fit."""
    if cls.needs_d() and spec.kind is not Kind.D:
        return False
    pts = cls.presentation_points if policy == "presentation" else tuple(
        p for p in (cls.i, cls.j) if p is not None)
    return all(spec.contains(p) for p in pts)


def require_window(spec: PosetSpec, obj: IndObj | IndClass) -> None:
    cls = obj.cls if isinstance(obj, IndObj) else obj
    check_kind(spec, cls)
    if not in_window(spec, cls):
        raise WindowExceeded(f"{format_obj(spec, obj)} needs points outside window {spec.z_window}")


# -- literals -----------------------------------------------------------------

_POINT = r"\(\s*([^,()\s\[\]@+]+)\s*,\s*([+-]?\d+)\s*\)"
_LIT = re.compile(
    rf"^\s*(A1|A2|A|B)\s*\[\s*{_POINT}\s*(?:,\s*{_POINT}\s*)?\]\s*(?:@\s*([+-]?\d+))?\s*$")
_RESERVED = set(",()[]@+ \t")


def check_label(label: str) -> None:
    if not label or _RESERVED & set(label):
        raise InputError(f"t label {label!r} is empty or uses one of ,()[]@+ or whitespace")


def parse_obj(spec: PosetSpec, text: str) -> IndObj:
    m = _LIT.match(text)
    if not m:
        raise ParseError(f"cannot parse object literal {text!r}")
    kind, t1, z1, t2, z2, s = m.groups()
    p1 = LPoint(spec.t_index(t1), int(z1))
    p2 = LPoint(spec.t_index(t2), int(z2)) if t2 is not None else None
    if kind in ("A1", "A2"):
        if p2 is not None:
            raise ParseError(f"{kind} takes one point: {text!r}")
        cls = IndClass(kind, p1)
    else:
        if p2 is None:
            raise ParseError(f"{kind} takes two points: {text!r}")
        cls = IndClass(kind, p2, p1)
    check_kind(spec, cls)
    return IndObj(cls, int(s) if s else 0)


def parse_dobj(spec: PosetSpec, text: str) -> DObj:
    if text.strip() == "0":
        return DObj()
    return DObj.of(parse_obj(spec, part) for part in text.split("+"))


def _fmt_point(spec: PosetSpec, p: LPoint) -> str:
    return f"({spec.t_labels[p.t]},{p.z})"


def format_obj(spec: PosetSpec, obj: IndObj | IndClass) -> str:
    o = obj if isinstance(obj, IndObj) else IndObj(obj)
    c = o.cls
    if c.i is None:
        body = f"{c.kind}[{_fmt_point(spec, c.j)}]"
    else:
        body = f"{c.kind}[{_fmt_point(spec, c.i)},{_fmt_point(spec, c.j)}]"
    return body + (f"@{o.shift}" if o.shift else "")


def format_dobj(spec: PosetSpec, d: DObj) -> str:
    return " + ".join(format_obj(spec, o) for o in d.summands) or "0"

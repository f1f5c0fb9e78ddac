"""Locally discrete linear orders L = T x Z, the poset D_L, and finite truncations."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterator, Sequence, Union

from .errors import InputError, WindowExceeded


class Kind(str, Enum):
    A = "A"
    D = "D"


@dataclass(frozen=True, order=True)
class LPoint:
    """A point (t, z) of L; dataclass ordering is the lexicographic order."""

    t: int
    z: int

    def __repr__(self) -> str:
        return f"({self.t},{self.z})"


@dataclass(frozen=True)
class QPoint:
    """One of the two incomparable minimal points of D_L."""

    which: int

    def __post_init__(self):
        if self.which not in (1, 2):
            raise ValueError("QPoint.which must be 1 or 2")

    def __repr__(self) -> str:
        return f"Q{self.which}"


Q1 = QPoint(1)
Q2 = QPoint(2)
DPoint = Union[QPoint, LPoint]


def successor(p: LPoint) -> LPoint:
    return LPoint(p.t, p.z + 1)


def predecessor(p: LPoint) -> LPoint:
    return LPoint(p.t, p.z - 1)


def leq(a: DPoint, b: DPoint) -> bool:
    if isinstance(a, QPoint):
        return a == b or isinstance(b, LPoint)
    if isinstance(b, QPoint):
        return False
    return a <= b


@dataclass(frozen=True)
class PosetSpec:
    kind: Kind
    t_labels: tuple[str, ...]
    z_window: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "t_labels", tuple(self.t_labels))
        object.__setattr__(self, "z_window", tuple(self.z_window))
        if not self.t_labels:
            raise InputError("t_labels must be nonempty")
        if len(set(self.t_labels)) != len(self.t_labels):
            raise InputError(f"duplicate t_labels in {self.t_labels}")
        lo, hi = self.z_window
        if lo > hi:
            raise InputError(f"z_window {self.z_window} has lo > hi")

    @property
    def lo(self) -> int:
        return self.z_window[0]

    @property
    def hi(self) -> int:
        return self.z_window[1]

    @property
    def n_t(self) -> int:
        return len(self.t_labels)

    def t_index(self, label: str) -> int:
        try:
            return self.t_labels.index(label)
        except ValueError:
            raise InputError(f"unknown t label {label!r}; known: {list(self.t_labels)}") from None

    def contains(self, p: DPoint) -> bool:
        if isinstance(p, QPoint):
            return self.kind is Kind.D
        return 0 <= p.t < self.n_t and self.lo <= p.z <= self.hi

    def points(self) -> Iterator[LPoint]:
        for t in range(self.n_t):
            for z in range(self.lo, self.hi + 1):
                yield LPoint(t, z)

    def widened(self, margin: int) -> "PosetSpec":
        return PosetSpec(self.kind, self.t_labels, (self.lo - margin, self.hi + margin))


@dataclass(frozen=True, eq=False)
class FinPoset:
    """A finite poset given by its Hasse diagram; vertices are indices into ``origin``."""

    origin: tuple[DPoint, ...]
    hasse_arrows: tuple[tuple[int, int], ...]
    spec: PosetSpec | None = None
    margin: int | None = None

    @property
    def vertices(self) -> range:
        return range(len(self.origin))

    @cached_property
    def index(self) -> dict:
        return {p: v for v, p in enumerate(self.origin)}

    @cached_property
    def in_arrows(self) -> tuple[tuple[int, ...], ...]:
        ins: list[list[int]] = [[] for _ in self.origin]
        for a, (u, v) in enumerate(self.hasse_arrows):
            ins[v].append(a)
        return tuple(tuple(x) for x in ins)

    @cached_property
    def topo_order(self) -> tuple[int, ...]:
        indeg = [len(x) for x in self.in_arrows]
        out: list[list[int]] = [[] for _ in self.origin]
        for u, v in self.hasse_arrows:
            out[u].append(v)
        ready = [v for v in self.vertices if indeg[v] == 0]
        order = []
        while ready:
            u = ready.pop()
            order.append(u)
            for v in out[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    ready.append(v)
        if len(order) != len(self.origin):
            raise InputError("Hasse diagram has a cycle")
        return tuple(order)

    @cached_property
    def below(self) -> tuple[frozenset, ...]:
        """below[v] = set of u with u <= v (reflexive)."""
        res: list[frozenset] = [frozenset()] * len(self.origin)
        for v in self.topo_order:
            acc = {v}
            for a in self.in_arrows[v]:
                acc |= res[self.hasse_arrows[a][0]]
            res[v] = frozenset(acc)
        return tuple(res)

    def le(self, u: int, v: int) -> bool:
        return u in self.below[v]

    def path_arrows(self, u: int, v: int) -> list[int]:
        """Hasse arrows along a path u -> v (the unique one when the diagram is a forest)."""
        if not self.le(u, v):
            raise ValueError(f"{self.origin[u]} is not below {self.origin[v]}")
        path = []
        while v != u:
            a = next(a for a in self.in_arrows[v] if self.le(u, self.hasse_arrows[a][0]))
            path.append(a)
            v = self.hasse_arrows[a][0]
        return path[::-1]

    def key(self) -> tuple:
        return (self.origin, self.hasse_arrows)


def is_forest(p: FinPoset) -> bool:
    """Every closed interval of the order is a chain."""
    n = len(p.origin)
    for u in range(n):
        for v in range(n):
            if u == v or not p.le(u, v):
                continue
            inside = [w for w in range(n) if p.le(u, w) and p.le(w, v)]
            for a in inside:
                for b in inside:
                    if not (p.le(a, b) or p.le(b, a)):
                        return False
    return True


def chain_poset(points: Sequence[DPoint]) -> FinPoset:
    return FinPoset(tuple(points), tuple((k, k + 1) for k in range(len(points) - 1)))


def truncate(spec: PosetSpec, support_lo: LPoint, support_hi: LPoint, margin: int) -> FinPoset:
    """Finite fragment around [support_lo, support_hi] extended by ``margin`` steps per fiber."""
    if margin < 0:
        raise InputError("margin must be nonnegative")
    if support_hi < support_lo:
        raise InputError(f"support {support_lo}..{support_hi} is empty")
    for p in (support_lo, support_hi):
        if not 0 <= p.t < spec.n_t:
            raise WindowExceeded(f"fiber index {p.t} outside T")
    zlo = min(support_lo.z, support_hi.z) - margin
    zhi = max(support_lo.z, support_hi.z) + margin
    if zlo < spec.lo or zhi > spec.hi:
        raise WindowExceeded(
            f"margin {margin} around z in [{zlo + margin}, {zhi - margin}] leaves window {spec.z_window}")
    chain = [LPoint(t, z) for t in range(support_lo.t, support_hi.t + 1) for z in range(zlo, zhi + 1)]
    arrows = [(k, k + 1) for k in range(len(chain) - 1)]
    origin: list[DPoint] = list(chain)
    if spec.kind is Kind.D:
        origin = [Q1, Q2] + chain
        arrows = [(0, 2), (1, 2)] + [(a + 2, b + 2) for a, b in arrows]
    return FinPoset(tuple(origin), tuple(arrows), spec, margin)


def host_truncation(spec: PosetSpec, margin: int) -> FinPoset:
    """The truncation covering the whole window of ``spec`` plus ``margin`` on both sides."""
    wide = spec.widened(margin)
    return truncate(wide, LPoint(0, spec.lo), LPoint(spec.n_t - 1, spec.hi), margin)

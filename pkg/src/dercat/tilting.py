"""Tilting sets generated by a quasi-simple, and their poset shape."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import NotQuasiSimple, WindowExceeded
from .model import (arrows_in, component_of, enumerate_window, hom_dim, is_partial_tilting,
                    is_quasi_simple, tau)
from .objects import A1, A2, IndObj, format_obj, in_window
from .order import Kind, PosetSpec


class Shape(str, Enum):
    A = "AShape"
    D = "DShape"


@dataclass(frozen=True)
class TiltingSet:
    source: IndObj
    elements: tuple[IndObj, ...]
    shape: Shape
    peripheral_pair: tuple[IndObj, IndObj] | None = None

    def __contains__(self, x: IndObj) -> bool:
        return x in self.elements

    def to_json(self, spec: PosetSpec) -> dict:
        pair = self.peripheral_pair
        return {
            "source": format_obj(spec, self.source),
            "elements": [format_obj(spec, x) for x in self.elements],
            "shape": self.shape.value,
            "peripheral_pair": [format_obj(spec, q) for q in pair] if pair else None,
        }


def _require_quasi_simple(s: IndObj) -> None:
    if not is_quasi_simple(s):
        raise NotQuasiSimple(f"{s!r} is not quasi-simple")


def peripheral_targets(s: IndObj, kind: Kind) -> tuple[IndObj, IndObj] | None:
    """The two peripheral objects of a ZD_inf component that s maps to, if any."""
    _require_quasi_simple(s)
    if kind is not Kind.D:
        return None
    p = s.cls.j
    pair = (IndObj(A1(p), s.shift), IndObj(A2(p), s.shift))
    return pair if all(hom_dim(s, q) for q in pair) else None


def member(s: IndObj, x: IndObj, pair: tuple[IndObj, IndObj] | None) -> bool:
    if not hom_dim(s, x):
        return False
    return pair is None or any(hom_dim(x, q) for q in pair)


def tilting_set(s: IndObj, spec: PosetSpec) -> TiltingSet:
    """S_t restricted to the window, sorted by the hom-order."""
    _require_quasi_simple(s)
    end = tau(s)[1]
    for x in (s, end):
        if not in_window(spec, x.cls):
            raise WindowExceeded(f"{x!r} lies outside the window")
    pair = peripheral_targets(s, spec.kind)
    pool = enumerate_window(spec, (s.shift, s.shift + 1))
    elems = [x for x in pool if member(s, x, pair)]
    below = {x: sum(1 for y in elems if y != x and hom_dim(y, x)) for x in elems}
    elems.sort(key=lambda x: (below[x], x.sort_key))
    ts = TiltingSet(s, tuple(elems), Shape.D if pair else Shape.A, pair)
    if not is_partial_tilting(ts.elements):
        raise AssertionError(f"tilting set of {s!r} is not partial tilting")
    return ts


def st_index(ts: TiltingSet, x: IndObj) -> int | None:
    try:
        return ts.elements.index(x)
    except ValueError:
        return None


def blocks(ts: TiltingSet) -> list[tuple[str, list[IndObj]]]:
    """Consecutive runs of elements lying in one component; the peripheral pair stands alone."""
    out: list[tuple[str, list[IndObj]]] = []
    pair = set(ts.peripheral_pair or ())
    for x in ts.elements:
        tag = "peripheral" if x in pair else component_of(x).kind
        if out and out[-1][0] == tag and component_of(out[-1][1][-1]) == component_of(x):
            out[-1][1].append(x)
        else:
            out.append((tag, [x]))
    return out


# -- witnesses ------------------------------------------------------------------------

def shape_violations(ts: TiltingSet) -> list[str]:
    """Empty iff the hom-order has the declared shape."""
    bad = []
    n = len(ts.elements)
    chain = ts.elements if ts.shape is Shape.A else ts.elements[:-2]
    for a in range(len(chain)):
        for b in range(a + 1, len(chain)):
            x, y = chain[a], chain[b]
            if not hom_dim(x, y) or hom_dim(y, x):
                bad.append(f"{x!r} and {y!r} are not ordered")
    if ts.shape is Shape.D:
        q1, q2 = ts.elements[-2:]
        if (q1, q2) != ts.peripheral_pair:
            bad.append("peripheral pair is not at the end")
        if hom_dim(q1, q2) or hom_dim(q2, q1):
            bad.append("peripheral pair is comparable")
        bad += [f"{x!r} misses the pair" for x in chain if not (hom_dim(x, q1) and hom_dim(x, q2))]
    elif n and ts.elements[-1] != tau(ts.source)[1]:
        bad.append("last element is not tau(S)[1]")
    if n and ts.elements[0] != ts.source:
        bad.append("first element is not S")
    return bad


def interval_violations(ts: TiltingSet, spec: PosetSpec) -> list[IndObj]:
    """Window objects where S_t and the hom-interval [S, tau S[1]] disagree."""
    s, end = ts.source, tau(ts.source)[1]
    pool = enumerate_window(spec, (s.shift - 1, s.shift, s.shift + 1, s.shift + 2))
    return [x for x in pool
            if (x in ts) != bool(hom_dim(s, x) and hom_dim(x, end))
            or (x in ts) != bool(hom_dim(s, x))]


def discreteness_violations(ts: TiltingSet) -> list[IndObj]:
    """Non-minimal elements with no predecessor in S_t inside their AR middle term."""
    return [x for x in ts.elements[1:]
            if not any(member(ts.source, p, ts.peripheral_pair) and hom_dim(p, x)
                       for p in arrows_in(x))]


def gap_violations(ts: TiltingSet) -> list[tuple[IndObj, IndObj]]:
    """Consecutive elements with a third element strictly between them."""
    chain = ts.elements if ts.shape is Shape.A else ts.elements[:-1]
    out = []
    for x, y in zip(chain, chain[1:]):
        if any(z not in (x, y) and hom_dim(x, z) and hom_dim(z, y) for z in ts.elements):
            out.append((x, y))
    return out


def cone_closure(seeds: Iterable[IndObj], targets: Iterable[IndObj], ws, shifts: Iterable[int],
                 rounds: int = 3) -> set[IndObj]:
    """Targets reached by closing the seeds under shifts, cones and summands."""
    shifts = set(shifts)
    want = set(targets)
    known = {x[k] for x in seeds for k in range(-4, 5) if x.shift + k in shifts}
    for _ in range(rounds):
        if want <= known:
            break
        new = set()
        for p in known:
            for q in known:
                if q.shift - p.shift in (0, 1) and ws.hom_dim(p, q) == 1:
                    cone = ws.cone(p, q)
                    new |= {z[k] for z in cone.summands for k in range(-4, 5) if z.shift + k in shifts}
        if new <= known:
            break
        known |= new
    return want & known

"""Probing objects and components by the quasi-simples that map into them.

Everything here runs on the closed-form Hom rules only; the oracle is a
separate witness used by the tests.
"""
from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Iterable

from .errors import Ambiguous, InputError, WindowExceeded
from .model import ComponentId, component_of, hom_dim, is_quasi_simple
from .objects import A, A1, A2, B, DObj, IndClass, IndObj, in_window
from .order import Kind, LPoint, PosetSpec, Q1, Q2, predecessor, successor

ProbeSet = frozenset  # of quasi-simple IndObj


def _near(c: IndClass) -> set[LPoint]:
    pts = {p for p in (c.i, c.j) if p is not None}
    return {q for p in pts for q in (predecessor(p), p, successor(p))}


def phi_o(x: IndObj, spec: PosetSpec | None = None) -> ProbeSet:
    """Quasi-simples S with Hom(S, x) != 0."""
    found = frozenset(
        S for z in _near(x.cls) for n in (x.shift - 1, x.shift)
        for S in (IndObj(A(z, z), n),) if hom_dim(S, x))
    if spec is not None:
        outside = [S for S in found if not in_window(spec, S.cls)]
        if outside:
            raise WindowExceeded(f"probes {outside} of {x!r} leave the window")
    return found


_REPRESENTATIVE = {
    "Wing": lambda c: A(LPoint(c.t, 0), LPoint(c.t, 1)),
    "BandA": lambda c: A(LPoint(c.t, 0), LPoint(c.t2, 0)),
    "DWing": lambda c: B(LPoint(c.t, 0), LPoint(c.t, 1)),
    "BandB": lambda c: B(LPoint(c.t, 0), LPoint(c.t2, 0)),
}


def phi_c(c: ComponentId) -> frozenset:
    """Wings whose quasi-simples map into the component, read off a representative."""
    rep = IndObj(_REPRESENTATIVE[c.kind](c), c.shift)
    return frozenset(component_of(S) for S in phi_o(rep))


def identify(probes: Iterable[IndObj], kind: Kind = Kind.D) -> frozenset:
    """All indecomposables whose probe set is exactly ``probes``."""
    probes = list(probes)
    ps = frozenset(probes)
    if len(ps) != len(probes):
        return frozenset()
    if not ps or not all(is_quasi_simple(S) for S in ps):
        raise InputError("probe sets consist of quasi-simples only")
    cands: list[IndObj] = []
    items = sorted(ps, key=lambda o: o.sort_key)
    if len(items) == 1 and kind is Kind.D:
        S = items[0]
        cands = [IndObj(A1(S.cls.j), S.shift), IndObj(A2(S.cls.j), S.shift)]
    elif len(items) == 2:
        lo, hi = items
        if hi.shift == lo.shift + 1:
            i, j = successor(lo.cls.j), hi.cls.j
            if i <= j:
                cands = [IndObj(A(i, j), hi.shift)]
        elif hi.shift == lo.shift and kind is Kind.D:
            i, j = sorted((lo.cls.j, hi.cls.j))
            if i < j:
                cands = [IndObj(B(i, j), lo.shift)]
    return frozenset(x for x in cands if phi_o(x) == ps)


# -- cones by probe bookkeeping ---------------------------------------------------

def _dim_at(c: IndClass, p) -> int:
    if c.kind == "A":
        return int(isinstance(p, LPoint) and c.i <= p <= c.j)
    if c.kind in ("A1", "A2"):
        if not isinstance(p, LPoint):
            return int(p == (Q1 if c.kind == "A1" else Q2))
        return int(p <= c.j)
    if not isinstance(p, LPoint):
        return 1
    return 2 if p <= c.i else int(p <= c.j)


def _k0(objs: Iterable[IndObj], points) -> tuple:
    """Class in the Grothendieck group, evaluated on sample points."""
    objs = list(objs)
    return tuple(sum((-1) ** o.shift * _dim_at(o.cls, p) for o in objs) for p in points)


def _sample_points(objs: Iterable[IndObj]) -> list:
    pts = set()
    for o in objs:
        pts |= _near(o.cls)
    low = min(pts)
    return [Q1, Q2, LPoint(low.t, low.z - 1)] + sorted(pts)


def _survivors(x: IndObj, y: IndObj) -> tuple[Counter, bool]:
    """Probes of the middle term M of y -> M -> x -> y[1], and whether any cancelled."""
    out: Counter = Counter()
    cancelled = False
    for S in phi_o(x):
        t = hom_dim(S, y[1])
        if t > 1:
            raise Ambiguous(f"Hom({S!r}, {y[1]!r}) = {t}")
        if t:
            cancelled = True  # S -> x -> y[1] is nonzero, S does not lift to M
        else:
            out[S] += 1
    for S in phi_o(y):
        t = hom_dim(S, x[-1])
        if t > 1 or hom_dim(x[-1], y) > 1:
            raise Ambiguous(f"Hom({S!r}, {x[-1]!r}) = {t}")
        if t and hom_dim(S, y):
            cancelled = True  # S -> y factors through x[-1] -> y
        else:
            out[S] += 1
    return out, cancelled


def _partitions(items: list) -> Iterable[list[tuple]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for sub in _partitions(rest):
        yield [(head,)] + sub
    for k in range(len(rest)):
        for sub in _partitions(rest[:k] + rest[k + 1:]):
            yield [(head, rest[k])] + sub


def cone_by_probing(x: IndObj, y: IndObj, kind: Kind = Kind.A) -> DObj:
    """Middle term of the non-split triangle y -> M -> x -> y[1], from probes alone."""
    if hom_dim(x, y[1]) != 1:
        raise InputError(f"needs Hom({x!r}, {y[1]!r}) of dimension 1")
    if x.kind in ("A1", "A2") or y.kind in ("A1", "A2"):
        raise InputError("endpoints must not be peripheral objects of a ZD_inf component")
    probes, cancelled = _survivors(x, y)
    items = sorted(probes.elements(), key=lambda o: o.sort_key)
    split = DObj.of([x, y])
    results = set()
    for blocks in _partitions(items):
        fibers = [sorted(identify(b, kind), key=lambda o: o.sort_key) for b in blocks]
        if any(not f for f in fibers):
            continue
        for choice in product(*fibers):
            m = DObj.of(choice)
            if m == split and not cancelled:
                continue  # reproduces x + y verbatim: connecting map would vanish
            pts = _sample_points(list(m.summands) + [x, y])
            if _k0(m.summands, pts) != _k0([x, y], pts):
                continue
            # a summand missed by y -> M or by M -> x would split the triangle
            if not all(hom_dim(y, n) and hom_dim(n, x) for n in m.summands):
                continue
            results.add(m)
    if len(results) != 1:
        raise Ambiguous(f"{len(results)} probe groupings survive for {x!r}, {y!r}")
    return results.pop()

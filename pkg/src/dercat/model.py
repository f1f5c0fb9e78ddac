"""Closed-form derived category of rep^cfp(A_L) and rep^cfp(D_L).

The category is hereditary, so Hom(X[m], Y[n]) is Hom(X, Y) when n = m,
Ext^1(X, Y) when n = m + 1, and zero otherwise. Both pieces are closed-form
functions of the endpoints, checked against the oracle by the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import DifferentComponents, InputError
from .objects import A, A1, A2, B, DObj, IndClass, IndObj, in_window, require_window
from .order import Kind, LPoint, PosetSpec, predecessor, successor

Succ = Callable[[LPoint], LPoint]


def _b_dim(v: LPoint, c: LPoint, d: LPoint) -> int:
    """Dimension of B(c, d) at a chain point."""
    return 2 if v <= c else (1 if v <= d else 0)


def _bb_rank(a: LPoint, b: LPoint, c: LPoint, d: LPoint, succ: Succ) -> int:
    """Rank of the presentation map of B(a, b) evaluated on B(c, d)."""
    a1 = succ(a)
    if a1 <= c:
        return 2
    if a1 <= d:
        return 1 + (succ(b) <= d)
    return 0


@dataclass(frozen=True)
class ClosedFormHom:
    """Hom and Ext^1 between indecomposables, as endpoint inequalities.

    ``ext_succ`` is the successor used inside the Ext rules; replacing it is
    how the negative control builds a deliberately wrong rule set.
    """

    ext_succ: Succ = successor

    def hom0(self, x: IndClass, y: IndClass) -> int:
        kx, ky = x.kind, y.kind
        if kx == "A":
            a, b = x.i, x.j
            if ky == "A":
                return int(y.i <= a <= y.j <= b)
            if ky in ("A1", "A2"):
                return int(a <= y.j <= b)
            return _b_dim(a, y.i, y.j) - _b_dim(successor(b), y.i, y.j)
        if kx in ("A1", "A2"):
            if ky == "A" or (ky != "B" and ky != kx):
                return 0
            return int(y.j <= x.j)
        # x is B
        if ky == "A":
            return 0
        if ky in ("A1", "A2"):
            return int(y.j <= x.i)
        return 2 - _bb_rank(x.i, x.j, y.i, y.j, successor)

    def ext1(self, x: IndClass, y: IndClass) -> int:
        s = self.ext_succ
        kx, ky = x.kind, y.kind
        if kx == "A":
            if ky == "A":
                return int(s(x.i) <= y.i <= s(x.j) <= y.j)
            return 0
        if kx in ("A1", "A2"):
            a1 = s(x.j)
            if ky == "A":
                return int(y.i <= a1 <= y.j)
            if ky == kx:
                return 0
            if ky in ("A1", "A2"):
                return int(a1 <= y.j)
            return int(a1 <= y.i)
        a1, b1 = s(x.i), s(x.j)
        if ky == "A":
            return int(y.i <= a1 <= y.j) + int(y.i <= b1 <= y.j)
        if ky in ("A1", "A2"):
            return int(b1 <= y.j)
        return _b_dim(a1, y.i, y.j) + _b_dim(b1, y.i, y.j) - _bb_rank(x.i, x.j, y.i, y.j, s)

    def hom_dim(self, x: IndObj, y: IndObj) -> int:
        d = y.shift - x.shift
        if d == 0:
            return self.hom0(x.cls, y.cls)
        if d == 1:
            return self.ext1(x.cls, y.cls)
        return 0


RULES = ClosedFormHom()


def hom_dim(x: IndObj, y: IndObj) -> int:
    return RULES.hom_dim(x, y)


def hom_dobj(x: DObj, y: DObj) -> int:
    return sum(hom_dim(a, b) for a in x.summands for b in y.summands)


# -- translate, Serre functor, AR triangles -----------------------------------------------

def tau_cls(c: IndClass) -> IndClass:
    if c.kind == "A":
        return A(successor(c.i), successor(c.j))
    if c.kind == "B":
        return B(successor(c.i), successor(c.j))
    # the translate swaps the two peripheral rows
    return (A2 if c.kind == "A1" else A1)(successor(c.j))


def tau_inv_cls(c: IndClass) -> IndClass:
    if c.kind == "A":
        return A(predecessor(c.i), predecessor(c.j))
    if c.kind == "B":
        return B(predecessor(c.i), predecessor(c.j))
    return (A2 if c.kind == "A1" else A1)(predecessor(c.j))


def tau(x: IndObj) -> IndObj:
    return IndObj(tau_cls(x.cls), x.shift)


def tau_inv(x: IndObj) -> IndObj:
    return IndObj(tau_inv_cls(x.cls), x.shift)


def serre(x: IndObj) -> IndObj:
    return IndObj(tau_cls(x.cls), x.shift + 1)


def middle_cls(c: IndClass) -> list[IndClass]:
    """Middle term of the AR sequence ending at c, in mesh order."""
    if c.kind == "A":
        i1 = successor(c.i)
        out = [A(i1, c.j)] if i1 <= c.j else []
        return out + [A(c.i, successor(c.j))]
    if c.kind in ("A1", "A2"):
        return [B(c.j, successor(c.j))]
    i1, j1 = successor(c.i), successor(c.j)
    if i1 == c.j:
        return [A1(c.j), A2(c.j), B(c.i, j1)]
    return [B(i1, c.j), B(c.i, j1)]


@dataclass(frozen=True)
class Triangle:
    x: DObj
    y: DObj
    z: DObj
    hom_dims: tuple[int, int, int]


def ar_triangle(z: IndObj, spec: PosetSpec | None = None) -> Triangle:
    """tau z -> M -> z -> tau z [1]; hom_dims are dim Hom along the three maps."""
    t = tau(z)
    mid = DObj.of(IndObj(c, z.shift) for c in middle_cls(z.cls))
    if spec is not None:
        for o in (t, z, *mid.summands):
            require_window(spec, o)
    dims = (hom_dobj(DObj((t,)), mid), hom_dobj(mid, DObj((z,))), hom_dim(z, t[1]))
    return Triangle(DObj((t,)), mid, DObj((z,)), dims)


def arrows_out(x: IndObj) -> list[IndObj]:
    return [IndObj(c, x.shift) for c in middle_cls(tau_inv_cls(x.cls))]


def arrows_in(x: IndObj) -> list[IndObj]:
    return [IndObj(c, x.shift) for c in middle_cls(x.cls)]


def is_peripheral(x: IndObj) -> bool:
    return len(middle_cls(x.cls)) == 1


def is_quasi_simple(x: IndObj) -> bool:
    return x.kind == "A" and x.cls.i == x.cls.j


# -- components -----------------------------------------------------------------------

SHAPES = {"Wing": "ZA_inf", "BandA": "ZA_inf_inf", "BandB": "ZA_inf_inf", "DWing": "ZD_inf"}


@dataclass(frozen=True, order=True)
class ComponentId:
    kind: str
    t: int
    shift: int
    t2: int | None = None

    def __post_init__(self):
        if self.kind not in SHAPES:
            raise InputError(f"unknown component kind {self.kind!r}")
        banded = self.kind in ("BandA", "BandB")
        if banded != (self.t2 is not None) or (banded and not self.t < self.t2):
            raise InputError(f"{self.kind} needs {'t < t2' if banded else 'a single t'}")

    @property
    def shape(self) -> str:
        return SHAPES[self.kind]

    def shifted(self, n: int) -> "ComponentId":
        return ComponentId(self.kind, self.t, self.shift + n, self.t2)


def component_of(x: IndObj) -> ComponentId:
    c = x.cls
    if c.kind in ("A1", "A2"):
        return ComponentId("DWing", c.j.t, x.shift)
    if c.i.t == c.j.t:
        return ComponentId("Wing" if c.kind == "A" else "DWing", c.j.t, x.shift)
    return ComponentId("BandA" if c.kind == "A" else "BandB", c.i.t, x.shift, c.j.t)


def component_members(spec: PosetSpec, comp: ComponentId, policy: str = "support") -> list[IndObj]:
    """Objects of ``comp`` inside the window, in a deterministic order."""
    t, t2 = comp.t, comp.t2 if comp.t2 is not None else comp.t
    zs = range(spec.lo, spec.hi + 1)
    out: list[IndClass] = []
    if comp.kind in ("Wing", "BandA"):
        out = [A(LPoint(t, a), LPoint(t2, b)) for a in zs for b in zs if LPoint(t, a) <= LPoint(t2, b)]
    else:
        if comp.kind == "DWing":
            out = [k(LPoint(t, z)) for z in zs for k in (A1, A2)]
        out += [B(LPoint(t, a), LPoint(t2, b)) for a in zs for b in zs if LPoint(t, a) < LPoint(t2, b)]
    if comp.kind in ("DWing", "BandB") and spec.kind is not Kind.D:
        return []
    return [IndObj(c, comp.shift) for c in sorted(out, key=lambda c: c.sort_key)
            if in_window(spec, c, policy) and 0 <= max(t, t2) < spec.n_t]


def mesh_level(x: IndObj) -> int:
    """Decreases by exactly one along every arrow of a component."""
    c = x.cls
    if c.i is None:
        return 2 * c.j.z
    return c.i.z + c.j.z


def sectional_paths(x: IndObj, y: IndObj, limit: int | None = None) -> list[list[IndObj]]:
    """All sectional paths x -> ... -> y (no step returns along tau)."""
    if component_of(x) != component_of(y):
        raise DifferentComponents(f"{x!r} and {y!r} lie in different components")
    target = mesh_level(y)
    found: list[list[IndObj]] = []

    def walk(path: list[IndObj]) -> None:
        cur = path[-1]
        lvl = mesh_level(cur)
        if lvl == target:
            if cur == y:
                found.append(list(path))
            return
        for nxt in arrows_out(cur):
            if len(path) >= 2 and tau(nxt) == path[-2]:
                continue
            path.append(nxt)
            walk(path)
            path.pop()

    if mesh_level(x) >= target:
        walk([x])
    return found


def sectional_path(x: IndObj, y: IndObj) -> list[IndObj] | None:
    paths = sectional_paths(x, y)
    if len(paths) > 1:
        raise RuntimeError(f"{len(paths)} sectional paths from {x!r} to {y!r}")
    return paths[0] if paths else None


# -- windows and partial tilting ------------------------------------------------------------

def enumerate_classes(spec: PosetSpec, policy: str = "presentation") -> list[IndClass]:
    pts = list(spec.points())
    out: list[IndClass] = [A(i, j) for i in pts for j in pts if i <= j]
    if spec.kind is Kind.D:
        out += [k(j) for j in pts for k in (A1, A2)]
        out += [B(i, j) for i in pts for j in pts if i < j]
    return sorted((c for c in out if in_window(spec, c, policy)), key=lambda c: c.sort_key)


def enumerate_window(spec: PosetSpec, shifts: Iterable[int] = (0,), policy: str = "presentation") -> list[IndObj]:
    classes = enumerate_classes(spec, policy)
    return [IndObj(c, s) for s in sorted(set(shifts)) for c in classes]


def is_partial_tilting(objs: Iterable[IndObj], reach: int = 4) -> bool:
    """No nonzero Hom(p, q[z]) for z != 0, over relative shifts up to ``reach``."""
    s = list(objs)
    for p in s:
        for q in s:
            for z in range(-reach, reach + 1):
                if z and hom_dim(p, q[z]):
                    return False
    return True


def quasi_simples(spec: PosetSpec, shifts: Iterable[int] = (0,)) -> list[IndObj]:
    return [IndObj(A(p, p), s) for s in sorted(set(shifts)) for p in spec.points()
            if in_window(spec, A(p, p))]

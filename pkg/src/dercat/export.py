"""AR components rendered as DOT or JSON graphs."""
from __future__ import annotations

import re

from .errors import ParseError
from .model import SHAPES, ComponentId, arrows_out, component_members, tau
from .objects import format_obj
from .order import PosetSpec

_COMPONENT = re.compile(r"^\s*(\w+)\s*\(\s*([^,()\s]+)\s*(?:,\s*([^,()\s]+)\s*)?,\s*([+-]?\d+)\s*\)\s*$")


def parse_component(spec: PosetSpec, text: str) -> ComponentId:
    """``Wing(t0,0)``, ``DWing(t0,1)``, ``BandA(t0,t1,0)`` or ``BandB(t0,t1,-1)``."""
    m = _COMPONENT.match(text)
    if not m or m.group(1) not in SHAPES:
        raise ParseError(f"cannot parse component {text!r}")
    kind, t, t2, shift = m.groups()
    return ComponentId(kind, spec.t_index(t), int(shift),
                       spec.t_index(t2) if t2 is not None else None)


def format_component(spec: PosetSpec, c: ComponentId) -> str:
    ts = [spec.t_labels[c.t]] + ([spec.t_labels[c.t2]] if c.t2 is not None else [])
    return f"{c.kind}({','.join(ts)},{c.shift})"


def component_graph(spec: PosetSpec, comp: ComponentId) -> dict:
    """Vertices, mesh arrows and tau edges of the window part of a component."""
    members = component_members(spec, comp)
    inside = set(members)
    arrows, taus = [], []
    for x in members:
        arrows += [(x, y) for y in arrows_out(x) if y in inside]
        if tau(x) in inside:
            taus.append((x, tau(x)))
    return {"component": comp, "vertices": members, "arrows": arrows, "tau": taus}


def to_json(spec: PosetSpec, g: dict) -> dict:
    lit = lambda x: format_obj(spec, x)
    return {
        "component": format_component(spec, g["component"]),
        "shape": g["component"].shape,
        "vertices": [lit(x) for x in g["vertices"]],
        "arrows": [[lit(a), lit(b)] for a, b in g["arrows"]],
        "tau": [[lit(a), lit(b)] for a, b in g["tau"]],
    }


def to_dot(spec: PosetSpec, g: dict) -> str:
    doc = to_json(spec, g)
    q = lambda s: '"' + s.replace('"', r'\"') + '"'
    lines = [f"digraph {q(doc['component'])} {{", f"  label={q(doc['shape'])};"]
    lines += [f"  {q(v)};" for v in doc["vertices"]]
    lines += [f"  {q(a)} -> {q(b)};" for a, b in doc["arrows"]]
    lines += [f"  {q(a)} -> {q(b)} [style=dashed, constraint=false];" for a, b in doc["tau"]]
    lines.append("}")
    return "\n".join(lines) + "\n"

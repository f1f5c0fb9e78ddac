"""Command-line front end. JSON goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 2 usage or input error, 3 symbolic and oracle disagree.
"""
from __future__ import annotations

import argparse
import json
import sys

from .config import RunConfig, load_config, parse_field
from .errors import Ambiguous, DercatError, InputError
from .export import component_graph, format_component, parse_component, to_dot, to_json
from .model import component_of, hom_dim
from .objects import format_dobj, format_obj, parse_obj, require_window
from .probing import cone_by_probing, identify, phi_o
from .tilting import tilting_set
from .verify import SUITES, run
from .workspace import Workspace

EXIT_INPUT, EXIT_DISAGREE = 2, 3


def _config(args) -> RunConfig:
    cfg = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    fld = getattr(args, "field", None)
    return cfg.with_overrides(field=parse_field(fld) if fld else None,
                              margin=getattr(args, "margin", None), seed=getattr(args, "seed", None))


def _obj(cfg: RunConfig, text: str):
    x = parse_obj(cfg.poset, text)
    require_window(cfg.poset, x)
    return x


def cmd_hom(cfg: RunConfig, args) -> tuple[dict, int]:
    x, y = _obj(cfg, args.x), _obj(cfg, args.y)
    dim = hom_dim(x, y)
    oracle = Workspace(cfg.poset, cfg.margin, cfg.field).hom_dim(x, y)
    return {"dim": dim, "oracle_dim": oracle, "agree": dim == oracle}, 0 if dim == oracle else EXIT_DISAGREE


def cmd_cone(cfg: RunConfig, args) -> tuple[dict, int]:
    """Cone of the nonzero map x[-shift] -> y."""
    spec = cfg.poset
    x, y = _obj(cfg, args.x), _obj(cfg, args.y)
    src = x[-args.shift]
    cone = Workspace(spec, cfg.margin, cfg.field).cone(src, y)
    # the cone of src -> y is the middle term of y -> C -> src[1] -> y[1]
    try:
        probed = cone_by_probing(src[1], y, spec.kind)
    except (Ambiguous, InputError):
        probed = None
    agree = None if probed is None else probed == cone
    doc = {"cone": format_dobj(spec, cone),
           "by_probing": None if probed is None else format_dobj(spec, probed), "agree": agree}
    return doc, EXIT_DISAGREE if agree is False else 0


def cmd_probe(cfg: RunConfig, args) -> tuple[dict, int]:
    spec = cfg.poset
    x = _obj(cfg, args.x)
    probes = sorted(phi_o(x, spec), key=lambda o: (-o.shift, o.cls.sort_key))
    comp = component_of(x)
    fiber = sorted(identify(probes, spec.kind), key=lambda o: o.sort_key)
    return {
        "phi_o": [format_obj(spec, s) for s in probes],
        "component": format_component(spec, comp),
        "shape": comp.shape,
        "fiber": [format_obj(spec, f) for f in fiber],
    }, 0


def cmd_tilt(cfg: RunConfig, args) -> tuple[dict, int]:
    return tilting_set(_obj(cfg, args.s), cfg.poset).to_json(cfg.poset), 0


def cmd_export(cfg: RunConfig, args) -> tuple[dict | str, int]:
    spec = cfg.poset
    g = component_graph(spec, parse_component(spec, args.component))
    if not g["vertices"]:
        raise InputError(f"component {args.component} has no objects in the window")
    return (to_dot(spec, g) if args.format == "dot" else to_json(spec, g)), 0


def cmd_verify(cfg: RunConfig, args) -> tuple[dict, int]:
    suites = SUITES if args.suite == "all" else (args.suite,)
    report = run(cfg, suites, jobs=max(1, getattr(args, "jobs", None) or 1))
    return report, 0 if report["passed"] else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="TOML or JSON poset config")
    common.add_argument("--field", default=argparse.SUPPRESS, help="rational, gf2 or gf<p>")
    common.add_argument("--margin", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="dercat", parents=[common],
                                description="Hom, cones, probes and tilting sets over A_L and D_L.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hom", parents=[common], help="closed-form and oracle Hom dimension")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(run=cmd_hom)

    s = sub.add_parser("cone", parents=[common], help="cone of the nonzero map x[-shift] -> y")
    s.add_argument("x")
    s.add_argument("y")
    s.add_argument("--shift", type=int, default=0)
    s.set_defaults(run=cmd_cone)

    s = sub.add_parser("probe", parents=[common], help="probe set, component and fiber of x")
    s.add_argument("x")
    s.set_defaults(run=cmd_probe)

    s = sub.add_parser("tilt", parents=[common], help="tilting set generated by a quasi-simple")
    s.add_argument("s")
    s.set_defaults(run=cmd_tilt)

    s = sub.add_parser("export", parents=[common], help="AR component as a graph")
    s.add_argument("component", help="e.g. Wing(t0,0) or BandA(t0,t1,0)")
    s.add_argument("--format", choices=("dot", "json"), default="dot")
    s.set_defaults(run=cmd_export)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("--suite", choices=("all",) + SUITES, default="all")
    s.set_defaults(run=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else 0
    try:
        out, code = args.run(_config(args), args)
    except InputError as e:
        print(f"dercat: {e}", file=sys.stderr)
        return EXIT_INPUT
    except DercatError as e:
        print(f"dercat: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DISAGREE
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        json.dump(out, sys.stdout, indent=2)
        sys.stdout.write("\n")
    if code:
        print("dercat: symbolic and oracle results disagree", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

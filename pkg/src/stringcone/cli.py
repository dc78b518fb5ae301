"""Command-line interface.

Subcommands operate on the JSON file formats from `serialize` and print
deterministic JSON (or plain text with --format text).  Exit codes:
0 success, 1 failed verification, 2 input or domain error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from dataclasses import field as _dc_field

from . import fixtures as fx
from . import koszul as kz
from . import lattice as lat
from . import posets as po
from . import semigroup as sg
from . import serialize as ser
from . import stringy as st
from . import verify as vf
from .errors import ParseError, StringConeError


@dataclass
class JobSpec:
    """Everything needed to reproduce one CLI invocation."""

    command: str
    inputs: tuple = ()
    seed: int = 0
    field: str = sg.DEFAULT_FIELD
    fmt: str = "json"
    options: dict = _dc_field(default_factory=dict)


def _load_pair(path: str) -> lat.ReflexivePair:
    return lat.reflexive_pair(ser.load_polytope(path))


def _cmd_dual(spec: JobSpec):
    p = ser.load_polytope(spec.inputs[0])
    dual = lat.dual_polytope(p)
    if spec.fmt == "text":
        return "\n".join(" ".join(str(x) for x in v) for v in dual.vertices)
    return ser.dump_rational_polytope(dual)


def _cmd_check_reflexive(spec: JobSpec):
    p = ser.load_polytope(spec.inputs[0])
    verdict = lat.is_reflexive(p)
    if spec.fmt == "text":
        return "true" if verdict else "false"
    import json
    return json.dumps({"reflexive": verdict})


def _cmd_faces(spec: JobSpec):
    cone = lat.gorenstein_cone_over(ser.load_polytope(spec.inputs[0]))
    fl = lat.face_lattice(cone)
    import json
    faces = [{"dim": f.dim,
              "generators": [list(g) for g in f.generator_vectors()]}
             for f in fl.faces]
    if spec.fmt == "text":
        lines = [f"{len(fl.faces)} faces of a dim-{cone.dim} cone"]
        lines += [f"  dim {f['dim']}: {f['generators']}" for f in faces]
        return "\n".join(lines)
    return json.dumps({"cone_dim": cone.dim, "faces": faces}, sort_keys=True)


def _cmd_s_poly(spec: JobSpec):
    cone = lat.gorenstein_cone_over(ser.load_polytope(spec.inputs[0]))
    return ser.dump_univariate(st.s_polynomial(cone))


def _cmd_tilde_s(spec: JobSpec):
    cone = lat.gorenstein_cone_over(ser.load_polytope(spec.inputs[0]))
    return ser.dump_univariate(st.tilde_s_polynomial(cone))


def _cmd_g_poly(spec: JobSpec):
    cone = lat.gorenstein_cone_over(ser.load_polytope(spec.inputs[0]))
    poset = st._lattice_poset(cone)
    return ser.dump_univariate(po.g_polynomial(poset))


def _cmd_b_poly(spec: JobSpec):
    cone = lat.gorenstein_cone_over(ser.load_polytope(spec.inputs[0]))
    poset = st._lattice_poset(cone)
    return ser.dump_bivariate(po.b_polynomial(poset))


def _e_st_from_spec(spec: JobSpec):
    if spec.options.get("toric"):
        fan = ser.load_fan(spec.inputs[0])
        return st.e_st_toric(fan), fan.rank
    pair = _load_pair(spec.inputs[0])
    return st.e_st_hypersurface(pair), pair.cone.dim - 2


def _cmd_e_st(spec: JobSpec):
    e_poly, _ = _e_st_from_spec(spec)
    return ser.dump_bivariate(e_poly)


def _cmd_hodge(spec: JobSpec):
    e_poly, dim = _e_st_from_spec(spec)
    table = st.stringy_hodge_table(e_poly, dim)
    return ser.dump_hodge_table(table)


def _cmd_box(spec: JobSpec):
    cone = lat.gorenstein_cone_over(ser.load_polytope(spec.inputs[0]))
    table = st.box_points(cone)
    import json
    return json.dumps(
        {"shifts": {str(l): [list(p) for p in pts]
                    for l, pts in sorted(table.by_shift.items())}},
        sort_keys=True)


def _cmd_ring_dims(spec: JobSpec):
    cone = lat.gorenstein_cone_over(ser.load_polytope(spec.inputs[0]))
    sub = None
    if spec.options.get("heights"):
        heights = ser.load_heights(spec.options["heights"])
        sub = lat.regular_subdivision(cone, heights)
    g = sg.random_degree_one(cone, spec.seed, field=spec.field)
    report = sg.graded_quotient_dims(g, sub, seed=spec.seed)
    return ser.dump_quotient_report(report)


def _cmd_koszul(spec: JobSpec):
    pair = _load_pair(spec.inputs[0])
    sub = None
    if spec.options.get("heights"):
        heights = ser.load_heights(spec.options["heights"])
        sub = lat.regular_subdivision(pair.dual, heights)
    f = sg.random_degree_one(pair.cone, spec.seed, field=spec.field)
    g = sg.random_degree_one(pair.dual, spec.seed + 17, field=spec.field)
    cap = spec.options.get("cap")
    report = kz.compare_with_decomposition(pair, f, g, cap=cap,
                                           dual_subdivision=sub)
    return ser.dump_koszul_report(report)


def _cmd_subdivide(spec: JobSpec):
    cone = lat.gorenstein_cone_over(ser.load_polytope(spec.inputs[0]))
    heights = ser.load_heights(spec.options["heights"])
    sub = lat.regular_subdivision(cone, heights,
                                  force_generic=spec.options.get("generic", False))
    return ser.dump_subdivision(sub)


def run(spec: JobSpec):
    """Execute a job; returns (exit_code, output_text)."""
    handlers = {
        "dual": _cmd_dual,
        "check-reflexive": _cmd_check_reflexive,
        "faces": _cmd_faces,
        "s-poly": _cmd_s_poly,
        "tilde-s": _cmd_tilde_s,
        "g-poly": _cmd_g_poly,
        "b-poly": _cmd_b_poly,
        "e-st": _cmd_e_st,
        "hodge": _cmd_hodge,
        "box": _cmd_box,
        "ring-dims": _cmd_ring_dims,
        "koszul": _cmd_koszul,
        "subdivide": _cmd_subdivide,
    }
    if spec.command == "verify":
        selected = spec.options.get("fixtures", "all")
        names = None if selected == "all" else selected.split(",")
        lines, ok = vf.run_criteria(names)
        return (0 if ok else 1), "\n".join(lines)
    if spec.command == "fixtures":
        return 0, _cmd_fixtures(spec)
    return 0, handlers[spec.command](spec)


def _cmd_fixtures(spec: JobSpec):
    """Write the bundled fixture files into a directory."""
    import pathlib
    target = pathlib.Path(spec.options.get("dump", "fixtures"))
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name in fx.polytope_names():
        path = target / f"{name}.json"
        path.write_text(ser.dump_polytope(fx.polytope(name)) + "\n")
        written.append(str(path))
    for name in fx.fan_names():
        path = target / f"fan_{name}.json"
        path.write_text(ser.dump_fan(fx.fan(name)) + "\n")
        written.append(str(path))
    return "\n".join(written)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--field", default=sg.DEFAULT_FIELD,
                        help='"rational" or "prime:<p>"')
    common.add_argument("--format", dest="fmt", choices=("json", "text"),
                        default="json")
    parser = argparse.ArgumentParser(
        prog="stringcone",
        description="Exact stringy invariants of reflexive polytopes")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("dual", "check-reflexive", "faces", "s-poly", "tilde-s",
                 "g-poly", "b-poly", "box"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("polytope")

    for name in ("e-st", "hodge"):
        p = sub.add_parser(name, parents=[common])
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--hypersurface", metavar="POLYTOPE")
        group.add_argument("--toric", metavar="FAN")

    p = sub.add_parser("ring-dims", parents=[common])
    p.add_argument("polytope")
    p.add_argument("--subdivide", metavar="HEIGHTS", default=None)

    p = sub.add_parser("koszul", parents=[common])
    p.add_argument("polytope")
    p.add_argument("--subdivide", metavar="HEIGHTS", default=None)
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("subdivide", parents=[common])
    p.add_argument("polytope")
    p.add_argument("--heights", required=True)
    p.add_argument("--generic", action="store_true")

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--fixtures", default="all",
                   help='"all" or comma-separated criterion keys')

    p = sub.add_parser("fixtures", parents=[common])
    p.add_argument("--dump", default="fixtures", metavar="DIR")
    return parser


def spec_from_args(args) -> JobSpec:
    options = {}
    inputs = []
    if getattr(args, "polytope", None):
        inputs.append(args.polytope)
    if getattr(args, "hypersurface", None):
        inputs.append(args.hypersurface)
    if getattr(args, "toric", None):
        inputs.append(args.toric)
        options["toric"] = True
    if getattr(args, "subdivide", None):
        options["heights"] = args.subdivide
    if getattr(args, "heights", None):
        options["heights"] = args.heights
    if getattr(args, "generic", False):
        options["generic"] = True
    if getattr(args, "cap", None) is not None:
        options["cap"] = args.cap
    if getattr(args, "fixtures", None):
        options["fixtures"] = args.fixtures
    if getattr(args, "dump", None):
        options["dump"] = args.dump
    return JobSpec(command=args.command, inputs=tuple(inputs),
                   seed=args.seed, field=args.field, fmt=args.fmt,
                   options=options)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    spec = spec_from_args(args)
    try:
        code, output = run(spec)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 2
    except StringConeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if output:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())

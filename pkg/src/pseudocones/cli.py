"""Batch command-line front end.

Exit status: 0 on success or when every checked property holds, 1 when a
property fails (the counterexample goes to standard output), 2 on unusable
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import core, harness, lattice, serialize, svg
from .linalg import DimensionError, parse_rational
from .polyhedra import InconsistentRepresentation, Polyhedron

EXIT_OK, EXIT_PROPERTY_FAILED, EXIT_BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _load_element(path: str) -> core.PCElem:
    obj = _read_json(path)
    try:
        return serialize.load_element(obj)
    except core.NotAPseudoCone as exc:
        raise InputError(f"{path}: not a closed pseudo-cone: {exc}") from None
    except InconsistentRepresentation as exc:
        gen = "(" + ", ".join(map(str, exc.generator)) + ")" if exc.generator is not None else ""
        raise InputError(f"{path}: {exc} {gen}".rstrip()) from None
    except serialize.FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_polyhedron(path: str):
    try:
        return serialize.load_polyhedron(_read_json(path))
    except InconsistentRepresentation as exc:
        gen = "(" + ", ".join(map(str, exc.generator)) + ")" if exc.generator is not None else ""
        raise InputError(f"{path}: {exc} {gen}".rstrip()) from None
    except serialize.FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_cone(path: str) -> core.ConvexCone:
    try:
        return serialize.load_cone(_read_json(path))
    except (serialize.FormatError, InconsistentRepresentation) as exc:
        raise InputError(f"{path}: {exc}") from None


def _direction(text: str, dim: int):
    try:
        items = json.loads(text) if text.strip().startswith("[") else text.split(",")
        u = tuple(parse_rational(str(c).strip()) for c in items)
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"bad direction {text!r}: {exc}") from None
    if len(u) != dim:
        raise InputError(f"direction has {len(u)} coordinates, expected {dim}")
    return u


def _emit(args, obj) -> None:
    text = serialize.dumps(obj)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_svg(args, sets) -> None:
    if getattr(args, "emit", None) != "svg":
        return
    drawable = [(label, p) for label, p in sets if p is not None]
    if any(p.dim != 2 for _, p in drawable):
        raise InputError("--emit svg needs planar sets")
    with open(args.svg_path, "w") as fh:
        fh.write(svg.render(drawable, radius=parse_rational(args.box)))


def _as_polyhedron(k: core.PCElem) -> Polyhedron:
    if k.kind is core.Kind.EMPTY:
        return Polyhedron.empty(k.dim)
    if k.kind is core.Kind.ALL:
        return Polyhedron.whole(k.dim)
    return k.set


# -- subcommands -------------------------------------------------------------

def cmd_validate(args) -> int:
    p = _load_polyhedron(args.set)
    bad = core.violation(p)
    if bad is None:
        _emit(args, {"valid": True, "element": serialize.dump_element(core.validate(p))})
        return EXIT_OK
    out = {"valid": False, "condition": bad.condition, "message": str(bad)}
    if bad.witness is not None:
        out["witness"] = serialize.dump_vector(bad.witness)
    if bad.factor is not None:
        out["factor"] = str(bad.factor)
    _emit(args, out)
    return EXIT_PROPERTY_FAILED


def cmd_dual(args) -> int:
    k = _load_element(args.set)
    d = core.dual_star(k)
    _emit(args, serialize.dump_element(d))
    _emit_svg(args, [("K", _as_polyhedron(k)), ("K*", _as_polyhedron(d))])
    return EXIT_OK


def cmd_polar(args) -> int:
    k = _load_element(args.set)
    p = core.classical_polar(k)
    _emit(args, serialize.dump_polyhedron(p))
    _emit_svg(args, [("K", k.set), ("K polar", p)])
    return EXIT_OK


def _binary(op, label):
    def run(args) -> int:
        a, b = _load_element(args.a), _load_element(args.b)
        r = op(a, b)
        _emit(args, serialize.dump_element(r))
        _emit_svg(args, [("A", _as_polyhedron(a)), ("B", _as_polyhedron(b)), (label, _as_polyhedron(r))])
        return EXIT_OK
    return run


def _cone_of(op):
    def run(args) -> int:
        k = _load_element(args.set)
        c = op(k)
        _emit(args, serialize.dump_cone(c))
        _emit_svg(args, [("K", k.set), ("cone", c.polyhedron)])
        return EXIT_OK
    return run


def cmd_polarcone(args) -> int:
    c = _load_cone(args.cone)
    _emit(args, serialize.dump_cone(core.polar_cone(c)))
    return EXIT_OK


def cmd_support(args) -> int:
    k = _load_element(args.set)
    u = _direction(args.direction, k.dim)
    _emit(args, {"direction": serialize.dump_vector(u), "support": serialize.dump_scalar(core.support(k, u))})
    return EXIT_OK


def cmd_radial(args) -> int:
    k = _load_element(args.set)
    u = _direction(args.direction, k.dim)
    if all(c == 0 for c in u):
        raise InputError("radial function is undefined at the origin")
    rho = core.radial(k, u)
    chk = core.radial_support_check(k, u)
    _emit(args, {"direction": serialize.dump_vector(u),
                 "radial": "undefined" if rho is None else str(rho),
                 "dual_support": serialize.dump_scalar(chk.support),
                 "identity_holds": chk.holds})
    return EXIT_OK if chk.holds else EXIT_PROPERTY_FAILED


def cmd_transform(args) -> int:
    k = _load_element(args.set)
    try:
        g = serialize.load_linmap(json.loads(args.matrix))
    except (json.JSONDecodeError, serialize.FormatError) as exc:
        raise InputError(f"bad matrix: {exc}") from None
    r = core.apply_gl(g, k)
    _emit(args, serialize.dump_element(r))
    _emit_svg(args, [("K", _as_polyhedron(k)), ("gK", _as_polyhedron(r))])
    return EXIT_OK


def cmd_cclose(args) -> int:
    c = _load_cone(args.cone)
    k = _load_element(args.set)
    try:
        verdict = core.c_close(c, k)
    except ValueError as exc:
        raise InputError(f"precondition violated: {exc}") from None
    _emit(args, {"c_close": verdict})
    return EXIT_OK


def cmd_suite(args) -> int:
    cfg = harness.GenConfig(args.dim, num_vertices=args.vertices, num_extra_rays=args.rays,
                            coordinate_bound=args.bound, seed=args.seed)
    if args.mutation:
        with harness.mutation(args.mutation):
            report = harness.run_duality_suite(cfg, args.trials)
    else:
        report = harness.run_duality_suite(cfg, args.trials)
    text = report.to_text()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return EXIT_OK if report.ok else EXIT_PROPERTY_FAILED


def cmd_lattice_check(args) -> int:
    if args.lattice is None:
        report = lattice.check_lattice_laws(args.max_size)
        print(report.to_text())
        return EXIT_OK if report.ok else EXIT_PROPERTY_FAILED
    try:
        with open(args.lattice) as fh:
            lat = lattice.FiniteLattice.from_text(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {args.lattice}: {exc.strerror}") from None
    except ValueError as exc:
        raise InputError(f"{args.lattice}: {exc}") from None
    if args.map is None:
        report = lattice.check_lattice_laws(lattices=[lat])
        print(report.to_text())
        return EXIT_OK if report.ok else EXIT_PROPERTY_FAILED
    try:
        f = lattice.parse_map(args.map)
        bad = lattice.endomorphism_violation(lat, f)
    except ValueError as exc:
        raise InputError(f"bad map: {exc}") from None
    lines = [f"endomorphism {'yes' if bad is None else 'no'}" + ("" if bad is None else f" witness={bad[0]},{bad[1]}")]
    ok = True
    if bad is None:
        mono = lattice.is_monotone(lat, f)
        ok = ok and mono
        lines.append(f"endo_monotone {'PASS' if mono else 'FAIL'}")
    if len(set(f)) == lat.size:
        v = lattice.check_dual_for_lattice(lat, f)
        tri = len(set(v)) == 1
        ok = ok and tri
        lines.append(f"dual_for_lattice {'PASS' if tri else 'FAIL'} "
                     f"reverses={v[0]} join_to_meet={v[1]} meet_to_join={v[2]}")
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_PROPERTY_FAILED


EXPECTED_DEMO = {
    "K°° = first quadrant": True, "K°° = K": False,
    "L°° = {x>=0, y<=0}": True, "L°° = L": False,
    "K** = K": True, "L** = L": True,
    "(K∨L)° = K°∧L°": False, "(K∧L)° = cl[K°,L°]": False,
    "(K∨L)* = K*∧L*": True, "(K∧L)* = K*∨L*": True,
}


def cmd_demo(args) -> int:
    report = harness.demo_polar_counterexample()
    print(report.to_text())
    _emit_svg(args, [("K", report.sets["K"]), ("K polar polar", report.sets["K°°"]), ("K*", report.sets["K*"])])
    return EXIT_OK if report.verdicts == EXPECTED_DEMO else EXIT_PROPERTY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pseudocones", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func, help, svg_flag=True):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("-o", "--output", help="write the result here instead of stdout")
        if svg_flag:
            p.add_argument("--emit", choices=["svg"], help="also draw the sets (planar only)")
            p.add_argument("--svg-path", default="figure.svg")
            p.add_argument("--box", default="10", help="half-width of the drawing box")
        return p

    add("validate", cmd_validate, "check that a polyhedron is a closed pseudo-cone", False).add_argument("set")
    add("dual", cmd_dual, "the dual K*").add_argument("set")
    add("polar", cmd_polar, "the classical polar").add_argument("set")
    for name, op in (("meet", core.meet), ("join", core.join)):
        p = add(name, _binary(op, name), f"lattice {name}")
        p.add_argument("a")
        p.add_argument("b")
    add("rec", _cone_of(core.recession_cone), "recession cone").add_argument("set")
    add("poshull", _cone_of(core.closed_positive_hull), "closure of the positive hull").add_argument("set")
    add("polarcone", cmd_polarcone, "polar of a convex cone", False).add_argument("cone")
    for name, func in (("support", cmd_support), ("radial", cmd_radial)):
        p = add(name, func, f"{name} function at a direction", False)
        p.add_argument("set")
        p.add_argument("--direction", "-u", required=True, help="comma separated rationals, e.g. 1,-1/2")
    p = add("transform", cmd_transform, "image under an invertible linear map")
    p.add_argument("set")
    p.add_argument("--matrix", required=True, help='JSON rows, e.g. [["0","1"],["1","0"]]')
    p = add("cclose", cmd_cclose, "decide whether C \\ K has positive finite volume", False)
    p.add_argument("cone")
    p.add_argument("set")
    p = add("suite", cmd_suite, "run the duality theorem suite", False)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vertices", type=int, default=4, help="max vertices per instance")
    p.add_argument("--rays", type=int, default=4, help="max extra rays per instance")
    p.add_argument("--bound", type=int, default=8, help="coordinate bound")
    p.add_argument("--mutation", choices=sorted(harness.MUTATIONS), help="run against a deliberately broken kernel")
    p = add("lattice-check", cmd_lattice_check, "check the finite lattice laws", False)
    p.add_argument("lattice", nargs="?", help="lattice file; omit to check every lattice up to --max-size")
    p.add_argument("--map", help="space separated image indices")
    p.add_argument("--max-size", type=int, default=5)
    add("demo-counterexample", cmd_demo, "classical polar versus the duality on the standard pair")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Batch command-line front end.

Exit codes: 0 success, 1 domain error, 2 input error (bad arguments or
malformed JSON).  Errors go to stderr as one-line JSON objects.  All
JSON output is canonical (sorted keys), so identical inputs produce
byte-identical outputs.
"""

import argparse
import json
import sys

from . import enumeration, io, jacobian, metricgraph, planecurve, polynomial
from .errors import DomainError, InputError, TropkitError
from .rationals import format_rational, parse_rational


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    _emit(args, io.canonical_dumps(obj))


def _parse_point_arg(s):
    """Graph point from the command line: a vertex name or "edge:EDGE:OFFSET"."""
    if s.startswith("edge:"):
        try:
            _, idx, off = s.split(":")
        except ValueError:
            raise InputError(f"bad edge point {s!r}; expected edge:IDX:OFFSET")
        return ("e", int(idx), parse_rational(off))
    return ("v", s)


def _parse_bbox(s):
    parts = s.split(",")
    if len(parts) != 4:
        raise InputError("--bbox expects x0,y0,x1,y1")
    return tuple(parse_rational(p) for p in parts)


def cmd_eval(args):
    f = io.polynomial_from_json(io.load_json(args.poly))
    point = [parse_rational(c) for c in args.at.split(",")]
    _emit(args, str(polynomial.evaluate(f, point)) + "\n")


def cmd_curve(args):
    f = io.polynomial_from_json(io.load_json(args.poly))
    curve = planecurve.corner_locus(f)
    if args.svg:
        from . import plotting
        bbox = _parse_bbox(args.bbox) if args.bbox else plotting.DEFAULT_BBOX
        plotting.plot_curve(curve, args.svg, bbox)
    _emit_json(args, io.curve_to_json(curve))


def cmd_intersect(args):
    c1 = io.curve_from_json(io.load_json(args.curve1))
    c2 = io.curve_from_json(io.load_json(args.curve2))
    report = planecurve.stable_intersection(c1, c2, seed=args.seed)
    _emit_json(args, io.intersection_report_to_json(report))


def cmd_graph(args):
    g = io.graph_from_json(io.load_json(args.graph))
    op = args.op
    if op == "genus":
        _emit(args, f"{metricgraph.genus(g)}\n")
    elif op == "canonical":
        _emit_json(args, io.divisor_to_json(metricgraph.canonical_divisor(g)))
    elif op == "divisor-of":
        phi = io.function_from_json(g, io.load_json(args.arg))
        _emit_json(args, io.divisor_to_json(metricgraph.divisor_of(phi)))
    elif op == "rank":
        D = io.divisor_from_json(g, io.load_json(args.arg))
        _emit(args, f"{metricgraph.rank(D)}\n")
    elif op == "rr-check":
        D = io.divisor_from_json(g, io.load_json(args.arg))
        _emit(args, "true\n" if metricgraph.riemann_roch_check(D) else "false\n")
    elif op == "reduce":
        D = io.divisor_from_json(g, io.load_json(args.arg))
        q = _parse_point_arg(args.base)
        _emit_json(args, io.divisor_to_json(metricgraph.reduced_divisor(D, q)))
    else:  # unreachable: argparse restricts choices
        raise InputError(f"unknown graph operation {op!r}")


def cmd_jacobian(args):
    g = io.graph_from_json(io.load_json(args.graph))
    if args.op == "period":
        _emit_json(args, io.period_matrix_to_json(jacobian.period_matrix(g)))
    else:  # abel-jacobi
        if not args.divisor:
            raise InputError("abel-jacobi needs a divisor file")
        D = io.divisor_from_json(g, io.load_json(args.divisor))
        _emit_json(args, io.jacobian_point_to_json(jacobian.abel_jacobi(D)))


def cmd_count(args):
    n = enumeration.count_curves(args.degree, args.genus,
                                 max_degree=args.max_degree)
    if not args.list_diagrams:
        _emit(args, f"{n}\n")
        return
    rows = []
    for fd in enumeration.enumerate_floor_diagrams(args.degree, args.genus,
                                                   max_degree=args.max_degree):
        rows.append({"floors": fd.d,
                     "edges": [{"from": u, "to": v, "w": w}
                               for u, v, w in fd.edges],
                     "markings_count": enumeration.count_markings(fd),
                     "multiplicity": fd.multiplicity()})
    _emit_json(args, {"count": n, "diagrams": rows})


def cmd_moduli(args):
    tree = io.tree_from_json(io.load_json(args.tree))
    _emit_json(args, io.cross_ratios_to_json(enumeration.cross_ratios(tree)))


def build_parser():
    p = argparse.ArgumentParser(prog="tropkit",
                                description="exact tropical geometry toolkit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output",
                        help="write result here instead of stdout")
    sub = p.add_subparsers(dest="cmd", required=True)

    q = sub.add_parser("eval", parents=[common],
                       help="evaluate a tropical polynomial")
    q.add_argument("poly", help="polynomial JSON file")
    q.add_argument("--at", required=True, help="comma-separated rationals")
    q.set_defaults(fn=cmd_eval)

    q = sub.add_parser("curve", parents=[common], help="corner locus of a polynomial")
    q.add_argument("poly", help="polynomial JSON file")
    q.add_argument("--svg", help="also render the curve to this SVG file")
    q.add_argument("--bbox", help="x0,y0,x1,y1 clip box for SVG rays")
    q.set_defaults(fn=cmd_curve)

    q = sub.add_parser("intersect", parents=[common], help="stable intersection of two curves")
    q.add_argument("curve1")
    q.add_argument("curve2")
    q.add_argument("--seed", type=int, default=0,
                   help="seed for generic translate draws")
    q.set_defaults(fn=cmd_intersect)

    q = sub.add_parser("graph", parents=[common], help="divisor theory on a metric graph")
    q.add_argument("op", choices=["genus", "canonical", "divisor-of", "rank",
                                  "rr-check", "reduce"])
    q.add_argument("graph", help="graph JSON file")
    q.add_argument("arg", nargs="?",
                   help="divisor or function JSON file, when required")
    q.add_argument("--base", help="base point for 'reduce': vertex name "
                                  "or edge:IDX:OFFSET")
    q.set_defaults(fn=cmd_graph)

    q = sub.add_parser("jacobian", parents=[common], help="period matrix and Abel-Jacobi map")
    q.add_argument("op", choices=["period", "abel-jacobi"])
    q.add_argument("graph", help="graph JSON file")
    q.add_argument("divisor", nargs="?", help="degree-0 divisor JSON file")
    q.set_defaults(fn=cmd_jacobian)

    q = sub.add_parser("count", parents=[common], help="plane curve counts via floor diagrams")
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--genus", type=int, required=True)
    q.add_argument("--list-diagrams", action="store_true")
    q.add_argument("--max-degree", type=int,
                   default=enumeration.DEFAULT_MAX_DEGREE,
                   help="raise the default degree bound")
    q.set_defaults(fn=cmd_count)

    q = sub.add_parser("moduli", parents=[common], help="moduli of rational tropical curves")
    q.add_argument("op", choices=["cross-ratio"])
    q.add_argument("tree", help="tree JSON file (graph with labeled leaves)")
    q.set_defaults(fn=cmd_moduli)
    return p


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.cmd == "graph" and args.op in ("divisor-of", "rank",
                                               "rr-check", "reduce"):
            if not args.arg:
                raise InputError(f"graph {args.op} needs a second JSON file")
        args.fn(args)
        return 0
    except InputError as exc:
        sys.stderr.write(json.dumps({"error": "input", "detail": str(exc)})
                         + "\n")
        return 2
    except (DomainError, TropkitError) as exc:
        sys.stderr.write(json.dumps({"error": "domain", "detail": str(exc)})
                         + "\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

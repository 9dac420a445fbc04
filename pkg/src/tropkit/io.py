"""JSON (de)serialization for every on-disk format.

Rationals travel as strings "p/q" or "p" ("-inf" for the tropical zero);
decimal literals are rejected.  Dumps are canonical: sorted keys, fixed
indentation, so identical objects serialize byte-identically.
"""

import json

from .enumeration import TropicalTree
from .errors import InputError
from .metricgraph import Divisor, MetricGraph, RationalFunction
from .planecurve import (DualSubdivision, IntersectionReport,
                         PlaneTropicalCurve, Ray, Segment)
from .polynomial import TropicalPolynomial
from .rationals import format_rational, parse_rational


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def canonical_dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# polynomial: {"n": int, "terms": [{"exp": [int,...], "coeff": "p/q"}, ...]}

def polynomial_from_json(data):
    try:
        n = data["n"]
        terms = [(tuple(t["exp"]), parse_rational(t["coeff"]))
                 for t in data["terms"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad polynomial JSON: {exc}") from exc
    return TropicalPolynomial(n, terms)


def polynomial_to_json(f):
    return {"n": f.n,
            "terms": [{"exp": list(m.exp), "coeff": format_rational(m.coeff)}
                      for m in f.terms]}


# curve: {"vertices": [["p/q","p/q"],...],
#         "edges": [{"kind":"seg","a":i,"b":j,"w":int} |
#                   {"kind":"ray","v":i,"dir":[int,int],"w":int}]}

def curve_from_json(data):
    try:
        verts = [tuple(parse_rational(c) for c in v) for v in data["vertices"]]
        edges = []
        for e in data["edges"]:
            if e["kind"] == "seg":
                edges.append(Segment(int(e["a"]), int(e["b"]), int(e["w"])))
            elif e["kind"] == "ray":
                edges.append(Ray(int(e["v"]), tuple(int(x) for x in e["dir"]),
                                 int(e["w"])))
            else:
                raise InputError(f"unknown edge kind {e['kind']!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad curve JSON: {exc}") from exc
    return PlaneTropicalCurve(verts, edges)


def curve_to_json(c):
    edges = []
    for e in c.edges:
        if isinstance(e, Segment):
            edges.append({"kind": "seg", "a": e.a, "b": e.b, "w": e.w})
        else:
            edges.append({"kind": "ray", "v": e.v, "dir": list(e.dir), "w": e.w})
    return {"vertices": [[format_rational(x) for x in v] for v in c.vertices],
            "edges": edges}


def intersection_report_to_json(r):
    return {"points": [{"at": [format_rational(x) for x in p],
                        "multiplicity": m} for p, m in r.points],
            "total": r.total,
            "perturbed": r.perturbed}


# graph: {"vertices": ["a", ...],
#         "edges": [{"u":"a","v":"b","len":"p/q"|"inf"}, ...]}

def graph_from_json(data):
    try:
        verts = list(data["vertices"])
        edges = []
        for e in data["edges"]:
            ln = e["len"]
            edges.append((e["u"], e["v"],
                          None if ln == "inf" else parse_rational(ln)))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad graph JSON: {exc}") from exc
    return MetricGraph(verts, edges)


def graph_to_json(g):
    return {"vertices": list(g.vertices),
            "edges": [{"u": e.u, "v": e.v,
                       "len": "inf" if e.length is None
                       else format_rational(e.length)}
                      for e in g.edges]}


# divisor: {"entries": [{"at": "a" | {"edge": i, "offset": "p/q"}, "c": int}]}

def _point_from_json(at):
    if isinstance(at, str):
        return ("v", at)
    try:
        return ("e", int(at["edge"]), parse_rational(at["offset"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad graph point {at!r}") from exc


def _point_to_json(p):
    if p[0] == "v":
        return p[1]
    return {"edge": p[1], "offset": format_rational(p[2])}


def divisor_from_json(graph, data):
    try:
        entries = [(_point_from_json(e["at"]), int(e["c"]))
                   for e in data["entries"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad divisor JSON: {exc}") from exc
    return Divisor(graph, entries)


def divisor_to_json(D):
    return {"entries": [{"at": _point_to_json(p), "c": c}
                        for p, c in D.entries.items()]}


# rational function: {"vertex_values": {"a": "p/q", ...},
#                     "breakpoints": [{"edge": i,
#                                      "points": [{"offset": "...", "value": "..."}]}]}

def function_from_json(graph, data):
    try:
        vv = {v: parse_rational(x) for v, x in data["vertex_values"].items()}
        bp = {}
        for blk in data.get("breakpoints", []):
            bp[int(blk["edge"])] = [(parse_rational(p["offset"]),
                                     parse_rational(p["value"]))
                                    for p in blk["points"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad rational function JSON: {exc}") from exc
    return RationalFunction(graph, vv, bp)


def tree_from_json(data):
    """A tropical tree is a graph whose infinite edges end in labeled leaves."""
    return TropicalTree(graph_from_json(data))


def period_matrix_to_json(m):
    return {"genus": len(m),
            "matrix": [[format_rational(x) for x in row] for row in m]}


def jacobian_point_to_json(p):
    return {"coords": [format_rational(x) for x in p.coords]}


def cross_ratios_to_json(rows):
    return [{"pairs": [list(p) for p in pairing],
             "value": format_rational(v)} for pairing, v in rows]

"""Plane tropical curves: corner loci, balancing, degree, stable intersection.

A curve is a weighted 1-complex in R^2 (rational vertices, segments and
rays with positive integer weights).  Corner loci are built from the
regular subdivision of the Newton polygon induced by the coefficients:
curve vertices are dual to 2-cells, bounded edges to interior subdivision
edges, rays to boundary subdivision edges, and each weight is the lattice
length of the dual edge.
"""

import random
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError, EmptyCurve, InputError
from .geometry import (convex_hull_2d, lattice_length, primitive,
                       upper_faces_2d, upper_hull_1d, vec_sub)
from .polynomial import LatticePolytope, active_terms


class Segment(NamedTuple):
    a: int            # vertex indices
    b: int
    w: int


class Ray(NamedTuple):
    v: int            # anchor vertex index
    dir: tuple        # primitive integer direction
    w: int


class DualSubdivision:
    """Regular subdivision of the Newton polygon: cells as lattice polygons."""

    def __init__(self, polygon, cells):
        self.polygon = polygon
        self.cells = cells        # list of tuples of lattice points (hull, CCW)


class PlaneTropicalCurve:
    def __init__(self, vertices, edges, dual=None):
        self.vertices = [tuple(Fraction(c) for c in v) for v in vertices]
        for v in self.vertices:
            if len(v) != 2:
                raise InputError("curve vertices live in R^2")
        es = []
        for e in edges:
            if isinstance(e, Segment):
                if e.a == e.b:
                    raise InputError("segment endpoints must be distinct")
                if self.vertices[e.a] == self.vertices[e.b]:
                    raise InputError("segment endpoints coincide geometrically")
                es.append(Segment(e.a, e.b, int(e.w)))
            elif isinstance(e, Ray):
                es.append(Ray(e.v, primitive(e.dir), int(e.w)))
            else:
                raise InputError(f"unknown edge {e!r}")
            if es[-1].w < 1:
                raise InputError("edge weights must be >= 1")
        self.edges = es
        self.dual = dual

    def translate(self, vec):
        vec = tuple(Fraction(c) for c in vec)
        verts = [(x + vec[0], y + vec[1]) for x, y in self.vertices]
        return PlaneTropicalCurve(verts, self.edges, self.dual)

    def scale_weights(self, k):
        es = [e._replace(w=e.w * k) for e in self.edges]
        return PlaneTropicalCurve(self.vertices, es, self.dual)

    def __repr__(self):
        return (f"PlaneTropicalCurve({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges)")


def standard_line(vertex=(0, 0)):
    """The tropical line: rays (-1,0), (0,-1), (1,1) from one vertex."""
    return PlaneTropicalCurve(
        [vertex],
        [Ray(0, (-1, 0), 1), Ray(0, (0, -1), 1), Ray(0, (1, 1), 1)])


def corner_locus(f):
    """The tropical hypersurface of a 2-variable polynomial.

    Points where the max in evaluate(f, .) is attained at least twice,
    with weights from the dual subdivision.  Raises EmptyCurve when the
    function is affine (fewer than two active terms).
    """
    if f.n != 2:
        raise DomainError("corner loci are implemented for n = 2 only")
    act = active_terms(f)
    if len(act) < 2:
        raise EmptyCurve("polynomial defines an affine function")
    exps = [m.exp for m in act]
    hull = convex_hull_2d(exps)
    if len(hull) >= 3:
        return _corner_locus_2d(f)
    return _corner_locus_1d(act)


def _corner_locus_2d(f):
    exps, coeffs = f.exponents, f.coefficients
    faces = upper_faces_2d(exps, coeffs)
    verts = [(-fc.slope[0], -fc.slope[1]) for fc in faces]
    cells = []
    edge_owner = {}   # (p, q) sorted -> list of (face idx, outward normal)
    for fi, fc in enumerate(faces):
        pts = [exps[i] for i in fc.indices]
        hull = convex_hull_2d(pts)  # CCW
        cells.append(tuple(hull))
        k = len(hull)
        for i in range(k):
            p, q = hull[i], hull[(i + 1) % k]
            e = vec_sub(q, p)
            outward = (e[1], -e[0])   # right of CCW traversal
            key = (min(p, q), max(p, q))
            edge_owner.setdefault(key, []).append((fi, outward))
    edges = []
    for (p, q), owners in sorted(edge_owner.items()):
        w = lattice_length(p, q)
        if len(owners) == 2:
            edges.append(Segment(owners[0][0], owners[1][0], w))
        elif len(owners) == 1:
            fi, outward = owners[0]
            edges.append(Ray(fi, primitive(outward), w))
        else:
            raise AssertionError("subdivision edge shared by >2 cells")
    dual = DualSubdivision(LatticePolytope(exps), cells)
    return PlaneTropicalCurve(verts, edges, dual)


def _corner_locus_1d(act):
    """Degenerate Newton polygon (a segment): the locus is parallel lines."""
    exps = [m.exp for m in act]
    coeffs = [m.coeff for m in act]
    base = exps[0]
    direction = next(vec_sub(e, base) for e in exps if e != base)
    u = primitive(direction)
    axis = 0 if u[0] != 0 else 1
    ts = [(e[axis] - base[axis]) // u[axis] for e in exps]
    order = sorted(range(len(ts)), key=lambda i: ts[i])
    ts_s = [ts[i] for i in order]
    vals = [coeffs[i] for i in order]
    hull = upper_hull_1d(ts_s, vals)
    uu = u[0] * u[0] + u[1] * u[1]
    verts, edges, cells = [], [], []
    perp = (-u[1], u[0])
    for a, b in zip(hull, hull[1:]):
        s = Fraction(vals[b] - vals[a], ts_s[b] - ts_s[a])
        anchor = (Fraction(-s * u[0], uu), Fraction(-s * u[1], uu))
        vi = len(verts)
        verts.append(anchor)
        w = ts_s[b] - ts_s[a]
        edges.append(Ray(vi, perp, w))
        edges.append(Ray(vi, (-perp[0], -perp[1]), w))
        p = tuple(base[k] + ts_s[a] * u[k] for k in range(2))
        q = tuple(base[k] + ts_s[b] * u[k] for k in range(2))
        cells.append((p, q))
    dual = DualSubdivision(LatticePolytope(exps), cells)
    return PlaneTropicalCurve(verts, edges, dual)


def check_balanced(c):
    """True iff weighted primitive outgoing directions sum to zero everywhere."""
    sums = {i: [Fraction(0), Fraction(0)] for i in range(len(c.vertices))}
    for e in c.edges:
        if isinstance(e, Segment):
            d = primitive(vec_sub(c.vertices[e.b], c.vertices[e.a]))
            for v, sgn in ((e.a, 1), (e.b, -1)):
                sums[v][0] += sgn * e.w * d[0]
                sums[v][1] += sgn * e.w * d[1]
        else:
            sums[e.v][0] += e.w * e.dir[0]
            sums[e.v][1] += e.w * e.dir[1]
    return all(sx == 0 and sy == 0 for sx, sy in sums.values())


class IntersectionReport(NamedTuple):
    points: tuple      # ((x, y), multiplicity) pairs, sorted
    total: int
    perturbed: bool


def bezout_total(d1, d2):
    """Total stable intersection of curves of degrees d1, d2 (= d1*d2)."""
    d1, d2 = int(d1), int(d2)
    if d1 < 1 or d2 < 1:
        raise DomainError("degrees must be >= 1")
    return d1 * d2


def _edge_params(c):
    """(base, displacement, tmax, weight, primitive dir) per edge."""
    out = []
    for e in c.edges:
        if isinstance(e, Segment):
            a, b = c.vertices[e.a], c.vertices[e.b]
            d = vec_sub(b, a)
            out.append((a, d, Fraction(1), e.w, primitive(d)))
        else:
            v = c.vertices[e.v]
            out.append((v, tuple(Fraction(x) for x in e.dir), None, e.w, e.dir))
    return out


class _Degenerate(Exception):
    pass


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _intersections(edges1, edges2, shift):
    """Transverse intersection points of two edge sets, edges2 shifted.

    Raises _Degenerate on any non-transverse incidence (overlap, vertex
    hit, endpoint touch), which triggers a redraw of the translate.
    """
    hits = []
    for i, (b1, d1, t1max, w1, u1) in enumerate(edges1):
        for j, (b2, d2, t2max, w2, u2) in enumerate(edges2):
            b2s = (b2[0] + shift[0], b2[1] + shift[1])
            rhs = (b2s[0] - b1[0], b2s[1] - b1[1])
            det = _cross(d1, d2)
            if det == 0:
                if _cross(rhs, d1) == 0 and _overlap(b1, d1, t1max, b2s, d2, t2max):
                    raise _Degenerate
                continue
            t = _cross(rhs, d2) / det
            r = _cross(rhs, d1) / det
            inside_t = _strict_inside(t, t1max)
            inside_r = _strict_inside(r, t2max)
            if inside_t is None or inside_r is None:
                raise _Degenerate          # hits an edge endpoint exactly
            if inside_t and inside_r:
                p = (b1[0] + t * d1[0], b1[1] + t * d1[1])
                mult = w1 * w2 * abs(u1[0] * u2[1] - u1[1] * u2[0])
                hits.append(((i, j), p, mult))
    return hits


def _strict_inside(t, tmax):
    """True/False for strictly inside/outside; None when on the boundary."""
    if t == 0 or (tmax is not None and t == tmax):
        return None
    if t < 0 or (tmax is not None and t > tmax):
        return False
    return True


def _overlap(b1, d1, t1max, b2, d2, t2max):
    """Collinear edges: do their parameter intervals intersect?"""
    # express edge2 in edge1's parameter; None bounds mean unbounded
    axis = 0 if d1[0] != 0 else 1
    s0 = (b2[axis] - b1[axis]) / d1[axis]
    slope = d2[axis] / d1[axis]
    if t2max is None:
        lo2, hi2 = (s0, None) if slope > 0 else (None, s0)
    else:
        s1 = s0 + t2max * slope
        lo2, hi2 = (s0, s1) if s0 <= s1 else (s1, s0)
    lo = Fraction(0) if lo2 is None else max(Fraction(0), lo2)
    if t1max is None:
        hi = hi2
    else:
        hi = t1max if hi2 is None else min(t1max, hi2)
    return hi is None or lo <= hi


def _draw_translate(rng):
    return (Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 997)),
            Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 997)))


def stable_intersection(c1, c2, seed=0):
    """Stable intersection with lattice-index multiplicities.

    c2 is moved by a certified-generic translate tau; the run is repeated
    at tau/2 and tau/4 and the (affine in the scale) point trajectories
    are extrapolated to scale 0.  If extrapolation is inconsistent the
    perturbed points are reported with the ``perturbed`` flag set.
    """
    if not check_balanced(c1) or not check_balanced(c2):
        raise DomainError("stable intersection requires balanced curves")
    e1, e2 = _edge_params(c1), _edge_params(c2)
    rng = random.Random(seed)
    scales = (Fraction(1), Fraction(1, 2), Fraction(1, 4))
    for _ in range(64):
        tau = _draw_translate(rng)
        try:
            runs = [_intersections(e1, e2, (s * tau[0], s * tau[1]))
                    for s in scales]
        except _Degenerate:
            continue
        totals = [sum(m for _, _, m in run) for run in runs]
        if len(set(totals)) != 1:
            raise AssertionError("stable intersection total varies with scale")
        return _assemble_report(runs, scales)
    raise DomainError("could not certify a generic translate")


def _assemble_report(runs, scales):
    keysets = [{k for k, _, _ in run} for run in runs]
    by_key = [{k: (p, m) for k, p, m in run} for run in runs]
    perturbed = keysets[0] != keysets[1] or keysets[0] != keysets[2]
    merged = {}
    if not perturbed:
        for k in keysets[0]:
            pts = [by_key[i][k][0] for i in range(3)]
            v = (2 * (pts[0][0] - pts[1][0]), 2 * (pts[0][1] - pts[1][1]))
            p0 = (pts[0][0] - v[0], pts[0][1] - v[1])
            expect = (p0[0] + scales[2] * v[0], p0[1] + scales[2] * v[1])
            if expect != pts[2]:
                perturbed = True
                break
            merged[p0] = merged.get(p0, 0) + by_key[0][k][1]
    if perturbed:
        merged = {}
        for k, p, m in runs[0]:
            merged[p] = merged.get(p, 0) + m
    points = tuple(sorted(merged.items()))
    total = sum(m for _, m in points)
    return IntersectionReport(points, total, perturbed)


def degree(c, seed=0):
    """Stable intersection number with a generic standard tropical line."""
    if not check_balanced(c):
        raise DomainError("degree requires a balanced curve")
    return stable_intersection(c, standard_line(), seed=seed).total

"""Shared random generators for the test suite (seeded, exact rationals)."""

import random
from fractions import Fraction

import pytest

from tropkit import MetricGraph, RationalFunction, TropicalPolynomial


def rand_fraction(rng, num=50, den=12):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_poly_in_triangle(rng, d, full=True):
    """Random tropical polynomial with Newton polygon inside (or equal to) d*Delta."""
    pts = [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    corners = [(0, 0), (d, 0), (0, d)]
    terms = {}
    for p in pts:
        if p in corners and full:
            terms[p] = rand_fraction(rng)
        elif rng.random() < 0.6:
            terms[p] = rand_fraction(rng)
    while len(terms) < 2:
        terms[pts[rng.randrange(len(pts))]] = rand_fraction(rng)
    return TropicalPolynomial(2, terms)


def rand_graph(rng, max_genus=3, max_extra_vertices=3):
    """Random connected finite metric graph with genus <= max_genus.

    Lengths are positive integers (unit denominators), loops and parallel
    edges allowed.
    """
    nv = rng.randint(1, 2 + max_extra_vertices)
    verts = [f"v{i}" for i in range(nv)]
    edges = []
    for i in range(1, nv):  # spanning tree
        j = rng.randrange(i)
        edges.append((verts[j], verts[i], Fraction(rng.randint(1, 4))))
    for _ in range(rng.randint(0, max_genus)):  # extra cycles
        u, v = rng.choice(verts), rng.choice(verts)
        edges.append((u, v, Fraction(rng.randint(1, 4))))
    if not edges:  # single vertex: give it a loop so the graph has an edge
        edges.append((verts[0], verts[0], Fraction(rng.randint(1, 4))))
    return MetricGraph(verts, edges)


def rand_point(rng, g):
    """Random graph point: a vertex or an edge-interior point."""
    if rng.random() < 0.5:
        return ("v", rng.choice(g.vertices))
    i = rng.randrange(len(g.edges))
    L = g.edges[i].length
    k = rng.randint(0, 3)
    return g.normalize_point(("e", i, L * Fraction(k, 3) if k else Fraction(0)))


def rand_divisor_entries(rng, g, max_abs_deg=6):
    target = rng.randint(-max_abs_deg, max_abs_deg)
    entries = []
    left = abs(target)
    sgn = 1 if target >= 0 else -1
    while left > 0:
        c = rng.randint(1, left)
        entries.append((rand_point(rng, g), sgn * c))
        left -= c
    for _ in range(rng.randint(0, 2)):  # degree-0 noise
        p = rand_point(rng, g)
        c = rng.randint(1, 2)
        entries += [(p, c), (rand_point(rng, g), -c)]
    return entries


def rand_rational_function(rng, g):
    """Random PL function with integer slopes: integer values at integer
    offsets along every (integer-length) edge."""
    vals = {v: Fraction(rng.randint(-3, 3)) for v in g.vertices}
    bps = {}
    for i, e in enumerate(g.edges):
        L = int(e.length)
        pts = [(Fraction(k), Fraction(rng.randint(-3, 3)))
               for k in range(1, L)]
        if pts:
            bps[i] = pts
    return RationalFunction(g, vals, bps)


@pytest.fixture
def rng():
    return random.Random(20260826)

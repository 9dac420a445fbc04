"""Tropical curves as metric graphs, plus divisor theory via chip-firing.

The metric objects (divisors, rational functions) carry exact rational
data.  Equivalence, reduced divisors and rank are decided on a uniform
discrete model: every edge is cut into steps of a common rational length
delta so that divisor support sits on model vertices, then the classical
burning/chip-firing machinery runs on integers.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import DomainError, InputError


class Edge(NamedTuple):
    u: str
    v: str
    length: object   # Fraction, or None for an infinite leaf edge


def vertex_point(vid):
    return ("v", vid)


def edge_point(edge_index, offset):
    return ("e", int(edge_index), Fraction(offset))


class MetricGraph:
    """Connected finite graph with positive rational (or infinite) lengths."""

    def __init__(self, vertices, edges):
        self.vertices = tuple(dict.fromkeys(vertices))
        if not self.vertices:
            raise InputError("graph needs at least one vertex")
        vset = set(self.vertices)
        es = []
        for e in edges:
            u, v, ln = e
            if u not in vset or v not in vset:
                raise InputError(f"edge endpoint missing: {e!r}")
            if ln is not None:
                ln = Fraction(ln)
                if ln <= 0:
                    raise InputError("edge lengths must be positive")
            es.append(Edge(u, v, ln))
        self.edges = tuple(es)
        if not self._connected():
            raise InputError("graph must be connected")
        for i, e in enumerate(self.edges):
            if e.length is None and min(self.valence(e.u), self.valence(e.v)) != 1:
                raise InputError("infinite edges must end at a leaf")

    def _connected(self):
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        adj = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == len(self.vertices)

    def valence(self, vid):
        n = 0
        for e in self.edges:
            n += (e.u == vid) + (e.v == vid)
        return n

    @property
    def has_infinite_edges(self):
        return any(e.length is None for e in self.edges)

    def finite_only(self, what):
        if self.has_infinite_edges:
            raise DomainError(f"{what} requires all edge lengths finite")

    def normalize_point(self, p):
        """Canonical GraphPoint: boundary offsets collapse to vertices."""
        if p[0] == "v":
            if p[1] not in set(self.vertices):
                raise InputError(f"unknown vertex {p[1]!r}")
            return p
        _, i, off = p
        if not 0 <= i < len(self.edges):
            raise InputError(f"edge index {i} out of range")
        e = self.edges[i]
        off = Fraction(off)
        if off == 0:
            return ("v", e.u)
        if e.length is not None and off == e.length:
            return ("v", e.v)
        if off < 0 or (e.length is not None and off > e.length):
            raise InputError(f"offset {off} outside edge {i}")
        if e.length is None:
            raise DomainError("points on infinite edges are not supported")
        return ("e", i, off)

    def __repr__(self):
        return f"MetricGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def genus(g):
    """First Betti number #E - #V + 1."""
    return len(g.edges) - len(g.vertices) + 1


class Divisor:
    """Finite integer combination of graph points; zero entries dropped."""

    def __init__(self, graph, entries=()):
        self.graph = graph
        d = {}
        items = entries.items() if hasattr(entries, "items") else entries
        for p, c in items:
            p = graph.normalize_point(p)
            c = int(c)
            d[p] = d.get(p, 0) + c
        self.entries = {p: c for p, c in sorted(d.items(), key=repr) if c != 0}

    @property
    def degree(self):
        return sum(self.entries.values())

    def support(self):
        return list(self.entries)

    def __eq__(self, other):
        return (isinstance(other, Divisor) and self.graph is other.graph
                and self.entries == other.entries)

    def __add__(self, other):
        self._same(other)
        out = dict(self.entries)
        for p, c in other.entries.items():
            out[p] = out.get(p, 0) + c
        return Divisor(self.graph, out)

    def __neg__(self):
        return Divisor(self.graph, {p: -c for p, c in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def _same(self, other):
        if self.graph is not other.graph:
            raise DomainError("divisors live on different graphs")

    def __repr__(self):
        return f"Divisor({self.entries})"


def canonical_divisor(g):
    """K = sum over vertices of (valence - 2); loops count twice."""
    g.finite_only("the canonical divisor")
    return Divisor(g, {("v", v): g.valence(v) - 2 for v in g.vertices})


class RationalFunction:
    """Piecewise-linear function with integer slopes on a refinement.

    ``vertex_values`` gives the value at every graph vertex;
    ``breakpoints`` maps edge index -> sorted (offset, value) pairs at
    interior 2-valent refinement vertices.
    """

    def __init__(self, graph, vertex_values, breakpoints=None):
        graph.finite_only("rational functions")
        self.graph = graph
        self.vertex_values = {v: Fraction(vertex_values[v]) for v in graph.vertices}
        self.breakpoints = {}
        for i, pts in (breakpoints or {}).items():
            pts = sorted((Fraction(o), Fraction(val)) for o, val in pts)
            e = graph.edges[i]
            for o, _ in pts:
                if not 0 < o < e.length:
                    raise InputError("breakpoint offset must be interior")
            if len({o for o, _ in pts}) != len(pts):
                raise InputError("duplicate breakpoint offsets")
            if pts:
                self.breakpoints[i] = pts
        for i in range(len(graph.edges)):
            for (o1, v1), (o2, v2) in zip(self._profile(i), self._profile(i)[1:]):
                if (v2 - v1) % (o2 - o1) != 0:
                    raise InputError(
                        f"non-integer slope on edge {i} between offsets {o1} and {o2}")

    def _profile(self, i):
        e = self.graph.edges[i]
        pts = [(Fraction(0), self.vertex_values[e.u])]
        pts += self.breakpoints.get(i, [])
        pts.append((e.length, self.vertex_values[e.v]))
        return pts

    @classmethod
    def constant(cls, graph, value=0):
        return cls(graph, {v: value for v in graph.vertices})


def divisor_of(phi):
    """Zeros minus poles: at each point, the sum of outgoing slopes."""
    g = phi.graph
    coeffs = {}

    def bump(point, c):
        if c:
            coeffs[point] = coeffs.get(point, 0) + c

    for i in range(len(g.edges)):
        prof = phi._profile(i)
        e = g.edges[i]
        # outgoing slope at u along this edge, and at v
        (o0, v0), (o1, v1) = prof[0], prof[1]
        bump(("v", e.u), (v1 - v0) // (o1 - o0))
        (o0, v0), (o1, v1) = prof[-2], prof[-1]
        bump(("v", e.v), (v0 - v1) // (o1 - o0))
        for k in range(1, len(prof) - 1):
            (oa, va), (ob, vb), (oc, vc) = prof[k - 1], prof[k], prof[k + 1]
            out = (va - vb) // (ob - oa) + (vc - vb) // (oc - ob)
            bump(("e", i, ob), out)
    return Divisor(g, coeffs)


def _frac_gcd(a, b):
    a, b = Fraction(a), Fraction(b)
    return Fraction(gcd(a.numerator * b.denominator, b.numerator * a.denominator),
                    a.denominator * b.denominator)


class DiscreteModel:
    """Uniform subdivision: every edge becomes a chain of equal steps.

    The step delta divides all edge lengths and all requested offsets, so
    divisor support lands exactly on model vertices.
    """

    def __init__(self, graph, points=()):
        graph.finite_only("discrete models")
        self.graph = graph
        vals = [e.length for e in graph.edges]
        for p in points:
            p = graph.normalize_point(p)
            if p[0] == "e":
                vals.append(p[2])
        delta = vals[0] if vals else Fraction(1)
        for v in vals[1:]:
            delta = _frac_gcd(delta, v)
        # a loop collapsed to a single step would become a self-loop of the
        # model, and chip-firing rank needs a loopless graph
        while any(e.u == e.v and e.length / delta < 2 for e in graph.edges):
            delta /= 2
        self.delta = delta
        self.names = [("v", v) for v in graph.vertices]
        chains = []
        for i, e in enumerate(graph.edges):
            steps = int(e.length / delta)
            mids = [("e", i, k * delta) for k in range(1, steps)]
            self.names.extend(mids)
            chains.append([("v", e.u)] + mids + [("v", e.v)])
        self.index = {p: k for k, p in enumerate(self.names)}
        self.adj = [dict() for _ in self.names]  # neighbor -> multiplicity
        for chain in chains:
            for pa, pb in zip(chain, chain[1:]):
                a, b = self.index[pa], self.index[pb]
                self.adj[a][b] = self.adj[a].get(b, 0) + 1
                self.adj[b][a] = self.adj[b].get(a, 0) + 1

    @property
    def n(self):
        return len(self.names)

    def divisor_vector(self, D):
        vec = [0] * self.n
        for p, c in D.entries.items():
            vec[self.index[p]] += c
        return vec

    def to_divisor(self, vec):
        return Divisor(self.graph,
                       {self.names[i]: c for i, c in enumerate(vec) if c})

    def distances_from(self, q):
        dist = [None] * self.n
        dist[q] = 0
        frontier = [q]
        while frontier:
            nxt = []
            for v in frontier:
                for w in self.adj[v]:
                    if dist[w] is None:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    def reduce(self, vec, q):
        """The unique q-reduced divisor equivalent to ``vec``."""
        d = list(vec)
        dist = self.distances_from(q)
        maxd = max(dist)
        # phase 1: pull debt inward; unfiring {dist >= k} never hurts
        # anything at distance >= k and fixes distance-k vertices.
        for k in range(maxd, 0, -1):
            level = [v for v in range(self.n) if dist[v] == k]
            need = 0
            for v in level:
                if d[v] < 0:
                    cut = sum(m for w, m in self.adj[v].items() if dist[w] < k)
                    need = max(need, (-d[v] + cut - 1) // cut)
            if need:
                inside = [v for v in range(self.n) if dist[v] >= k]
                self._fire_set(d, inside, -need)   # unfire
        # phase 2: Dhar burning from q
        while True:
            burnt = self._burn(d, q)
            if len(burnt) == self.n:
                return d
            unburnt = [v for v in range(self.n) if v not in burnt]
            self._fire_set(d, unburnt, 1)

    def _fire_set(self, d, subset, times):
        """Fire every vertex of the subset ``times`` times (negative: unfire)."""
        s = set(subset)
        for v in range(self.n):
            boundary = sum(m for w, m in self.adj[v].items()
                           if (w in s) != (v in s))
            d[v] += (-times if v in s else times) * boundary

    def _burn(self, d, q):
        burnt = {q}
        changed = True
        while changed:
            changed = False
            for v in range(self.n):
                if v in burnt:
                    continue
                heat = sum(m for w, m in self.adj[v].items() if w in burnt)
                if heat > d[v]:
                    burnt.add(v)
                    changed = True
        return burnt


def reduced_divisor(D, q):
    """q-reduced representative of the class of D (on the metric graph)."""
    g = D.graph
    q = g.normalize_point(q)
    model = DiscreteModel(g, list(D.entries) + [q])
    vec = model.reduce(model.divisor_vector(D), model.index[q])
    return model.to_divisor(vec)


def linearly_equivalent(D1, D2):
    """True iff D1 - D2 is the divisor of a rational function."""
    D1._same(D2)
    if D1.degree != D2.degree:
        return False
    g = D1.graph
    q = ("v", g.vertices[0])
    model = DiscreteModel(g, list(D1.entries) + list(D2.entries) + [q])
    qi = model.index[q]
    r1 = model.reduce(model.divisor_vector(D1), qi)
    r2 = model.reduce(model.divisor_vector(D2), qi)
    return r1 == r2


def rank(D, _model=None):
    """Baker-Norine rank, computed on the uniform discrete model.

    Largest k such that subtracting any effective degree-k divisor on the
    model vertex set leaves a class with an effective representative
    (model vertices are a rank-determining set).
    """
    if D.degree < 0:
        return -1
    model = _model or DiscreteModel(D.graph, list(D.entries))
    qi = 0
    memo = {}

    def rec(vec):
        if sum(vec) < 0:
            return -1
        red = tuple(model.reduce(vec, qi))
        if red[qi] < 0:
            return -1
        if red in memo:
            return memo[red]
        memo[red] = 0            # placeholder against cycles (none expected)
        best = None
        for v in range(model.n):
            child = list(red)
            child[v] -= 1
            r = rec(child)
            if r == -1:
                memo[red] = 0
                return 0
            best = r if best is None else min(best, r)
        memo[red] = 1 + best
        return memo[red]

    return rec(model.divisor_vector(D))


def riemann_roch_check(D):
    """rank(D) - rank(K - D) == deg D - g + 1 (should always hold)."""
    g = D.graph
    K = canonical_divisor(g)
    model = DiscreteModel(g, list(D.entries))
    lhs = rank(D, _model=model) - rank(K - D, _model=model)
    return lhs == D.degree - genus(g) + 1


def modify(g, p, leaf_id=None):
    """Elementary tropical modification: attach an infinite leaf at p."""
    p = g.normalize_point(p)
    leaf_id = leaf_id or _fresh_id(g, "leaf")
    if p[0] == "v":
        verts = list(g.vertices) + [leaf_id]
        edges = list(g.edges) + [Edge(p[1], leaf_id, None)]
        return MetricGraph(verts, edges)
    _, i, off = p
    e = g.edges[i]
    mid = _fresh_id(g, "cut")
    verts = list(g.vertices) + [mid, leaf_id]
    edges = [x for j, x in enumerate(g.edges) if j != i]
    edges += [Edge(e.u, mid, off), Edge(mid, e.v, e.length - off),
              Edge(mid, leaf_id, None)]
    return MetricGraph(verts, edges)


def contract_leaf(g, leaf_vertex):
    """Inverse modification: drop an infinite leaf, smoothing its anchor."""
    touching = [i for i, e in enumerate(g.edges) if leaf_vertex in (e.u, e.v)]
    if len(touching) != 1 or g.edges[touching[0]].length is not None:
        raise DomainError(f"{leaf_vertex!r} is not the tip of an infinite leaf")
    i = touching[0]
    e = g.edges[i]
    anchor = e.v if e.u == leaf_vertex else e.u
    verts = [v for v in g.vertices if v != leaf_vertex]
    edges = [x for j, x in enumerate(g.edges) if j != i]
    # smooth the anchor if it became a plain 2-valent subdivision point
    incident = [j for j, x in enumerate(edges) if anchor in (x.u, x.v)]
    if (len(incident) == 2 and len(verts) > 1
            and all(edges[j].length is not None for j in incident)
            and all(edges[j].u != edges[j].v for j in incident)):
        a, b = (edges[j] for j in incident)
        end_a = a.u if a.v == anchor else a.v
        end_b = b.u if b.v == anchor else b.v
        merged = Edge(end_a, end_b, a.length + b.length)
        edges = [x for j, x in enumerate(edges) if j not in incident] + [merged]
        verts = [v for v in verts if v != anchor]
    return MetricGraph(verts, edges)


def trees_equivalent(t1, t2):
    """All compact metric trees are related by modifications."""
    return genus(t1) == 0 and genus(t2) == 0


def _fresh_id(g, stem):
    k = 0
    taken = set(g.vertices)
    while f"{stem}{k}" in taken:
        k += 1
    return f"{stem}{k}"


def isometric(g1, g2):
    """Brute-force isometry test for small graphs (test helper scale)."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    from itertools import permutations

    def multiset(g, relabel):
        out = []
        for e in g.edges:
            a, b = relabel[e.u], relabel[e.v]
            out.append((min(a, b), max(a, b), e.length))
        return sorted(out, key=repr)

    ids2 = list(g2.vertices)
    base = multiset(g2, {v: k for k, v in enumerate(ids2)})
    for perm in permutations(range(len(ids2))):
        relabel = {v: perm[k] for k, v in enumerate(g1.vertices)}
        if multiset(g1, relabel) == base:
            return True
    return False

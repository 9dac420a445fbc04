"""Period lattices and the Abel-Jacobi map on degree-0 divisors.

Regular 1-forms correspond to cycles of the graph under the edge-length
pairing, so the Jacobian is R^g modulo the image of the Gram matrix of a
spanning-tree cycle basis.  Infinite leaf edges carry no cycles (every
regular form vanishes there) and are ignored.
"""

from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError
from .geometry import solve_linear
from .metricgraph import genus


class JacobianPoint(NamedTuple):
    coords: tuple    # Fractions, length g; compared modulo the period lattice


class Jacobian:
    """Cycle basis, period matrix and integration map for one graph."""

    def __init__(self, graph):
        self.graph = graph
        self.finite_edges = [i for i, e in enumerate(graph.edges)
                             if e.length is not None]
        self._build_tree()
        self.cycles = [self._chord_cycle(i) for i in self.chords]
        self.genus = len(self.cycles)
        g = self.genus
        self.period_matrix = [
            [sum(graph.edges[i].length * ci.get(i, 0) * cj.get(i, 0)
                 for i in self.finite_edges)
             for cj in self.cycles]
            for ci in self.cycles]

    def _build_tree(self):
        g = self.graph
        parent = {g.vertices[0]: None}      # vertex -> (prev vertex, edge idx, sign)
        order = [g.vertices[0]]
        adj = {v: [] for v in g.vertices}
        for i in self.finite_edges:
            e = g.edges[i]
            adj[e.u].append((e.v, i, 1))
            adj[e.v].append((e.u, i, -1))
        tree_edges = set()
        k = 0
        while k < len(order):
            v = order[k]
            k += 1
            for w, i, sgn in adj[v]:
                if w not in parent and w != g.vertices[0]:
                    parent[w] = (v, i, sgn)
                    tree_edges.add(i)
                    order.append(w)
        if len(parent) != len(g.vertices):
            raise DomainError("finite part of the graph must be connected")
        self.parent = parent
        self.tree_edges = tree_edges
        self.chords = [i for i in self.finite_edges if i not in tree_edges]

    def _path_to_root(self, v):
        """Edge chain from the root to v: dict edge -> signed multiplicity."""
        chain = {}
        while self.parent[v] is not None:
            prev, i, sgn = self.parent[v]
            chain[i] = chain.get(i, 0) + sgn   # traversed u->v direction = +1
            v = prev
        return chain

    def _chord_cycle(self, i):
        e = self.graph.edges[i]
        cyc = {i: 1}
        for edge, mult in self._path_to_root(e.v).items():
            cyc[edge] = cyc.get(edge, 0) - mult
        for edge, mult in self._path_to_root(e.u).items():
            cyc[edge] = cyc.get(edge, 0) + mult
        return {k: v for k, v in cyc.items() if v}

    def abel_jacobi(self, D):
        """Integrate a 1-chain bounding D against the cycle basis.

        Chains run from a fixed root to each support point, so the result
        is well defined modulo the period lattice.
        """
        if D.degree != 0:
            raise DomainError("Abel-Jacobi is defined on degree-0 divisors")
        self.graph.finite_only("Abel-Jacobi integration")
        chain = {}           # edge -> rational signed length fraction
        for p, c in D.entries.items():
            for i, t in self._chain_to_point(p).items():
                chain[i] = chain.get(i, 0) + c * t
        coords = tuple(
            sum(self.graph.edges[i].length * cyc.get(i, 0) * t
                for i, t in chain.items())
            for cyc in self.cycles)
        return JacobianPoint(coords)

    def _chain_to_point(self, p):
        """Path from the root to p as edge -> signed traversed fraction."""
        if p[0] == "v":
            return {i: Fraction(m) for i, m in self._path_to_root(p[1]).items()}
        _, i, off = p
        e = self.graph.edges[i]
        chain = {k: Fraction(m) for k, m in self._path_to_root(e.u).items()}
        chain[i] = chain.get(i, 0) + Fraction(off) / e.length
        return chain

    @property
    def zero(self):
        return JacobianPoint(tuple(Fraction(0) for _ in range(self.genus)))

    def equal(self, p1, p2):
        """Equality in the Jacobian: difference in the period lattice."""
        if len(p1.coords) != self.genus or len(p2.coords) != self.genus:
            raise DomainError("genus mismatch")
        if self.genus == 0:
            return True
        diff = [a - b for a, b in zip(p1.coords, p2.coords)]
        z = solve_linear(self.period_matrix, diff)
        if z is None:
            raise AssertionError("period matrix is singular")
        return all(x.denominator == 1 for x in z)


def period_matrix(graph):
    """Gram matrix of a spanning-tree cycle basis under edge lengths."""
    return Jacobian(graph).period_matrix


def abel_jacobi(D):
    return Jacobian(D.graph).abel_jacobi(D)


def jac_equal(graph, p1, p2):
    return Jacobian(graph).equal(p1, p2)

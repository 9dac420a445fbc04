"""Counting plane curves of degree d and genus g via floor diagrams.

A floor diagram has d linearly ordered floors and weighted edges directed
up the order, is connected with first Betti number g, and has divergence
(weighted out minus in) at most 1 at every floor.  Completing each floor
with 1 - div(v) unit-weight infinite elevator edges makes every
divergence exactly 1; a marking is a linear extension of the resulting
partial order on floors and edges, counted up to automorphisms that
permute identical parallel edges.  The count of curves through 3d-1+g
generic points is the sum over marked diagrams of the product of the
squared bounded-edge weights; the WDVV recursion and the node
polynomials serve as independent oracles.
"""

from functools import lru_cache
from math import comb, factorial
from typing import NamedTuple

from .errors import DomainError, InputError

DEFAULT_MAX_DEGREE = 6


class FloorDiagram(NamedTuple):
    d: int
    g: int
    edges: tuple        # sorted ((u, v, w), ...) with 1 <= u < v <= d

    def divergence(self, v):
        return (sum(w for a, b, w in self.edges if a == v)
                - sum(w for a, b, w in self.edges if b == v))

    def multiplicity(self):
        m = 1
        for _, _, w in self.edges:
            m *= w * w
        return m


def enumerate_floor_diagrams(d, g, max_degree=DEFAULT_MAX_DEGREE):
    """All floor diagrams of degree d and genus g, canonically ordered."""
    d, g = int(d), int(g)
    if d < 1:
        raise DomainError("degree must be >= 1")
    if d > max_degree:
        raise DomainError(f"degree {d} above cap {max_degree}; raise the cap")
    if g < 0 or g > (d - 1) * (d - 2) // 2:
        return []
    n_edges = d - 1 + g
    pairs = [(u, v) for u in range(1, d) for v in range(u + 1, d + 1)]
    out = []

    max_w = max(d - 1, 1)   # any edge weight is at most the flow of some cut

    def backtrack(pi, chosen, remaining, out_w, in_w):
        if pi == len(pairs):
            if remaining == 0:
                fd = FloorDiagram(d, g, tuple(sorted(chosen)))
                if _connected(fd) and all(fd.divergence(v) <= 1
                                          for v in range(1, d + 1)):
                    out.append(fd)
            return
        u, v = pairs[pi]
        last_of_u = pi + 1 == len(pairs) or pairs[pi + 1][0] > u
        for mult in _weight_multisets(remaining, max_w):
            ow = dict(out_w)
            iw = dict(in_w)
            for w in mult:
                ow[u] = ow.get(u, 0) + w
                iw[v] = iw.get(v, 0) + w
            # in-edges of u all come from earlier pairs, so once the last
            # pair (u, *) is chosen the divergence of u is final
            if last_of_u and ow.get(u, 0) - iw.get(u, 0) > 1:
                continue
            backtrack(pi + 1, chosen + [(u, v, w) for w in mult],
                      remaining - len(mult), ow, iw)

    backtrack(0, [], n_edges, {}, {})
    return sorted(out)


def _weight_multisets(max_count, max_weight):
    """Nonincreasing weight tuples of every size up to max_count."""
    results = [()]

    def rec(prefix, cap):
        if len(prefix) == max_count:
            return
        for w in range(1, cap + 1):
            results.append(prefix + (w,))
            rec(prefix + (w,), w)

    rec((), max_weight)
    return results


def _connected(fd):
    if fd.d == 1:
        return True
    adj = {v: set() for v in range(1, fd.d + 1)}
    for u, v, _ in fd.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, frontier = {1}, [1]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == fd.d


def count_markings(fd):
    """Linear extensions of the marked-element order, modulo symmetry.

    Elements are the floors (a fixed chain), the bounded edges (strictly
    between their endpoints) and the completing infinite edges (anywhere
    after their floor).  Identical parallel edges are interchangeable.
    """
    classes = {}     # (lower floor, upper floor or None) -> list of weights
    for u, v, w in fd.edges:
        classes.setdefault((u, v), []).append(w)
    for v in range(1, fd.d + 1):
        ends = 1 - fd.divergence(v)
        if ends < 0:
            raise AssertionError("divergence above 1 slipped through")
        for _ in range(ends):
            classes.setdefault((v, None), []).append(1)
    keys = sorted(classes, key=lambda k: (k[0], k[1] or 10**9))
    sizes = [len(classes[k]) for k in keys]

    from functools import lru_cache

    @lru_cache(maxsize=None)
    def ways(k, placed):
        # k floors placed, placed[i] elements of class i placed
        if k == fd.d and all(p == s for p, s in zip(placed, sizes)):
            return 1
        total = 0
        # place floor k+1: every class ending at k+1 must be exhausted
        if k < fd.d:
            if all(p == s for (u, v), p, s in zip(keys, placed, sizes)
                   if v == k + 1):
                total += ways(k + 1, placed)
        for i, (u, v) in enumerate(keys):
            if placed[i] < sizes[i] and u <= k and (v is None or v > k):
                nxt = list(placed)
                nxt[i] += 1
                total += ways(k, tuple(nxt))
        return total

    base = ways(0, tuple(0 for _ in keys))
    # classes treated as indistinct above; distinct weights within a class
    # interleave in multinomially many ways, identical ones in one
    sym = 1
    for k in keys:
        counts = {}
        for w in classes[k]:
            counts[w] = counts.get(w, 0) + 1
        m = factorial(len(classes[k]))
        for c in counts.values():
            m //= factorial(c)
        sym *= m
    return base * sym


def count_curves(d, g, max_degree=DEFAULT_MAX_DEGREE):
    """Number of degree-d genus-g plane curves through 3d-1+g generic points."""
    total = 0
    for fd in enumerate_floor_diagrams(d, g, max_degree=max_degree):
        total += fd.multiplicity() * count_markings(fd)
    return total


@lru_cache(maxsize=None)
def kontsevich_N(d):
    """Rational curve counts N_d from the WDVV recursion (exact integers)."""
    d = int(d)
    if d < 1:
        raise DomainError("degree must be >= 1")
    if d == 1:
        return 1
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += (kontsevich_N(d1) * kontsevich_N(d2) * d1 * d1 * d2
                  * (d2 * comb(3 * d - 4, 3 * d1 - 2)
                     - d1 * comb(3 * d - 4, 3 * d1 - 1)))
    return total


def node_polynomial(d, delta):
    """Severi degrees for curves with few nodes (test oracle)."""
    if delta == 0:
        return 1
    if delta == 1:
        return 3 * (d - 1) ** 2
    if delta == 2:
        num = 3 * (d - 1) * (d - 2) * (3 * d * d - 3 * d - 11)
        assert num % 2 == 0
        return num // 2
    raise DomainError("node polynomial implemented for delta <= 2")


class TropicalTree:
    """Tree with labeled infinite leaves and rational inner edge lengths.

    Points of the moduli of rational tropical curves with k marked ends.
    """

    def __init__(self, graph, leaf_labels=None):
        from .metricgraph import genus as graph_genus
        if graph_genus(graph) != 0:
            raise InputError("a tropical tree must have genus 0")
        self.graph = graph
        if leaf_labels is None:
            leaf_labels = sorted(
                {e.u if graph.valence(e.u) == 1 else e.v
                 for e in graph.edges if e.length is None})
        self.leaves = list(leaf_labels)
        if len(set(self.leaves)) != len(self.leaves):
            raise InputError("repeated leaf labels")
        for leaf in self.leaves:
            if graph.valence(leaf) != 1:
                raise InputError(f"leaf {leaf!r} is not 1-valent")


def cross_ratios(tree):
    """Signed common path lengths for all disjoint leaf-pair configurations.

    For leaves {a < b < c < d} the three pairings (ab|cd), (ac|bd),
    (ad|bc) are each measured once: the shared segment of the two tree
    paths, positive when both paths traverse it the same way.
    """
    from itertools import combinations
    if len(tree.leaves) < 4:
        raise DomainError("cross-ratios need at least 4 labeled leaves")
    g = tree.graph
    paths = {}
    for x, y in combinations(tree.leaves, 2):
        paths[(x, y)] = _tree_path(g, x, y)
    out = []
    for quad in combinations(tree.leaves, 4):
        a, b, c, d = quad
        for (p, q), (r, s) in (((a, b), (c, d)), ((a, c), (b, d)),
                               ((a, d), (b, c))):
            val = _shared_length(g, _get_path(paths, p, q), _get_path(paths, r, s))
            out.append((((p, q), (r, s)), val))
    return out


def _get_path(paths, x, y):
    if (x, y) in paths:
        return paths[(x, y)]
    return [(i, -s) for i, s in reversed(paths[(y, x)])]


def _tree_path(g, x, y):
    """Edge path x -> y as (edge index, +1/-1 for u->v direction)."""
    prev = {x: None}
    frontier = [x]
    while frontier:
        nxt = []
        for v in frontier:
            for i, e in enumerate(g.edges):
                for a, b, s in ((e.u, e.v, 1), (e.v, e.u, -1)):
                    if a == v and b not in prev:
                        prev[b] = (v, i, s)
                        nxt.append(b)
        frontier = nxt
    path = []
    v = y
    while prev[v] is not None:
        pv, i, s = prev[v]
        path.append((i, s))
        v = pv
    return list(reversed(path))


def _shared_length(g, path1, path2):
    d1 = dict(path1)
    total = 0
    for i, s in path2:
        if i in d1 and g.edges[i].length is not None:
            total += d1[i] * s * g.edges[i].length
    return total

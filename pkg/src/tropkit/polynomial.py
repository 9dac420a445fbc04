"""Tropical Laurent polynomials in n variables.

A polynomial is a finite set of monomials (integer exponent vector,
finite rational coefficient); its value at x is max over terms of
coeff + exp.x.  Terms are kept sorted by exponent so structural equality
is canonical; functional equality goes through the upper-hull
concavification of the lifted exponent set.
"""

from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .errors import DomainError, InputError
from .geometry import (affine_dim, _barycentric, concavified_value,
                       convex_hull_2d)
from .semiring import TropicalScalar


class Monomial(NamedTuple):
    exp: tuple
    coeff: Fraction


class LatticePolytope:
    """Extreme points of the convex hull of a set of integer vectors."""

    def __init__(self, points):
        pts = [tuple(int(x) for x in p) for p in points]
        if not pts:
            raise InputError("empty point set")
        self.dim_ambient = len(pts[0])
        self.vertices = tuple(sorted(_extreme_points(pts)))

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope({list(self.vertices)})"


def _extreme_points(pts):
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    n = len(pts[0])
    if n == 1:
        return [pts[0], pts[-1]]
    if n == 2:
        return convex_hull_2d(pts)
    out = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if not _in_convex_hull(p, others):
            out.append(p)
    return out


def _in_convex_hull(p, pts):
    n = len(p)
    target = tuple(Fraction(x) for x in p)
    for size in range(1, n + 2):
        for sub in combinations(pts, size):
            if affine_dim(sub) != size - 1:
                continue
            lam = _barycentric(list(sub), target)
            if lam is not None and all(l >= 0 for l in lam):
                return True
    return False


class TropicalPolynomial:
    """Finite nonempty map from integer exponent vectors to rationals."""

    def __init__(self, n, terms):
        """``terms``: mapping exp -> coeff, or iterable of (exp, coeff)."""
        self.n = int(n)
        if self.n < 1:
            raise InputError("dimension must be >= 1")
        items = terms.items() if hasattr(terms, "items") else list(terms)
        seen = {}
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.n:
                raise InputError(f"exponent {exp} has wrong length for n={self.n}")
            if exp in seen:
                raise InputError(f"duplicate exponent {exp}")
            seen[exp] = Fraction(coeff)
        if not seen:
            raise InputError("a tropical polynomial needs at least one term")
        self.terms = tuple(Monomial(e, c) for e, c in sorted(seen.items()))

    @property
    def exponents(self):
        return [m.exp for m in self.terms]

    @property
    def coefficients(self):
        return [m.coeff for m in self.terms]

    def __eq__(self, other):
        return (isinstance(other, TropicalPolynomial)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.terms))

    def __repr__(self):
        body = ", ".join(f"{m.exp}:{m.coeff}" for m in self.terms)
        return f"TropicalPolynomial(n={self.n}, {{{body}}})"


def evaluate(f, x):
    """max over terms of coeff + exp.x; always finite."""
    if len(x) != f.n:
        raise DomainError(f"point has length {len(x)}, expected {f.n}")
    xs = [Fraction(v) for v in x]
    best = None
    for exp, coeff in f.terms:
        v = coeff + sum(e * t for e, t in zip(exp, xs))
        if best is None or v > best:
            best = v
    return TropicalScalar(best)


def trop_product(f, g):
    """Tropical product: evaluate(f*g, x) = evaluate(f,x) + evaluate(g,x)."""
    if f.n != g.n:
        raise DomainError("dimension mismatch")
    out = {}
    for ef, cf in f.terms:
        for eg, cg in g.terms:
            e = tuple(a + b for a, b in zip(ef, eg))
            c = cf + cg
            if e not in out or c > out[e]:
                out[e] = c
    return TropicalPolynomial(f.n, out)


def newton_polytope(f):
    """Convex hull of the exponent vectors."""
    return LatticePolytope(f.exponents)


def concavify(f, j):
    """Upper-hull value above lattice point j, or None outside the hull."""
    return concavified_value(f.exponents, f.coefficients, tuple(j))


def active_terms(f):
    """Terms whose lifted point lies on the upper hull.

    Exactly these terms attain the max somewhere in R^n (a term buried
    strictly below the hull is beaten everywhere).
    """
    exps, coeffs = f.exponents, f.coefficients
    return [m for m in f.terms
            if concavified_value(exps, coeffs, m.exp) == m.coeff]


def restrict_to_active(f):
    return TropicalPolynomial(f.n, [(m.exp, m.coeff) for m in active_terms(f)])


def functionally_equal(f, g):
    """True iff f and g define the same function on R^n.

    Decided exactly: same Newton polytope and equal concavified values at
    the union of the exponent sets (the hull of each side is determined
    by its values there).
    """
    if f.n != g.n:
        raise DomainError("dimension mismatch")
    if newton_polytope(f) != newton_polytope(g):
        return False
    support = set(f.exponents) | set(g.exponents)
    fe, fc = f.exponents, f.coefficients
    ge, gc = g.exponents, g.coefficients
    return all(concavified_value(fe, fc, j) == concavified_value(ge, gc, j)
               for j in support)

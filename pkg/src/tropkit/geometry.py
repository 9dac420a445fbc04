"""Exact lattice and polyhedral helpers.

Everything here is integer/Fraction arithmetic; no floats.  The 2D upper
hull of lifted exponent points is the workhorse: it induces the regular
subdivision of a Newton polygon dual to a plane tropical curve.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vec_scale(a, s):
    return tuple(s * x for x in a)


def primitive(v):
    """Primitive integer vector parallel to v (rational entries allowed).

    The sign is kept: primitive(v) points the same way as v.
    """
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        raise ValueError("zero vector has no primitive form")
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def lattice_length(p, q):
    """Number of lattice points on segment [p, q] minus one."""
    d = vec_sub(q, p)
    g = 0
    for x in d:
        g = gcd(g, abs(x))
    return g


def cross2(o, a, b):
    """Signed area*2 of triangle o,a,b."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points):
    """Extreme points of a planar point set, counterclockwise.

    Collinear boundary points are dropped.  Degenerate inputs return the
    extreme points of the segment (2) or the single point (1).
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # all points collinear
        return [pts[0], pts[-1]]
    return hull


def solve_linear(rows, rhs):
    """Solve a square rational linear system exactly.

    Returns the solution vector of Fractions, or None if singular.
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def affine_dim(points):
    """Dimension of the affine hull of integer/rational points."""
    pts = list(map(tuple, points))
    if not pts:
        return -1
    base = pts[0]
    vecs = []
    dim = 0
    for p in pts[1:]:
        v = vec_sub(p, base)
        v = _reduce_against(v, vecs)
        if any(x != 0 for x in v):
            vecs.append(v)
            dim += 1
            if dim == len(base):
                break
    return dim


def _reduce_against(v, basis):
    v = [Fraction(x) for x in v]
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x != 0)
        if v[piv] != 0:
            f = v[piv] / b[piv]
            v = [x - f * y for x, y in zip(v, b)]
    return tuple(v)


def concavified_value(exps, coeffs, j):
    """Value above lattice point j of the upper hull of the lifted exponents.

    Computed by Caratheodory: the optimum is attained on an affinely
    independent subset of at most n+1 exponents whose convex hull
    contains j.  Returns None if j is outside the convex hull.
    """
    n = len(j)
    j = tuple(Fraction(x) for x in j)
    best = None
    idx = list(range(len(exps)))
    for size in range(1, n + 2):
        for sub in combinations(idx, size):
            pts = [exps[i] for i in sub]
            if affine_dim(pts) != size - 1:
                continue
            lam = _barycentric(pts, j)
            if lam is None or any(l < 0 for l in lam):
                continue
            val = sum(l * coeffs[i] for l, i in zip(lam, sub))
            if best is None or val > best:
                best = val
    return best


def _barycentric(pts, j):
    """Coefficients lam >= 0 summing to 1 with sum lam_i pts_i = j, or None."""
    m = len(pts)
    n = len(j)
    rows = [[Fraction(pts[i][k]) for i in range(m)] for k in range(n)]
    rows.append([Fraction(1)] * m)
    rhs = list(j) + [Fraction(1)]
    # Overdetermined in general: solve on a row basis, verify the rest.
    sol = _solve_least_rank(rows, rhs, m)
    if sol is None:
        return None
    for row, b in zip(rows, rhs):
        if sum(r * s for r, s in zip(row, sol)) != b:
            return None
    return sol


def _solve_least_rank(rows, rhs, m):
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][c]
        aug[r] = [x / inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][m] != 0:
            return None
    sol = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        sol[c] = aug[i][m]
    return sol


class UpperFace:
    """A cell of the regular subdivision induced by lifted coefficients.

    ``indices`` are the positions of the exponents lying on the face and
    ``slope`` is the gradient alpha of its supporting plane z = alpha.x + c.
    """

    __slots__ = ("indices", "slope")

    def __init__(self, indices, slope):
        self.indices = tuple(sorted(indices))
        self.slope = slope


def upper_faces_2d(exps, coeffs):
    """Full-dimensional cells of the regular subdivision of a 2D config.

    ``exps`` are distinct integer pairs with 2-dimensional affine hull,
    ``coeffs`` rational heights.  Brute force over triples of lifted
    points, scaled to integers for speed; exact.
    """
    den = 1
    for c in coeffs:
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    zs = [int(Fraction(c) * den) for c in coeffs]
    pts = [(e[0], e[1], z) for e, z in zip(exps, zs)]
    m = len(pts)
    faces = {}
    for i, j, k in combinations(range(m), 3):
        pi, pj, pk = pts[i], pts[j], pts[k]
        ux, uy, uz = pj[0] - pi[0], pj[1] - pi[1], pj[2] - pi[2]
        vx, vy, vz = pk[0] - pi[0], pk[1] - pi[1], pk[2] - pi[2]
        nx = uy * vz - uz * vy
        ny = uz * vx - ux * vz
        nz = ux * vy - uy * vx
        if nz == 0:
            continue  # vertical plane or collinear projection
        if nz < 0:
            nx, ny, nz = -nx, -ny, -nz
        g = gcd(gcd(abs(nx), abs(ny)), nz)
        nx, ny, nz = nx // g, ny // g, nz // g
        c0 = nx * pi[0] + ny * pi[1] + nz * pi[2]
        key = (nx, ny, nz, c0)
        if key in faces:
            continue
        on, above = [], False
        for t in range(m):
            s = nx * pts[t][0] + ny * pts[t][1] + nz * pts[t][2]
            if s > c0:
                above = True
                break
            if s == c0:
                on.append(t)
        if above:
            continue
        slope = (Fraction(-nx, nz) / den, Fraction(-ny, nz) / den)
        faces[key] = UpperFace(on, slope)
    return list(faces.values())


def upper_hull_1d(ts, values):
    """Indices of the points on the concave upper hull of (t, value) pairs.

    ``ts`` must be strictly increasing.  Returns the hull breakpoints in
    increasing t order (endpoints always included).
    """
    hull = []
    for i in range(len(ts)):
        while len(hull) >= 2:
            a, b = hull[-2], hull[-1]
            # keep b only if it is strictly above segment [a, i]
            lhs = (values[b] - values[a]) * (ts[i] - ts[a])
            rhs = (values[i] - values[a]) * (ts[b] - ts[a])
            if lhs <= rhs:
                hull.pop()
            else:
                break
        hull.append(i)
    return hull

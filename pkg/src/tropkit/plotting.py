"""SVG rendering of plane tropical curves.

Output is deterministic: a fixed hash salt and no embedded timestamps,
so the same curve always produces byte-identical files.
"""

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .errors import InputError
from .planecurve import Segment

DEFAULT_BBOX = (Fraction(-5), Fraction(-5), Fraction(5), Fraction(5))


def _clip_ray(v, d, bbox):
    """Endpoint of the ray v + t*d clipped to the box, or None if outside."""
    x0, y0, x1, y1 = bbox
    tmax = None
    for c, dc, lo, hi in ((v[0], d[0], x0, x1), (v[1], d[1], y0, y1)):
        if dc == 0:
            if not lo <= c <= hi:
                return None
            continue
        a, b = Fraction(lo - c, dc), Fraction(hi - c, dc)
        if a > b:
            a, b = b, a
        if b < 0:
            return None
        tmax = b if tmax is None else min(tmax, b)
    if tmax is None or tmax < 0:
        return None
    return (v[0] + tmax * d[0], v[1] + tmax * d[1])


def plot_curve(curve, path, bbox=DEFAULT_BBOX):
    """Draw the curve into an SVG file.

    Stroke width scales with edge weight; weights >= 2 are labeled at
    edge midpoints.  Rays are clipped to ``bbox`` = (x0, y0, x1, y1).
    """
    x0, y0, x1, y1 = bbox
    if x0 >= x1 or y0 >= y1:
        raise InputError("bounding box must have positive extent")
    plt.rcParams["svg.hashsalt"] = "tropkit"
    fig, ax = plt.subplots(figsize=(5, 5))
    for e in curve.edges:
        if isinstance(e, Segment):
            a, b = curve.vertices[e.a], curve.vertices[e.b]
        else:
            a = curve.vertices[e.v]
            b = _clip_ray(a, e.dir, bbox)
            if b is None:
                continue
        ax.plot([float(a[0]), float(b[0])], [float(a[1]), float(b[1])],
                color="black", linewidth=1.0 + 0.8 * (e.w - 1),
                solid_capstyle="round")
        if e.w >= 2:
            mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
            ax.annotate(str(e.w), (float(mx), float(my)),
                        textcoords="offset points", xytext=(4, 4), fontsize=9)
    ax.set_xlim(float(x0), float(x1))
    ax.set_ylim(float(y0), float(y1))
    ax.set_aspect("equal")
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)

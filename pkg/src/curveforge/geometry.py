"""Exact rational geometry for chord diagrams in polygon faces.

Each face of a gluing complex is modelled as the closed unit disk whose
boundary circle is split into n arcs, one per side.  A boundary position is
addressed by the coordinate u in [0, n): side index plus the rational
position along that side.  Boundary coordinates map to exact rational
points on the unit circle through a monotone rational substitute for the
tangent half-angle parameterization, so chord endpoints, crossings and
orientation tests are all computed in Fraction arithmetic.  No floating
point appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Point = tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def circle_point(u: Fraction, n: int) -> Point:
    """Rational point on the unit circle for boundary coordinate u in [0, n).

    The map is injective and preserves the counterclockwise cyclic order of
    boundary coordinates; it is not the arc-length embedding, which does not
    matter because only cyclic order and convex position are ever used.
    """
    u = Fraction(u)
    if not 0 <= u < n:
        u = u % n
    half = Fraction(n, 2)
    if u == half:
        return (Fraction(-1), ZERO)
    if u < half:
        t = u / (half - u)           # sweeps 0 .. +inf over the upper semicircle
    else:
        t = (u - n) / (u - half)     # sweeps -inf .. 0 over the lower semicircle
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a)."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def cross_sign(v: Point, w: Point) -> int:
    x = v[0] * w[1] - v[1] * w[0]
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def cyclically_between(x: Fraction, lo: Fraction, hi: Fraction) -> bool:
    """True if x lies strictly inside the counterclockwise arc from lo to hi."""
    if lo < hi:
        return lo < x < hi
    return x > lo or x < hi


def chords_interleave(a1: Fraction, a2: Fraction, b1: Fraction, b2: Fraction) -> bool:
    """Do the chords with boundary coordinates (a1,a2) and (b1,b2) cross?

    All four coordinates must be pairwise distinct.  Chords of a strictly
    convex region cross transversally exactly when the endpoint pairs
    interleave around the boundary.
    """
    return cyclically_between(b1, a1, a2) != cyclically_between(b2, a1, a2)


def segment_intersection(a1: Point, a2: Point, b1: Point, b2: Point) -> Point:
    """Intersection point of the lines through (a1,a2) and (b1,b2).

    Callers guarantee the segments properly cross, so the lines are not
    parallel.
    """
    d1x, d1y = a2[0] - a1[0], a2[1] - a1[1]
    d2x, d2y = b2[0] - b1[0], b2[1] - b1[1]
    denom = d1x * d2y - d1y * d2x
    s = ((b1[0] - a1[0]) * d2y - (b1[1] - a1[1]) * d2x) / denom
    return (a1[0] + s * d1x, a1[1] + s * d1y)


def param_along(a: Point, b: Point, p: Point) -> Fraction:
    """Affine parameter of p on the segment a->b (0 at a, 1 at b)."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if abs(dx) >= abs(dy):
        return (p[0] - a[0]) / dx
    return (p[1] - a[1]) / dy


def direction_class(v: Point) -> int:
    """0 for the upper half plane (including +x axis), 1 for the lower."""
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return 0
    return 1


def ccw_direction_cmp(v: Point, w: Point) -> int:
    """Compare two nonzero direction vectors by counterclockwise angle from +x."""
    hv, hw = direction_class(v), direction_class(w)
    if hv != hw:
        return -1 if hv < hw else 1
    s = cross_sign(v, w)
    return -s  # v before w when w is counterclockwise of v


def centroid(points: Sequence[Point]) -> Point:
    n = len(points)
    sx = sum((p[0] for p in points), ZERO)
    sy = sum((p[1] for p in points), ZERO)
    return (sx / n, sy / n)


def midpoint(a: Point, b: Point) -> Point:
    return ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The fraction with smallest denominator strictly inside (lo, hi).

    Among candidates with the smallest denominator the one with smallest
    numerator magnitude is returned; the result is deterministic.
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    return _simplest(lo, hi)


def _simplest(lo: Fraction, hi: Fraction) -> Fraction:
    fl = lo.numerator // lo.denominator
    # an integer strictly inside wins outright
    cand = fl + 1 if lo == fl else fl + 1
    if lo < cand < hi:
        return Fraction(cand)
    if lo == fl:
        # interval (fl, hi) with hi <= fl + 1: recurse on the reciprocal gap
        inv = _ceil_reciprocal(hi - fl)
        return fl + Fraction(1, inv)
    # shift so the interval sits inside (0, 1), then flip
    flo, fhi = lo - fl, hi - fl
    return fl + 1 / _simplest(1 / fhi, 1 / flo)


def _ceil_reciprocal(h: Fraction) -> int:
    """Smallest integer q with 1/q strictly below h."""
    q = h.denominator // h.numerator + 1
    while Fraction(1, q) >= h:
        q += 1
    return q


def free_param_above(t: Fraction, occupied: Sequence[Fraction], upper: Fraction = ONE) -> Fraction:
    """A fresh parameter strictly between t and the next occupied value above."""
    hi = upper
    for v in occupied:
        if t < v < hi:
            hi = v
    return simplest_between(t, hi)


def free_param_below(t: Fraction, occupied: Sequence[Fraction], lower: Fraction = ZERO) -> Fraction:
    """A fresh parameter strictly between the next occupied value below and t."""
    lo = lower
    for v in occupied:
        if lo < v < t:
            lo = v
    return simplest_between(lo, t)


def gap_midpoints(occupied: Sequence[Fraction]) -> list[Fraction]:
    """Midpoints of the maximal free gaps of (0,1) left by occupied values."""
    marks = [ZERO] + sorted(occupied) + [ONE]
    out = []
    for a, b in zip(marks, marks[1:]):
        if a < b:
            out.append((a + b) / 2)
    return out

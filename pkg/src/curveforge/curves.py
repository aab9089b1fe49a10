"""Closed curves and arcs transverse to the sides of a gluing complex.

A passage records the curve crossing one edge of the 1-skeleton: the side
occurrence it enters through and the rational parameter of the crossing
point along that side.  The crossing point reappears on the partner side at
the mirrored parameter, and the curve continues inside the partner's face.
Between consecutive passages the curve is drawn as the straight chord of
the face's reference disk, so every geometric question reduces to exact
tests on chord endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import geometry as geo
from .errors import DuplicateCrossing, NonOrientable, NotPrimitive
from .gluing import CochainVector, PolygonComplex, reduce_cochain


@dataclass(frozen=True)
class Passage:
    occurrence: int
    param: Fraction

    def canonical_point(self, c: PolygonComplex):
        """Side-index/parameter pair naming the geometric crossing point."""
        p = c.partner[self.occurrence]
        if self.occurrence <= p:
            return (self.occurrence, self.param)
        return (p, 1 - self.param)

    def reversed(self, c: PolygonComplex):
        """The same crossing traversed in the opposite direction."""
        return Passage(c.partner[self.occurrence], 1 - self.param)


@dataclass(frozen=True)
class ChordCurve:
    passages: tuple[Passage, ...]

    def __len__(self):
        return len(self.passages)

    def reversed(self, c: PolygonComplex):
        return ChordCurve(tuple(p.reversed(c) for p in reversed(self.passages)))


@dataclass(frozen=True)
class ChordArc:
    passages: tuple[Passage, ...]
    start_region: int
    end_region: int


@dataclass(frozen=True)
class Chord:
    """Directed segment of a curve inside one face."""
    face: int
    u_from: Fraction
    u_to: Fraction
    p_from: geo.Point
    p_to: geo.Point


def entry_point(c: PolygonComplex, p: Passage):
    """(face, boundary coordinate) where the curve reaches the edge."""
    return c.side_face[p.occurrence], c.side_pos[p.occurrence] + p.param


def exit_point(c: PolygonComplex, p: Passage):
    """(face, boundary coordinate) where the curve leaves the edge."""
    q = c.partner[p.occurrence]
    return c.side_face[q], c.side_pos[q] + (1 - p.param)


def curve_chords(c: PolygonComplex, cv: ChordCurve):
    """The cyclic chord list; chord k runs from exit of passage k to entry of k+1.

    A chord whose endpoints fall in different faces (the curve is not
    closed there) is reported as None; validate_curve turns that into a
    diagnostic.
    """
    m = len(cv.passages)
    chords = []
    for k in range(m):
        fa, ua = exit_point(c, cv.passages[k])
        fb, ub = entry_point(c, cv.passages[(k + 1) % m])
        if fa != fb:
            chords.append(None)
            continue
        n = c.face_len(fa)
        chords.append(Chord(fa, ua, ub, geo.circle_point(ua, n), geo.circle_point(ub, n)))
    return chords


def curve_chords_strict(c, cv):
    chords = curve_chords(c, cv)
    if any(ch is None for ch in chords):
        raise ValueError("curve is not closed")
    return chords


def check_distinct_points(c: PolygonComplex, curves):
    """Raise DuplicateCrossing when two passages share a geometric point."""
    seen = {}
    for ci, cv in enumerate(curves):
        for pi, p in enumerate(cv.passages):
            key = p.canonical_point(c)
            if key in seen:
                raise DuplicateCrossing(
                    f"passage {pi} of curve {ci} coincides with passage {seen[key][1]}"
                    f" of curve {seen[key][0]} on side {key[0]} at {key[1]}")
            seen[key] = (ci, pi)


def validate_curve(cv: ChordCurve, c: PolygonComplex):
    """Exact closure and simplicity diagnostics for a single curve.

    Returns {"closed": bool, "simple": bool, "defects": [...]}; defects name
    the face and chord indices of each crossing chord pair.
    """
    check_distinct_points(c, [cv])
    chords = curve_chords(c, cv)
    closed = all(ch is not None for ch in chords)
    defects = []
    simple = True
    present = [ch for ch in chords if ch is not None]
    for i in range(len(present)):
        for j in range(i + 1, len(present)):
            a, b = present[i], present[j]
            if a.face != b.face:
                continue
            if geo.chords_interleave(a.u_from, a.u_to, b.u_from, b.u_to):
                simple = False
                defects.append({"face": c.faces[a.face][0], "chords": (i, j)})
    return {"closed": closed, "simple": simple, "defects": defects}


# ---------------------------------------------------------------------------
# homology of curves
# ---------------------------------------------------------------------------

def passage_sign(c: PolygonComplex, p: Passage) -> int:
    """+1 when the passage enters through the non-inverted occurrence."""
    return 1 if not c.side_token[p.occurrence].inverted else -1


def crossing_vector(cv: ChordCurve, c: PolygonComplex) -> CochainVector:
    """Signed count of edge crossings, one entry per edge label."""
    acc = [0] * len(c.labels)
    for p in cv.passages:
        acc[c.label_index[c.side_label(p.occurrence)]] += passage_sign(c, p)
    return CochainVector(tuple(acc))


def homology_class(cv: ChordCurve, c: PolygonComplex):
    """Integer coordinates of the curve's first homology class.

    The crossing vector is reduced modulo the coboundary lattice in a basis
    computed once per complex; the class is zero exactly for nulhomologous
    curves.
    """
    if not c.orientable:
        raise NonOrientable("homology classes require an orientable complex")
    return reduce_cochain(c, crossing_vector(cv, c))


# ---------------------------------------------------------------------------
# backtrack removal
# ---------------------------------------------------------------------------

def _cancellable(c, cv, chords, k):
    """Can passages k, k+1 be removed as an immediate side backtrack?"""
    m = len(cv.passages)
    p, q = cv.passages[k], cv.passages[(k + 1) % m]
    if q.occurrence != c.partner[p.occurrence]:
        return False
    cap = chords[k]
    if cap is None:
        return False
    # the cap must hug one side occurrence: both endpoints on side q.occurrence
    lo, hi = sorted((cap.u_from, cap.u_to))
    pos = c.side_pos[q.occurrence]
    if not (pos <= lo and hi <= pos + 1):
        return False
    # no other passage point of this curve strictly between them on that side
    for j, r in enumerate(cv.passages):
        if j in (k, (k + 1) % m):
            continue
        for occ, t in ((r.occurrence, r.param),
                       (c.partner[r.occurrence], 1 - r.param)):
            if occ == q.occurrence and lo < pos + t < hi:
                return False
    # the cap chord must cross no other chord of the curve
    for j, ch in enumerate(chords):
        if j == k or ch is None or ch.face != cap.face:
            continue
        if geo.chords_interleave(cap.u_from, cap.u_to, ch.u_from, ch.u_to):
            return False
    return True


def normalize(cv: ChordCurve, c: PolygonComplex) -> ChordCurve:
    """Remove immediate side backtracks until none remain; idempotent.

    A backtrack is a consecutive passage pair through the same edge whose
    connecting chord hugs one side with no passage of the curve between the
    two parameters and no crossing with the rest of the curve.  The final
    pair of a two-passage curve is kept so the result stays nonempty.
    """
    cur = cv
    while len(cur.passages) > 2:
        chords = curve_chords(c, cur)
        hit = None
        for k in range(len(cur.passages)):
            if _cancellable(c, cur, chords, k):
                hit = k
                break
        if hit is None:
            break
        m = len(cur.passages)
        keep = [cur.passages[i] for i in range(m) if i != hit and i != (hit + 1) % m]
        cur = ChordCurve(tuple(keep))
    return cur


# ---------------------------------------------------------------------------
# torus oracle and staircase slope curves
# ---------------------------------------------------------------------------

def torus_oracle(p: int, q: int, r: int, s: int) -> int:
    """Minimal crossing number of torus slope classes: |p*s - q*r|."""
    for pair in ((p, q), (r, s)):
        if gcd(abs(pair[0]), abs(pair[1])) != 1:
            raise NotPrimitive(f"slope {pair} is not primitive")
    return abs(p * s - q * r)


def square_torus() -> PolygonComplex:
    from .gluing import EdgeToken
    return PolygonComplex(
        [("F", [EdgeToken("a", False), EdgeToken("b", False),
                EdgeToken("a", True), EdgeToken("b", True)])],
        name="torus")


def slope_curve(p: int, q: int, offset: int = 0) -> ChordCurve:
    """Simple staircase curve on the square torus with homology (+-p, +-q).

    The curve is the projection of a straight line; it crosses the first
    edge label |p| times and the second |q| times, all with one sign.  The
    offset picks one of countably many parallel translates so that several
    copies can be laid down in general position.
    """
    if gcd(abs(p), abs(q)) != 1:
        raise NotPrimitive(f"slope ({p}, {q}) is not primitive")
    # direction (dx, dy) = (q, p): crossing a vertical edge changes x,
    # which happens q times; horizontal crossings happen p times.
    dx, dy = q, p
    big = 4 * (abs(p) + abs(q)) + 5
    x0 = Fraction(2 * offset + 1, big * big)
    y0 = Fraction(2 * offset + 1, big * big * big)

    events = []
    if dx:
        for i in range(abs(dx)):
            target = (i + 1) if dx > 0 else -i
            events.append(((Fraction(target) - x0) / dx, "v"))
    if dy:
        for i in range(abs(dy)):
            target = (i + 1) if dy > 0 else -i
            events.append(((Fraction(target) - y0) / dy, "h"))
    events.sort()
    passages = []
    for t, kind in events:
        x = x0 + dx * t
        y = y0 + dy * t
        xf = x - (x.numerator // x.denominator)
        yf = y - (y.numerator // y.denominator)
        if kind == "v":
            # crossing a vertical lattice line at height yf
            if dx > 0:
                passages.append(("b", False, yf))       # through the right side
            else:
                passages.append(("b", True, 1 - yf))    # through the left side
        else:
            if dy > 0:
                passages.append(("a", True, 1 - xf))    # through the top side
            else:
                passages.append(("a", False, xf))       # through the bottom side
    torus = square_torus()
    out = tuple(Passage(torus.side_by_token(l, inv), t) for (l, inv, t) in passages)
    return ChordCurve(out)


def insert_wiggle(cv: ChordCurve, c: PolygonComplex, after: int,
                  occurrence: int, t1: Fraction, t2: Fraction) -> ChordCurve:
    """Insert a there-and-back passage pair crossing `occurrence` after index `after`.

    The cap between the two new passages hugs the partner occurrence between
    mirrored parameters 1-t1 and t2; choosing parameters that straddle
    another curve's passage point creates removable crossings for tests.
    """
    pair = (Passage(occurrence, t1), Passage(c.partner[occurrence], t2))
    ps = list(cv.passages)
    k = (after + 1) % (len(ps) + 1)
    return ChordCurve(tuple(ps[:k]) + pair + tuple(ps[k:]))

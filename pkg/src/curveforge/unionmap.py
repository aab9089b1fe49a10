"""Union maps of curve systems: crossings, rotations, faces, complements.

The union of a curve system is a 4-valent graph embedded in the surface.
Inside each polygon face the curves are straight chords of the reference
disk, so crossings, their cyclic dart order and the induced planar
subdivision are all computed by exact rational tests.  The complement of
the system is obtained by cutting every face along its chord segments and
re-gluing the resulting cells across the side identifications only; each
glued component is a compact subsurface whose Euler characteristic and
boundary circles are read off the cell complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

from . import geometry as geo
from .curves import ChordCurve, Passage, check_distinct_points, curve_chords
from .errors import IterationLimit, NotInGeneralPosition
from .gluing import PolygonComplex


@dataclass(frozen=True)
class Crossing:
    """A transverse intersection of two chords inside one face."""
    id: int
    face: int
    point: geo.Point
    sign: int
    owners: tuple  # ((curve, chord_index), (curve, chord_index))
    params: tuple  # parameter of the point along each owner chord


@dataclass
class Arc:
    """Edge of the union graph: a stretch of curve between two crossings."""
    id: int
    curve: int
    a: int                      # crossing id at the start
    b: int                      # crossing id at the end
    passages: tuple             # passage indices traversed, in order
    a_pos: tuple                # (chord index, param) of the start
    b_pos: tuple


def _chord_dir(ch):
    return (ch.p_to[0] - ch.p_from[0], ch.p_to[1] - ch.p_from[1])


def _neg(v):
    return (-v[0], -v[1])


# ---------------------------------------------------------------------------
# pairwise crossings without the full map
# ---------------------------------------------------------------------------

def signed_crossings(c1: ChordCurve, c2: ChordCurve, c: PolygonComplex):
    """All transverse crossings of two simple curves in general position.

    The sign is +1 when (tangent of c1, tangent of c2) is a positively
    oriented frame of the face; swapping the arguments negates every sign.
    """
    check_distinct_points(c, [c1, c2])
    ch1 = _strict_chords(c, c1)
    ch2 = _strict_chords(c, c2)
    out = []
    for k1, a in enumerate(ch1):
        for k2, b in enumerate(ch2):
            if a.face != b.face:
                continue
            if geo.chords_interleave(a.u_from, a.u_to, b.u_from, b.u_to):
                pt = geo.segment_intersection(a.p_from, a.p_to, b.p_from, b.p_to)
                sign = geo.cross_sign(_chord_dir(a), _chord_dir(b))
                out.append(Crossing(len(out), a.face, pt, sign,
                                    ((0, k1), (1, k2)),
                                    (geo.param_along(a.p_from, a.p_to, pt),
                                     geo.param_along(b.p_from, b.p_to, pt))))
    return out


def _strict_chords(c, cv):
    chords = curve_chords(c, cv)
    if any(ch is None for ch in chords):
        raise NotInGeneralPosition("curve is not closed")
    return chords


# ---------------------------------------------------------------------------
# face arrangements
# ---------------------------------------------------------------------------

@dataclass
class _Cell:
    id: int
    face: int
    items: list        # ("side", side_id, t1, t2) | ("chord", seg_key, "L"/"R")
    corners: list      # node keys, corner k sits at the start of item k
    corner_points: list


class _FaceArrangement:
    """Planar subdivision of one face's reference disk by its chord segments."""

    def __init__(self, cpx, face, owned_chords, crossings, xpoints):
        self.face = face
        self._xpoints = xpoints
        n = cpx.face_len(face)
        self.n = n

        # boundary nodes: polygon corners plus chord endpoints, by coordinate
        bset = {Fraction(k) for k in range(n)}
        for _, ch in owned_chords:
            bset.add(ch.u_from)
            bset.add(ch.u_to)
        bu = sorted(bset)
        self.boundary_u = bu
        bindex = {u: i for i, u in enumerate(bu)}
        bpoint = {u: geo.circle_point(u, n) for u in bu}

        # chord segments split at crossings
        per_chord = {}
        for x in crossings:
            for (owner, prm) in zip(x.owners, x.params):
                per_chord.setdefault(owner, []).append((prm, x))
        self.edges = []           # (tail_key, head_key, kind, payload)
        self.edge_dirs = []       # (dir at tail, dir at head) or None for arcs
        K = len(bu)
        for i in range(K):
            a, b = bu[i], bu[(i + 1) % K]
            self.edges.append((("b", a), ("b", b), "arc", (i,)))
            self.edge_dirs.append(None)
        self.n_arc_edges = K
        self.seg_edges = {}
        for owner, ch in owned_chords:
            marks = sorted(per_chord.get(owner, []), key=lambda e: e[0])
            pts = [(("b", ch.u_from), ch.p_from)] + \
                  [(("x", x.id), x.point) for _, x in marks] + \
                  [(("b", ch.u_to), ch.p_to)]
            d = _chord_dir(ch)
            for j in range(len(pts) - 1):
                eid = len(self.edges)
                self.edges.append((pts[j][0], pts[j + 1][0], "seg", (owner, j)))
                self.edge_dirs.append((d, _neg(d)))
                self.seg_edges[(owner, j)] = eid
        self.seg_count = {owner: len(per_chord.get(owner, [])) + 1
                          for owner, _ in owned_chords}

        # rotations: dart = (edge id, end); dart (e,0) leaves the tail
        rot = {}
        chord_at_bnode = {}
        for eid in range(self.n_arc_edges, len(self.edges)):
            tail, head, _, _ = self.edges[eid]
            for key, dart in ((tail, (eid, 0)), (head, (eid, 1))):
                if key[0] == "b":
                    if key in chord_at_bnode:
                        raise NotInGeneralPosition(
                            f"two chord endpoints coincide on the boundary of face {face}")
                    chord_at_bnode[key] = dart
                else:
                    rot.setdefault(key, []).append(dart)
        for i in range(K):
            key = ("b", bu[i])
            nxt = (i, 0)
            prv = ((i - 1) % K, 1)
            if key in chord_at_bnode:
                rot[key] = [nxt, chord_at_bnode[key], prv]
            else:
                rot[key] = [nxt, prv]
        for key, darts in rot.items():
            if key[0] == "x":
                if len(darts) != 4:
                    raise NotInGeneralPosition(
                        f"crossing in face {face} is not 4-valent")
                darts.sort(key=cmp_to_key(
                    lambda d1, d2: geo.ccw_direction_cmp(self._dart_dir(d1), self._dart_dir(d2))))
        self.rot = rot
        self.rot_index = {key: {d: i for i, d in enumerate(ds)} for key, ds in rot.items()}

        self._trace_cells(cpx)

    def _dart_dir(self, dart):
        eid, end = dart
        return self.edge_dirs[eid][end]

    def _dart_node(self, dart):
        eid, end = dart
        return self.edges[eid][end]

    def _next_in_face(self, dart):
        r = (dart[0], 1 - dart[1])
        node = self._dart_node(r)
        ds = self.rot[node]
        i = self.rot_index[node][r]
        return ds[(i - 1) % len(ds)]

    def _trace_cells(self, cpx):
        all_darts = [(e, k) for e in range(len(self.edges)) for k in (0, 1)]
        seen = set()
        self.cells = []
        face_sides = cpx.face_sides[self.face]
        for d0 in all_darts:
            if d0 in seen:
                continue
            orbit = []
            d = d0
            while d not in seen:
                seen.add(d)
                orbit.append(d)
                d = self._next_in_face(d)
            # the outer face walks every boundary arc backward
            if all(self.edges[x[0]][2] == "arc" and x[1] == 1 for x in orbit):
                continue
            items = []
            corners = []
            corner_points = []
            for x in orbit:
                eid, end = x
                tail, head, kind, payload = self.edges[eid]
                node = tail if end == 0 else head
                corners.append(node)
                corner_points.append(self._node_point(node))
                if kind == "arc":
                    if end != 0:
                        raise AssertionError("inner cell walks a boundary arc backward")
                    i = payload[0]
                    u1 = self.boundary_u[i]
                    u2 = self.boundary_u[(i + 1) % len(self.boundary_u)]
                    if u2 <= u1:
                        u2 += self.n
                    side_id = face_sides[int(u1)]
                    t1 = u1 - int(u1)
                    t2 = u2 - int(u1)
                    items.append(("side", side_id, t1, t2))
                else:
                    owner, j = payload
                    items.append(("chord", (owner, j), "L" if end == 0 else "R"))
            self.cells.append(_Cell(len(self.cells), self.face, items, corners, corner_points))

    def _node_point(self, node):
        if node[0] == "b":
            return geo.circle_point(node[1], self.n)
        return self._xpoints[node[1]]


def interior_point(cell: _Cell, n: int):
    """A rational point strictly inside a cell of the face disk."""
    pts = []
    seenp = set()
    for p in cell.corner_points:
        if p not in seenp:
            seenp.add(p)
            pts.append(p)
    if len(pts) >= 3:
        cand = geo.centroid(pts)
        if _strictly_inside(cell, cand):
            return cand
    # fall back to bulging toward a boundary-arc midpoint
    for idx, it in enumerate(cell.items):
        if it[0] != "side":
            continue
        a = cell.corner_points[idx]
        b = cell.corner_points[(idx + 1) % len(cell.items)]
        # the arc midpoint in boundary coordinates
        u1 = cell.corners[idx][1]
        u2 = cell.corners[(idx + 1) % len(cell.items)][1]
        if u2 <= u1:
            u2 = u2 + n
        arc_mid = geo.circle_point(((u1 + u2) / 2) % n, n)
        cand = geo.midpoint(geo.midpoint(a, b), arc_mid)
        if _strictly_inside(cell, cand):
            return cand
    raise AssertionError("could not find an interior point of a cell")


def _strictly_inside(cell: _Cell, p):
    m = len(cell.items)
    for idx, it in enumerate(cell.items):
        a = cell.corner_points[idx]
        b = cell.corner_points[(idx + 1) % m]
        if it[0] == "side":
            continue  # circle arcs bound convexly; corner chain test below covers chords
        o = geo.orientation(a, b, p)
        if o <= 0:
            return False
    return True


# ---------------------------------------------------------------------------
# regions of the complement
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Region:
    id: int
    pieces: int
    euler: int
    disk: bool
    cells: tuple
    boundary: tuple   # circles; each a tuple of (arc_ref, side) runs


class CurveMap:
    """The combinatorial map of a curve system's union.

    Vertices are the pairwise crossings; darts carry the rotation induced
    by the exact chord geometry; traced faces are the boundary circuits of
    a ribbon neighborhood; regions describe the actual complement.
    """

    def __init__(self, cpx: PolygonComplex, curves):
        self.complex = cpx
        self.curves = tuple(curves)
        check_distinct_points(cpx, self.curves)
        self.chords = [_strict_chords(cpx, cv) for cv in self.curves]

        by_face = {}
        for ci, chs in enumerate(self.chords):
            for k, ch in enumerate(chs):
                by_face.setdefault(ch.face, []).append(((ci, k), ch))
        self.chords_by_face = by_face

        self._find_crossings()
        self._build_arcs()
        self._build_rotation()
        self._arrangements = None
        self._regions = None
        self._cells = None

    # ---- crossings ---------------------------------------------------------

    def _find_crossings(self):
        crossings = []
        for face in sorted(self.chords_by_face):
            owned = self.chords_by_face[face]
            found = {}
            for (o1, a), (o2, b) in itertools.combinations(owned, 2):
                if not geo.chords_interleave(a.u_from, a.u_to, b.u_from, b.u_to):
                    continue
                if o1[0] == o2[0]:
                    raise NotInGeneralPosition(
                        f"curve {o1[0]} crosses itself in face {face}")
                pt = geo.segment_intersection(a.p_from, a.p_to, b.p_from, b.p_to)
                if pt in found:
                    raise NotInGeneralPosition(
                        f"three chords meet at one point in face {face}")
                found[pt] = (o1, o2, a, b)
            for pt in sorted(found):
                o1, o2, a, b = found[pt]
                if o2 < o1:
                    o1, o2, a, b = o2, o1, b, a
                sign = geo.cross_sign(_chord_dir(a), _chord_dir(b))
                crossings.append(Crossing(
                    len(crossings), face, pt, sign, (o1, o2),
                    (geo.param_along(a.p_from, a.p_to, pt),
                     geo.param_along(b.p_from, b.p_to, pt))))
        self.crossings = crossings

    # ---- union graph arcs ---------------------------------------------------

    def _build_arcs(self):
        per_curve = [[] for _ in self.curves]
        for x in self.crossings:
            for (owner, prm) in zip(x.owners, x.params):
                per_curve[owner[0]].append((owner[1], prm, x.id))
        self.arcs = []
        self.free_loops = []
        self.curve_arcs = [[] for _ in self.curves]
        self.seg_to_arc = {}
        for ci, marks in enumerate(per_curve):
            m = len(self.curves[ci].passages)
            if not marks:
                self.free_loops.append(ci)
                for k in range(m):
                    self.seg_to_arc[((ci, k), 0)] = ("loop", ci)
                continue
            marks.sort()
            for i, (k1, p1, x1) in enumerate(marks):
                k2, p2, x2 = marks[(i + 1) % len(marks)]
                if (i + 1) == len(marks):
                    span = [(kk % m) for kk in range(k1 + 1, k2 + 1 + m)]
                else:
                    span = list(range(k1 + 1, k2 + 1))
                arc = Arc(len(self.arcs), ci, x1, x2,
                          tuple(p % m for p in span), (k1, p1), (k2, p2))
                self.arcs.append(arc)
                self.curve_arcs[ci].append(arc.id)
            # segment ownership: segment j of chord k lies after the j-th mark of k
            marks_by_chord = {}
            for (k, p, x) in marks:
                marks_by_chord.setdefault(k, []).append(p)
            for k in range(m):
                cnt = len(marks_by_chord.get(k, [])) + 1
                for j in range(cnt):
                    self.seg_to_arc[((ci, k), j)] = self._arc_covering(ci, k, j, marks_by_chord)

    def _arc_covering(self, ci, k, j, marks_by_chord):
        """The arc that contains segment j of chord k of curve ci."""
        prms = sorted(marks_by_chord.get(k, []))
        if j < len(prms):
            endpos = (k, prms[j])          # segment ends at this crossing
            for aid in self.curve_arcs[ci]:
                if self.arcs[aid].b_pos == endpos:
                    return aid
        else:
            # last segment of the chord: starts at the final mark (or chord start)
            if prms:
                startpos = (k, prms[-1])
                for aid in self.curve_arcs[ci]:
                    if self.arcs[aid].a_pos == startpos:
                        return aid
            else:
                # chord without crossings: inside the arc spanning it
                for aid in self.curve_arcs[ci]:
                    arc = self.arcs[aid]
                    if self._pos_within(ci, (k, Fraction(1, 2)), arc):
                        return aid
        raise AssertionError("segment not covered by any arc")

    def _pos_within(self, ci, pos, arc):
        m = len(self.curves[ci].passages)
        a, b = arc.a_pos, arc.b_pos
        if a < b:
            return a < pos < b
        return pos > a or pos < b

    # ---- rotation system -----------------------------------------------------

    def _build_rotation(self):
        darts_at = {x.id: [] for x in self.crossings}
        self.dart_dir = {}
        for arc in self.arcs:
            d0 = (arc.id, 0)
            d1 = (arc.id, 1)
            k_a = arc.a_pos[0]
            k_b = arc.b_pos[0]
            dir_a = _chord_dir(self.chords[arc.curve][k_a])
            dir_b = _neg(_chord_dir(self.chords[arc.curve][k_b]))
            darts_at[arc.a].append(d0)
            darts_at[arc.b].append(d1)
            self.dart_dir[d0] = dir_a
            self.dart_dir[d1] = dir_b
        self.rotation = {}
        for xid, ds in darts_at.items():
            if len(ds) != 4:
                raise AssertionError("union-graph vertex is not 4-valent")
            ds.sort(key=cmp_to_key(
                lambda a, b: geo.ccw_direction_cmp(self.dart_dir[a], self.dart_dir[b])))
            self.rotation[xid] = ds
        self._rot_index = {x: {d: i for i, d in enumerate(ds)}
                           for x, ds in self.rotation.items()}
        self._trace_map_faces()

    def dart_vertex(self, d):
        arc = self.arcs[d[0]]
        return arc.a if d[1] == 0 else arc.b

    def alpha(self, d):
        return (d[0], 1 - d[1])

    def _trace_map_faces(self):
        self.faces = []
        seen = set()
        for aid in range(len(self.arcs)):
            for end in (0, 1):
                d0 = (aid, end)
                if d0 in seen:
                    continue
                orbit = []
                d = d0
                while d not in seen:
                    seen.add(d)
                    orbit.append(d)
                    r = self.alpha(d)
                    v = self.dart_vertex(r)
                    ds = self.rotation[v]
                    d = ds[(self._rot_index[v][r] - 1) % 4]
                self.faces.append(tuple(orbit))

    @property
    def curve_count(self):
        return len(self.curves)

    # ---- arrangements and regions ---------------------------------------------

    def arrangements(self):
        if self._arrangements is None:
            xpoints = {x.id: x.point for x in self.crossings}
            arr = {}
            xs_by_face = {}
            for x in self.crossings:
                xs_by_face.setdefault(x.face, []).append(x)
            for face in range(len(self.complex.faces)):
                arr[face] = _FaceArrangement(self.complex, face,
                                             self.chords_by_face.get(face, []),
                                             xs_by_face.get(face, []), xpoints)
            self._arrangements = arr
        return self._arrangements

    def cells(self):
        if self._cells is None:
            arr = self.arrangements()
            cells = []
            self._cell_index = {}
            for face in range(len(self.complex.faces)):
                for cell in arr[face].cells:
                    gid = len(cells)
                    self._cell_index[(face, cell.id)] = gid
                    cells.append(_GlobalCell(gid, face, cell))
            self._cells = cells
        return self._cells

    def regions(self):
        if self._regions is None:
            self._regions = _build_regions(self)
        return self._regions

    def region_of_cell(self, gid):
        self.regions()
        return self._region_of_cell[gid]

    def cell_at_side_point(self, side_id, t):
        """The unique global cell whose boundary strictly contains (side, t)."""
        cells = self.cells()
        face = self.complex.side_face[side_id]
        for gc in cells:
            if gc.face != face:
                continue
            for it in gc.cell.items:
                if it[0] == "side" and it[1] == side_id and it[2] < t < it[3]:
                    return gc.id
        raise AssertionError("no cell contains the given side point")

    def euler_identity_terms(self):
        """(sum of region Euler characteristics, V - E of the union graph)."""
        s = sum(r.euler for r in self.regions())
        return s, len(self.crossings) - len(self.arcs)


@dataclass
class _GlobalCell:
    id: int
    face: int
    cell: _Cell

    @property
    def items(self):
        return self.cell.items

    def corner_adjacent(self):
        return any(n[0] == "b" and n[1] == int(n[1]) for n in self.cell.corners)

    def interior_point(self, cpx):
        return interior_point(self.cell, cpx.face_len(self.face))


def _build_regions(m: CurveMap):
    cpx = m.complex
    cells = m.cells()

    glue = {}
    for gc in cells:
        for idx, it in enumerate(gc.items):
            if it[0] == "side":
                glue[(it[1], it[2], it[3])] = (gc.id, idx)

    def item_end(gc, idx):
        return (gc.id, (idx + 1) % len(gc.items))

    # union-find over cells and over corners
    cparent = list(range(len(cells)))

    def cfind(x):
        while cparent[x] != x:
            cparent[x] = cparent[cparent[x]]
            x = cparent[x]
        return x

    corner_ids = {}
    for gc in cells:
        for idx in range(len(gc.items)):
            corner_ids[(gc.id, idx)] = len(corner_ids)
    kparent = list(range(len(corner_ids)))

    def kfind(x):
        while kparent[x] != x:
            kparent[x] = kparent[kparent[x]]
            x = kparent[x]
        return x

    def kunion(a, b):
        ra, rb = kfind(corner_ids[a]), kfind(corner_ids[b])
        if ra != rb:
            kparent[max(ra, rb)] = min(ra, rb)

    glued_pairs = 0
    for gc in cells:
        for idx, it in enumerate(gc.items):
            if it[0] != "side":
                continue
            s, t1, t2 = it[1], it[2], it[3]
            p = cpx.partner[s]
            key = (p, 1 - t2, 1 - t1)
            if key not in glue:
                raise AssertionError("side segment has no glued partner")
            oc, oidx = glue[key]
            if (oc, oidx) < (gc.id, idx):
                continue  # handle each pair once
            glued_pairs += 1
            ra, rb = cfind(gc.id), cfind(oc)
            if ra != rb:
                cparent[max(ra, rb)] = min(ra, rb)
            kunion((gc.id, idx), item_end(cells[oc], oidx))
            kunion((oc, oidx), item_end(cells[gc.id], idx))

    comp_cells = {}
    for gc in cells:
        comp_cells.setdefault(cfind(gc.id), []).append(gc.id)

    regions = []
    region_of_cell = {}
    for root in sorted(comp_cells):
        cell_ids = sorted(comp_cells[root])
        free_items = []
        glued_in = 0
        corner_classes = set()
        for cid in cell_ids:
            gc = cells[cid]
            for idx, it in enumerate(gc.items):
                corner_classes.add(kfind(corner_ids[(cid, idx)]))
                if it[0] == "chord":
                    free_items.append((cid, idx))
                else:
                    glued_in += 1
        assert glued_in % 2 == 0
        E = glued_in // 2 + len(free_items)
        V = len(corner_classes)
        F = len(cell_ids)
        chi = V - E + F

        # boundary circles: successive free items share corner classes
        start_at = {}
        for (cid, idx) in free_items:
            k = kfind(corner_ids[(cid, idx)])
            if k in start_at:
                raise AssertionError("boundary vertex with two outgoing free items")
            start_at[k] = (cid, idx)
        circles = []
        unvisited = set(free_items)
        for item in sorted(free_items):
            if item not in unvisited:
                continue
            circ = []
            cur = item
            while cur in unvisited:
                unvisited.discard(cur)
                cid, idx = cur
                seg_key, side = cells[cid].items[idx][1], cells[cid].items[idx][2]
                arc_ref = m.seg_to_arc[seg_key]
                circ.append((arc_ref, side))
                endk = kfind(corner_ids[item_end(cells[cid], idx)])
                cur = start_at[endk]
            circles.append(tuple(_collapse_runs(circ)))

        rid = len(regions)
        disk = chi == 1
        if disk and len(circles) != 1:
            raise AssertionError("Euler characteristic 1 with multiple boundary circles")
        regions.append(Region(rid, F, chi, disk, tuple(cell_ids), tuple(circles)))
        for cid in cell_ids:
            region_of_cell[cid] = rid

    m._region_of_cell = region_of_cell
    return regions


def _collapse_runs(circ):
    if not circ:
        return []
    runs = []
    for ref, side in circ:
        if runs and runs[-1] == (ref, side):
            continue
        runs.append((ref, side))
    if len(runs) > 1 and runs[0] == runs[-1]:
        runs.pop()
    return runs


def union_map(curves, c: PolygonComplex) -> CurveMap:
    """Build the union map of a list of simple curves in general position."""
    return CurveMap(c, curves)


# ---------------------------------------------------------------------------
# bigons and reduction to minimal position
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BigonCertificate:
    region: int
    runs: tuple      # ((arc_id, side), (arc_id, side)) with distinct curves
    crossings: tuple


def bigon_faces(m: CurveMap):
    """Certificates for complement disks bounded by one arc of two curves.

    Certificates are ordered by region id, so the first one is the
    deterministic innermost choice.
    """
    # quick refusal: a bigon's boundary is a traced face with two darts
    if not any(len(f) == 2 for f in m.faces):
        return []
    out = []
    for r in m.regions():
        if not r.disk or len(r.boundary) != 1:
            continue
        runs = r.boundary[0]
        if len(runs) != 2:
            continue
        (ref1, s1), (ref2, s2) = runs
        if isinstance(ref1, tuple) or isinstance(ref2, tuple):
            continue  # free loops cannot bound bigons
        a1, a2 = m.arcs[ref1], m.arcs[ref2]
        if a1.curve == a2.curve:
            continue
        ends1 = {a1.a, a1.b}
        if len(ends1) != 2 or ends1 != {a2.a, a2.b}:
            continue
        out.append(BigonCertificate(r.id, ((ref1, s1), (ref2, s2)),
                                    tuple(sorted(ends1))))
    return out


def _occupied_params(cpx, curves):
    """Canonical edge-point parameters currently used, per side occurrence."""
    occ = {}
    for cv in curves:
        for p in cv.passages:
            s, t = p.occurrence, p.param
            occ.setdefault(s, []).append(t)
            occ.setdefault(cpx.partner[s], []).append(1 - t)
    return occ


def offset_passage(cpx, p: Passage, side, occupied):
    """A parallel copy of one passage on the given side of the strand.

    'L' is the strand's left, which is the direction of increasing
    parameter on the occurrence the passage is stored on; the fresh
    parameter is the simplest rational in the adjacent free gap, and it is
    recorded in `occupied` for both mirror coordinates.
    """
    s, t = p.occurrence, p.param
    taken = occupied.setdefault(s, [])
    if side == "L":
        t2 = geo.free_param_above(t, taken)
    else:
        t2 = geo.free_param_below(t, taken)
    taken.append(t2)
    occupied.setdefault(cpx.partner[s], []).append(1 - t2)
    return Passage(s, t2)


def parallel_copy(cpx, passages, side, occupied):
    """Parallel copies of a run of passages, all on one side of the strand."""
    return [offset_passage(cpx, p, side, occupied) for p in passages]


def _reroute(m: CurveMap, cert: BigonCertificate, moving_curve: int):
    """Push the moving curve's bigon arc across to the far side of the other."""
    (ref1, s1), (ref2, s2) = cert.runs
    if m.arcs[ref1].curve == moving_curve:
        mine, theirs, their_side = m.arcs[ref1], m.arcs[ref2], s2
    else:
        mine, theirs, their_side = m.arcs[ref2], m.arcs[ref1], s1

    cpx = m.complex
    cv = m.curves[moving_curve]
    other = m.curves[theirs.curve]
    mcount = len(cv.passages)

    # passages of the moving curve outside the bigon arc, in cyclic order
    k_from = mine.b_pos[0]   # arc ends between passages k_from and k_from+1
    keep = []
    start = (k_from + 1) % mcount
    # walk from the passage after the arc's end around to the arc's start
    inside = set(mine.passages)
    order = [(start + i) % mcount for i in range(mcount)]
    for idx in order:
        if idx in inside:
            break
        keep.append(cv.passages[idx])
    # sanity: everything else is inside the arc
    if len(keep) + len(mine.passages) != mcount:
        raise AssertionError("bigon arc passages are not contiguous")

    occupied = _occupied_params(cpx, list(m.curves))
    copy_side = "L" if their_side == "R" else "R"
    copied = parallel_copy(cpx, [other.passages[i] for i in theirs.passages],
                           copy_side, occupied)
    # orient the copy to run the same way the moving curve did (from the
    # shared crossing mine.a to mine.b)
    if theirs.a == mine.a and theirs.b == mine.b:
        pass
    elif theirs.a == mine.b and theirs.b == mine.a:
        copied = [p.reversed(cpx) for p in reversed(copied)]
    else:
        raise AssertionError("bigon arcs do not share both crossings")
    return ChordCurve(tuple(keep) + tuple(copied))


def reduce_to_minimal(c1: ChordCurve, c2: ChordCurve, cpx: PolygonComplex):
    """Isotope c1 across innermost bigons until the pair is bigon-free.

    Returns (new c1, crossing count); the count is the pair's geometric
    intersection number and c2 is never modified.
    """
    cur = c1
    prev = None
    while True:
        m = CurveMap(cpx, [cur, c2])
        count = len(m.crossings)
        if prev is not None and count >= prev:
            raise IterationLimit("crossing count failed to decrease during reduction")
        bigons = bigon_faces(m)
        if not bigons:
            return cur, count
        cur = _reroute(m, bigons[0], 0)
        prev = count

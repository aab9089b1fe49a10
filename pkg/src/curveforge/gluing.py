"""Polygon gluing words and the closed surfaces they present.

A complex is a list of named faces, each a cyclic word of signed edge
labels.  Every label occurs exactly twice over all faces; the two
occurrences are identified with the parameter mirror t <-> 1 - t, both
parameters measured along each side's direction of appearance in its face
word.  With that convention a word pairing x with x' glues orientably.

Vertex classes are corner orbits: the corner at the start of a side is
identified with the corner at the end of its partner side.  The same orbit
map, read side by side, is the rotation of edge ends around each vertex,
which the filling-pair check uses.

All linear algebra here is exact, over the integers and rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    EmptyFace,
    MissingPartner,
    MultiFace,
    NonOrientable,
    NotASpanningTree,
    SurfaceSyntaxError,
)


@dataclass(frozen=True)
class EdgeToken:
    label: str
    inverted: bool

    def __str__(self):
        return self.label + ("'" if self.inverted else "")

    @property
    def inverse(self):
        return EdgeToken(self.label, not self.inverted)


def _check_label(label):
    if not label:
        raise SurfaceSyntaxError("empty edge label")
    if not (label[0].isalpha() and label[0].islower()):
        raise SurfaceSyntaxError(f"label {label!r} must start with a lowercase letter")
    for ch in label[1:]:
        if not (ch.islower() or ch.isdigit() or ch == "_"):
            raise SurfaceSyntaxError(f"label {label!r} contains invalid character {ch!r}")


class PolygonComplex:
    """A closed surface presented by gluing words; immutable after construction.

    Side occurrences are numbered globally in face order then position
    order, exactly as they appear in the input.  Derived tables (partner
    involution, vertex classes, vertex rotations) are computed once here.
    """

    def __init__(self, faces, name="surface"):
        self.name = name
        self.faces = []
        for face_name, word in faces:
            word = tuple(word)
            if len(word) == 0:
                raise EmptyFace(f"face {face_name!r} has an empty word")
            self.faces.append((face_name, word))
        self.faces = tuple(self.faces)

        # global side table
        self.side_face = []      # side index -> face index
        self.side_pos = []       # side index -> position within face word
        self.side_token = []     # side index -> EdgeToken
        self.face_sides = []     # face index -> list of side indices
        for fi, (_, word) in enumerate(self.faces):
            row = []
            for pos, tok in enumerate(word):
                _check_label(tok.label)
                row.append(len(self.side_token))
                self.side_face.append(fi)
                self.side_pos.append(pos)
                self.side_token.append(tok)
            self.face_sides.append(row)
        self.n_sides = len(self.side_token)

        occ = {}
        for s, tok in enumerate(self.side_token):
            occ.setdefault(tok.label, []).append(s)
        for label, sides in occ.items():
            if len(sides) != 2:
                raise MissingPartner(label, len(sides))
        # labels ordered by first appearance; this fixes vector coordinates
        self.labels = sorted(occ, key=lambda l: occ[l][0])
        self.label_index = {l: i for i, l in enumerate(self.labels)}
        self.partner = [0] * self.n_sides
        for a, b in occ.values():
            self.partner[a] = b
            self.partner[b] = a

        self.orientable = all(
            self.side_token[a].inverted != self.side_token[b].inverted
            for a, b in (occ[l] for l in self.labels)
        )
        # the occurrence that fixes each edge's direction
        self.noninv_side = {}
        for label in self.labels:
            a, b = occ[label]
            self.noninv_side[label] = b if self.side_token[a].inverted else a

        self._build_vertices()

    # corner s = the polygon corner at the start of side s
    def _next_side(self, s):
        fi = self.side_face[s]
        row = self.face_sides[fi]
        return row[(self.side_pos[s] + 1) % len(row)]

    def _build_vertices(self):
        parent = list(range(self.n_sides))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in range(self.n_sides):
            a, b = find(s), find(self._next_side(self.partner[s]))
            if a != b:
                parent[max(a, b)] = min(a, b)

        roots = sorted({find(s) for s in range(self.n_sides)})
        root_class = {r: i for i, r in enumerate(roots)}
        self.corner_class = [root_class[find(s)] for s in range(self.n_sides)]
        self.n_vertices = len(roots)

        # rotation of corners around each vertex: corner -> next corner
        self.corner_next = [self._next_side(self.partner[s]) for s in range(self.n_sides)]
        self.vertex_corners = [[] for _ in range(self.n_vertices)]
        seen = [False] * self.n_sides
        for s in range(self.n_sides):
            if seen[s]:
                continue
            cyc = []
            c = s
            while not seen[c]:
                seen[c] = True
                cyc.append(c)
                c = self.corner_next[c]
            v = self.corner_class[s]
            self.vertex_corners[v] = cyc

    # ---- basic queries -----------------------------------------------------

    def face_len(self, fi):
        return len(self.faces[fi][1])

    def side_label(self, s):
        return self.side_token[s].label

    def occurrences(self, label):
        s = self.noninv_side[label]
        return s, self.partner[s]

    def side_by_token(self, label, inverted):
        """Side index of the occurrence written as `label` / `label'`."""
        a = self.noninv_side[label]
        b = self.partner[a]
        for s in (a, b):
            if self.side_token[s].inverted == inverted:
                return s
        raise MissingPartner(label, 0)

    def edge_tail(self, label):
        return self.corner_class[self.noninv_side[label]]

    def edge_head(self, label):
        return self.corner_class[self._next_side(self.noninv_side[label])]

    def is_connected(self):
        if not self.faces:
            return True
        n = len(self.faces)
        seen = [False] * n
        stack = [0]
        seen[0] = True
        while stack:
            fi = stack.pop()
            for s in self.face_sides[fi]:
                gi = self.side_face[self.partner[s]]
                if not seen[gi]:
                    seen[gi] = True
                    stack.append(gi)
        return all(seen)

    def word_string(self, fi=0):
        return " ".join(str(t) for t in self.faces[fi][1])

    def __repr__(self):
        return f"PolygonComplex({self.name!r}, {len(self.faces)} face(s), {len(self.labels)} edge(s))"


@dataclass(frozen=True)
class SurfaceInfo:
    vertex_count: int
    edge_count: int
    face_count: int
    euler: int
    orientable: bool
    genus: int | None


def surface_info(c: PolygonComplex) -> SurfaceInfo:
    """Vertex/edge/face counts, Euler characteristic, orientability, genus."""
    v = c.n_vertices
    e = len(c.labels)
    f = len(c.faces)
    chi = v - e + f
    genus = None
    if c.orientable:
        if chi % 2 != 0 or chi > 2:
            raise SurfaceSyntaxError(f"impossible Euler characteristic {chi} for a closed orientable surface")
        genus = (2 - chi) // 2
    return SurfaceInfo(v, e, f, chi, c.orientable, genus)


# ---------------------------------------------------------------------------
# one-relator presentation via spanning-tree contraction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OneRelatorPresentation:
    generators: tuple[str, ...]
    relator: tuple[EdgeToken, ...]

    def relator_string(self):
        return " ".join(str(t) for t in self.relator)


def _free_cyclic_reduce(word):
    word = list(word)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i].label == word[i + 1].label and word[i].inverted != word[i + 1].inverted:
                del word[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
        while len(word) >= 2 and word[0].label == word[-1].label and word[0].inverted != word[-1].inverted:
            word = word[1:-1]
            changed = True
    return tuple(word)


def contract_tree_presentation(c: PolygonComplex, tree) -> OneRelatorPresentation:
    """Present the fundamental group by contracting a spanning tree of edges.

    The relator is the single face word with the tree tokens deleted, then
    freely and cyclically reduced.  Generators are the non-tree labels in
    order of first appearance in the relator.
    """
    if len(c.faces) != 1:
        raise MultiFace(f"presentation requires a single face, got {len(c.faces)}")
    tree = set(tree)
    unknown = tree - set(c.labels)
    if unknown:
        raise NotASpanningTree(f"labels {sorted(unknown)} not in the complex")
    if len(tree) != c.n_vertices - 1:
        raise NotASpanningTree(
            f"{len(tree)} edge(s) cannot span {c.n_vertices} vertex class(es)")
    parent = list(range(c.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for label in sorted(tree):
        a, b = find(c.edge_tail(label)), find(c.edge_head(label))
        if a == b:
            raise NotASpanningTree(f"tree edges contain a cycle at label {label!r}")
        parent[max(a, b)] = min(a, b)
    if len({find(v) for v in range(c.n_vertices)}) != 1:
        raise NotASpanningTree("tree edges do not connect all vertex classes")

    word = [tok for tok in c.faces[0][1] if tok.label not in tree]
    relator = _free_cyclic_reduce(word)
    gens = []
    for tok in relator:
        if tok.label not in gens:
            gens.append(tok.label)
    return OneRelatorPresentation(tuple(gens), relator)


def cyclic_words_equal(w1, w2, up_to_inversion=True):
    """Equality of reduced cyclic words, optionally up to inversion."""
    w1 = tuple(w1)
    variants = [tuple(w2)]
    if up_to_inversion:
        variants.append(tuple(t.inverse for t in reversed(w2)))
    for v in variants:
        if len(v) != len(w1):
            continue
        for r in range(max(len(v), 1)):
            if v[r:] + v[:r] == w1:
                return True
        if len(v) == 0 and len(w1) == 0:
            return True
    return False


# ---------------------------------------------------------------------------
# integer (co)homology machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CochainVector:
    """Signed transverse crossing counts, one integer per edge label."""
    entries: tuple[int, ...]

    @staticmethod
    def from_dict(c: PolygonComplex, d):
        return CochainVector(tuple(int(d.get(l, 0)) for l in c.labels))

    def as_dict(self, c: PolygonComplex):
        return {l: e for l, e in zip(c.labels, self.entries) if e}


def incidence_rows(c: PolygonComplex):
    """Rows = vertex classes, columns = edges; entry = head minus tail incidence."""
    rows = [[0] * len(c.labels) for _ in range(c.n_vertices)]
    for j, label in enumerate(c.labels):
        rows[c.edge_head(label)][j] += 1
        rows[c.edge_tail(label)][j] -= 1
    return rows


def _rank_rational(rows):
    """Rank over the rationals by fraction-free Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    r = 0
    for col in range(cols):
        piv = None
        for i in range(r, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][col]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        rank += 1
        if r == len(m):
            break
    return rank


def _face_boundary_rows(c: PolygonComplex):
    rows = []
    for _, word in c.faces:
        row = [0] * len(c.labels)
        for tok in word:
            row[c.label_index[tok.label]] += -1 if tok.inverted else 1
        rows.append(row)
    return rows


def coboundary_matrix(c: PolygonComplex):
    """Signed vertex-edge incidence matrix and the surface's first Betti number.

    For a one-face complex the Betti number equals edge_count - rank(matrix);
    with several faces the face-boundary relations are subtracted as well so
    the value is 2 * genus for every closed orientable complex.
    """
    if not c.orientable:
        raise NonOrientable("coboundary matrix requires an orientable complex")
    rows = incidence_rows(c)
    r1 = _rank_rational(rows) if rows else 0
    r2 = _rank_rational(_face_boundary_rows(c))
    h1 = len(c.labels) - r1 - r2
    return rows, h1


class _HomologyBasis:
    """Reduced coboundary rows with unit pivots, cached per complex.

    Graph incidence matrices are totally unimodular, so integer elimination
    always finds +-1 pivots and reduction of integer vectors stays integral.
    """

    def __init__(self, c: PolygonComplex):
        rows = [row[:] for row in incidence_rows(c)]
        ncols = len(c.labels)
        reduced = []
        pivots = []
        for col in range(ncols):
            piv_row = None
            for row in rows:
                if row[col] in (1, -1):
                    piv_row = row
                    break
            if piv_row is None:
                if any(row[col] != 0 for row in rows):
                    raise AssertionError("incidence elimination lost unimodularity")
                continue
            rows.remove(piv_row)
            if piv_row[col] == -1:
                piv_row = [-x for x in piv_row]
            for row in rows:
                if row[col]:
                    f = row[col]
                    for j in range(ncols):
                        row[j] -= f * piv_row[j]
            for row in reduced:
                if row[col]:
                    f = row[col]
                    for j in range(ncols):
                        row[j] -= f * piv_row[j]
            reduced.append(piv_row)
            pivots.append(col)
        self.reduced = reduced
        self.pivots = pivots
        self.free_cols = [j for j in range(ncols) if j not in set(pivots)]

    def reduce(self, vec):
        v = list(vec)
        for row, col in zip(self.reduced, self.pivots):
            if v[col]:
                f = v[col]
                for j in range(len(v)):
                    v[j] -= f * row[j]
        return v


_basis_cache: dict[int, _HomologyBasis] = {}


def homology_basis(c: PolygonComplex) -> _HomologyBasis:
    b = _basis_cache.get(id(c))
    if b is None:
        b = _HomologyBasis(c)
        _basis_cache[id(c)] = b
    return b


def reduce_cochain(c: PolygonComplex, vec: CochainVector):
    """Coordinates of a cochain modulo the coboundary lattice.

    The basis is the set of non-pivot edge columns of the integer-reduced
    incidence matrix, computed once per complex; the result is integral and
    zero exactly for coboundaries.
    """
    if not c.orientable:
        raise NonOrientable("homology coordinates require an orientable complex")
    if len(vec.entries) != len(c.labels):
        raise DimensionMismatch(
            f"vector has {len(vec.entries)} entries, complex has {len(c.labels)} edges")
    b = homology_basis(c)
    red = b.reduce(vec.entries)
    for col in b.pivots:
        if red[col] != 0:
            raise AssertionError("reduction failed to clear a pivot column")
    return tuple(red[j] for j in b.free_cols)


def class_rank(vectors, c: PolygonComplex) -> int:
    """Rank of cochain classes in the quotient by the coboundary row space."""
    if not c.orientable:
        raise NonOrientable("class rank requires an orientable complex")
    reduced = []
    for v in vectors:
        if len(v.entries) != len(c.labels):
            raise DimensionMismatch(
                f"vector has {len(v.entries)} entries, complex has {len(c.labels)} edges")
        reduced.append(reduce_cochain(c, v))
    if not reduced:
        return 0
    return _rank_rational(reduced)

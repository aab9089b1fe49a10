"""Line-oriented file grammars for surfaces, curves and arcs.

Surface files::

    # comment
    surface <name>
    face <FaceName>: <token> <token> ...        token := label | label'

Curve files (resolved against a surface)::

    curve <name>: a@1/2 b'@1/3 ...

Arc files::

    arc <name>: START r0 ; a@1/2 b'@2/3 ; END r1

Printing is deterministic: declaration order, single spaces, no trailing
whitespace, newline-terminated.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .curves import ChordArc, ChordCurve, Passage
from .errors import SurfaceSyntaxError
from .gluing import EdgeToken, PolygonComplex

_LABEL_RE = re.compile(r"[a-z][a-z0-9_]*'?$")
_NAME_RE = re.compile(r"[A-Za-z0-9_.-]+$")


def _strip_comment(line):
    i = line.find("#")
    return line if i < 0 else line[:i]


def parse_surface(text: str) -> PolygonComplex:
    """Parse the surface grammar into a validated complex."""
    name = None
    faces = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        parts = line.split()
        if parts[0] == "surface":
            if name is not None:
                raise SurfaceSyntaxError("duplicate surface line", line=ln)
            if len(parts) != 2 or not _NAME_RE.match(parts[1]):
                raise SurfaceSyntaxError("expected: surface <name>", line=ln)
            name = parts[1]
        elif parts[0] == "face":
            if name is None:
                raise SurfaceSyntaxError("face before surface line", line=ln)
            m = re.match(r"\s*face\s+([A-Za-z0-9_.-]+)\s*:(.*)$", line)
            if not m:
                raise SurfaceSyntaxError("expected: face <Name>: <tokens>", line=ln)
            fname, rest = m.group(1), m.group(2)
            word = []
            col = line.index(":") + 1
            for tok in rest.split():
                col = line.index(tok, col)
                if not _LABEL_RE.match(tok):
                    raise SurfaceSyntaxError(f"bad token {tok!r}", line=ln, column=col + 1)
                if tok.endswith("'"):
                    word.append(EdgeToken(tok[:-1], True))
                else:
                    word.append(EdgeToken(tok, False))
                col += len(tok)
            faces.append((fname, word))
        else:
            raise SurfaceSyntaxError(f"unknown directive {parts[0]!r}", line=ln)
    if name is None:
        raise SurfaceSyntaxError("missing surface line")
    return PolygonComplex(faces, name=name)


def print_surface(c: PolygonComplex) -> str:
    lines = [f"surface {c.name}"]
    for fname, word in c.faces:
        lines.append(f"face {fname}: " + " ".join(str(t) for t in word))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# curves and arcs
# ---------------------------------------------------------------------------

_PASSAGE_RE = re.compile(r"([a-z][a-z0-9_]*)('?)@(-?\d+)/(\d+)$")


def _parse_passage(tok, c, ln):
    m = _PASSAGE_RE.match(tok)
    if not m:
        raise SurfaceSyntaxError(f"bad passage token {tok!r}", line=ln)
    label, prime, num, den = m.groups()
    if label not in c.label_index:
        raise SurfaceSyntaxError(f"unknown edge label {label!r}", line=ln)
    param = Fraction(int(num), int(den))
    if not 0 < param < 1:
        raise SurfaceSyntaxError(f"passage parameter {param} outside (0,1)", line=ln)
    side = c.side_by_token(label, prime == "'")
    return Passage(side, param)


def _passage_token(c, p: Passage):
    tok = c.side_token[p.occurrence]
    return f"{tok}@{p.param.numerator}/{p.param.denominator}"


def parse_curves(text: str, c: PolygonComplex):
    """Parse a curve file; returns [(name, ChordCurve)] in declaration order."""
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        m = re.match(r"curve\s+([A-Za-z0-9_.-]+)\s*:(.*)$", line)
        if not m:
            raise SurfaceSyntaxError("expected: curve <name>: <passages>", line=ln)
        name, rest = m.group(1), m.group(2)
        passages = tuple(_parse_passage(tok, c, ln) for tok in rest.split())
        if not passages:
            raise SurfaceSyntaxError(f"curve {name!r} has no passages", line=ln)
        out.append((name, ChordCurve(passages)))
    return out


def print_curves(c: PolygonComplex, named_curves) -> str:
    lines = []
    for name, cv in named_curves:
        lines.append(f"curve {name}: " + " ".join(_passage_token(c, p) for p in cv.passages))
    return "\n".join(lines) + "\n"


_REGION_RE = re.compile(r"r(\d+)$")


def parse_arcs(text: str, c: PolygonComplex):
    """Parse an arc file; returns [(name, ChordArc)]."""
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        m = re.match(r"arc\s+([A-Za-z0-9_.-]+)\s*:\s*START\s+(r\d+)\s*;(.*);\s*END\s+(r\d+)\s*$", line)
        if not m:
            raise SurfaceSyntaxError("expected: arc <name>: START r<i> ; <passages> ; END r<j>", line=ln)
        name, start, mid, end = m.groups()
        passages = tuple(_parse_passage(tok, c, ln) for tok in mid.split())
        out.append((name, ChordArc(passages,
                                   int(_REGION_RE.match(start).group(1)),
                                   int(_REGION_RE.match(end).group(1)))))
    return out


def print_arcs(c: PolygonComplex, named_arcs) -> str:
    lines = []
    for name, arc in named_arcs:
        mid = " ".join(_passage_token(c, p) for p in arc.passages)
        lines.append(f"arc {name}: START r{arc.start_region} ; {mid} ; END r{arc.end_region}")
    return "\n".join(lines) + "\n"

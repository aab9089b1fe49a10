"""Exception taxonomy shared by all curveforge modules."""

from __future__ import annotations


class CurveForgeError(Exception):
    """Base class for every error raised by this package."""


# ---- gluing / parsing ------------------------------------------------------

class SurfaceSyntaxError(CurveForgeError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)


class MissingPartner(CurveForgeError):
    def __init__(self, label, count):
        self.label = label
        self.count = count
        super().__init__(f"edge label {label!r} occurs {count} time(s), expected exactly 2")


class EmptyFace(CurveForgeError):
    pass


class NotASpanningTree(CurveForgeError):
    pass


class MultiFace(CurveForgeError):
    pass


class NonOrientable(CurveForgeError):
    pass


class DimensionMismatch(CurveForgeError):
    pass


# ---- curves ----------------------------------------------------------------

class DuplicateCrossing(CurveForgeError):
    pass


class NotInGeneralPosition(CurveForgeError):
    pass


class IterationLimit(CurveForgeError):
    pass


class NotPrimitive(CurveForgeError):
    pass


# ---- systems ---------------------------------------------------------------

class NotTwoCurves(CurveForgeError):
    pass


class NotTransverse(CurveForgeError):
    pass


class DisconnectedUnion(CurveForgeError):
    pass


class NotPairwiseOnce(CurveForgeError):
    pass


class SystemInvariantViolation(CurveForgeError):
    """A verified fact that is a theorem failed; indicates an internal bug."""


# ---- constructions ---------------------------------------------------------

class InfeasibleConstraints(CurveForgeError):
    pass


class NotFoundError(CurveForgeError):
    """A bounded search exhausted its budget or candidate space."""

    def __init__(self, message, nodes_explored=None):
        self.nodes_explored = nodes_explored
        super().__init__(message)


class ArcNotDual(CurveForgeError):
    pass

"""curveforge: polygon gluing words and transverse curve systems on surfaces."""

from .errors import CurveForgeError
from .gluing import (
    CochainVector,
    EdgeToken,
    OneRelatorPresentation,
    PolygonComplex,
    SurfaceInfo,
    class_rank,
    coboundary_matrix,
    contract_tree_presentation,
    surface_info,
)
from .curves import (
    ChordArc,
    ChordCurve,
    Passage,
    crossing_vector,
    homology_class,
    normalize,
    slope_curve,
    square_torus,
    torus_oracle,
    validate_curve,
)
from .fileio import parse_arcs, parse_curves, parse_surface, print_arcs, print_curves, print_surface

__all__ = [
    "CurveForgeError",
    "CochainVector", "EdgeToken", "OneRelatorPresentation", "PolygonComplex",
    "SurfaceInfo", "class_rank", "coboundary_matrix", "contract_tree_presentation",
    "surface_info",
    "ChordArc", "ChordCurve", "Passage", "crossing_vector", "homology_class",
    "normalize", "slope_curve", "square_torus", "torus_oracle", "validate_curve",
    "parse_arcs", "parse_curves", "parse_surface", "print_arcs", "print_curves",
    "print_surface",
]

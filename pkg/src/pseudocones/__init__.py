"""Exact polyhedral pseudo-cones and their order-reversing duality."""

from .core import (
    ConvexCone, Kind, KernelInvariantError, NotAPseudoCone, PCElem, Violation,
    apply_gl, c_close, classical_polar, closed_positive_hull, dual_star, join,
    meet, pc_equal, pc_leq, polar, polar_cone, radial, radial_support_check,
    ray_set, recession_cone, star, support, validate, violation,
)
from .linalg import DimensionError, LinMap
from .polyhedra import HRep, Halfspace, InconsistentRepresentation, Polyhedron, VRep

__version__ = "0.1.0"

__all__ = [
    "ConvexCone",
    "Kind",
    "KernelInvariantError",
    "NotAPseudoCone",
    "PCElem",
    "Violation",
    "apply_gl",
    "c_close",
    "classical_polar",
    "closed_positive_hull",
    "dual_star",
    "join",
    "meet",
    "pc_equal",
    "pc_leq",
    "polar",
    "polar_cone",
    "radial",
    "radial_support_check",
    "ray_set",
    "recession_cone",
    "star",
    "support",
    "validate",
    "violation",
    "DimensionError",
    "LinMap",
    "HRep",
    "Halfspace",
    "InconsistentRepresentation",
    "Polyhedron",
    "VRep",
]

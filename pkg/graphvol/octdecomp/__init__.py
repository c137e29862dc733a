"""Generalized octahedral decomposition of spatial-graph exteriors."""

from graphvol.octdecomp.cells import (
    EDGE_IDENTIFICATIONS,
    OCTAHEDRON_FACES,
    VERTEX_SLOTS,
    FaceRef,
    Gluing,
    OctCell,
    OctComplex,
    Starfruit,
    arm_face,
    fin_face,
)
from graphvol.octdecomp.construct import CrossingFreeCycleError, UnknottedComponentError, decompose
from graphvol.octdecomp.export import ExportFormatError, export, parse_export
from graphvol.octdecomp.validate import Finding, ValidationReport, validate

__all__ = [
    "EDGE_IDENTIFICATIONS",
    "OCTAHEDRON_FACES",
    "VERTEX_SLOTS",
    "CrossingFreeCycleError",
    "ExportFormatError",
    "FaceRef",
    "Finding",
    "Gluing",
    "OctCell",
    "OctComplex",
    "Starfruit",
    "UnknottedComponentError",
    "ValidationReport",
    "arm_face",
    "decompose",
    "export",
    "fin_face",
    "parse_export",
    "validate",
]

"""Spatial-graph diagrams: model, text format and checks."""

from graphvol.diagram.checks import (
    ComponentSummary,
    CycleWitness,
    DiagramReport,
    Obstruction,
    VertexClassification,
    VertexType,
    check,
    classify_vertices,
    component_of_edge,
    components,
    crossing_count,
    find_crossing_free_cycle,
)
from graphvol.diagram.models import (
    AmbientSpace,
    Crossing,
    CrossingPassageError,
    DanglingReferenceError,
    DiagramSyntaxError,
    DuplicateIdError,
    Edge,
    Endpoint,
    GraphDiagram,
    Passage,
    Role,
    RotationSystemError,
    Vertex,
    VertexDegreeError,
)
from graphvol.diagram.parser import parse, serialize

__all__ = [
    "AmbientSpace",
    "ComponentSummary",
    "Crossing",
    "CrossingPassageError",
    "CycleWitness",
    "DanglingReferenceError",
    "DiagramReport",
    "DiagramSyntaxError",
    "DuplicateIdError",
    "Edge",
    "Endpoint",
    "GraphDiagram",
    "Obstruction",
    "Passage",
    "Role",
    "RotationSystemError",
    "Vertex",
    "VertexClassification",
    "VertexDegreeError",
    "VertexType",
    "check",
    "classify_vertices",
    "component_of_edge",
    "components",
    "crossing_count",
    "find_crossing_free_cycle",
    "parse",
    "serialize",
]

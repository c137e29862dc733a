"""Spatial-graph diagram data model.

A :class:`GraphDiagram` is validated on construction, so every instance in
circulation satisfies the structural invariants: one namespace of ids,
endpoint slots that exist on their vertex and are used exactly once, vertex
degree at least 3, and exactly one over and one under passage per crossing.
Elements are kept sorted by id.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Literal

from graphvol.core.errors import GraphVolError

# Separators of the text and export formats.
RESERVED_ID_CHARS = frozenset(".:,")


def _valid_id(name: str) -> bool:
    return bool(name) and not name.isspace() and not RESERVED_ID_CHARS.intersection(name)


class DiagramSyntaxError(GraphVolError):
    """Diagram text does not follow the file format."""

    code = "diagram-syntax"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class DanglingReferenceError(GraphVolError):
    """A reference names an element that is not declared."""

    code = "dangling-reference"


class DuplicateIdError(GraphVolError):
    """An id is declared twice in the shared namespace."""

    code = "duplicate-id"


class CrossingPassageError(GraphVolError):
    """A crossing is not passed exactly once over and once under."""

    code = "crossing-passages"


class VertexDegreeError(GraphVolError):
    """A graph vertex has degree below 3."""

    code = "vertex-degree"


class RotationSystemError(GraphVolError):
    """Half-edge slots and edge endpoints disagree."""

    code = "rotation-system"


class Role(str, Enum):
    OVER = "over"
    UNDER = "under"


@dataclass(frozen=True)
class AmbientSpace:
    """``S³`` or a thickened compact orientable surface ``F × I``."""

    kind: Literal["s3", "thickened"] = "s3"
    genus: int = 0
    boundary_components: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("s3", "thickened"):
            raise ValueError(f"unknown ambient kind {self.kind!r}")
        if self.genus < 0 or self.boundary_components < 0:
            raise ValueError("genus and boundary component count must be non-negative")
        if self.kind == "s3" and (self.genus or self.boundary_components):
            raise ValueError("S3 ambient takes no surface parameters")

    @classmethod
    def s3(cls) -> "AmbientSpace":
        return cls()

    @classmethod
    def thickened(cls, genus: int, boundary_components: int = 0) -> "AmbientSpace":
        return cls("thickened", genus, boundary_components)

    @property
    def is_s3(self) -> bool:
        return self.kind == "s3"

    @property
    def euler_characteristic(self) -> int:
        """``χ(F)``; for ``S³`` the projection surface is a sphere."""
        return 2 - 2 * self.genus - self.boundary_components

    @property
    def is_annulus_or_torus(self) -> bool:
        return not self.is_s3 and self.euler_characteristic == 0

    def __str__(self) -> str:
        if self.is_s3:
            return "s3"
        return f"thickened genus={self.genus} boundary={self.boundary_components}"


@dataclass(frozen=True)
class Passage:
    crossing: str
    role: Role

    def __str__(self) -> str:
        return f"{self.crossing}:{self.role.value}"


@dataclass(frozen=True)
class Endpoint:
    vertex: str
    slot: str

    def __str__(self) -> str:
        return f"{self.vertex}.{self.slot}"


@dataclass(frozen=True)
class Vertex:
    """A graph vertex with its half-edges in cyclic order."""

    id: str
    half_edges: tuple[str, ...]

    @property
    def degree(self) -> int:
        return len(self.half_edges)


@dataclass(frozen=True)
class Edge:
    """An edge between two half-edges, or a closed loop when ``ends`` is ``None``."""

    id: str
    ends: tuple[Endpoint, Endpoint] | None
    passages: tuple[Passage, ...] = ()

    @property
    def is_loop(self) -> bool:
        return self.ends is None


@dataclass(frozen=True)
class Crossing:
    id: str


@dataclass(frozen=True)
class GraphDiagram:
    """A validated diagram; elements are stored sorted by id."""

    vertices: tuple[Vertex, ...] = ()
    edges: tuple[Edge, ...] = ()
    crossings: tuple[Crossing, ...] = ()
    ambient: AmbientSpace = field(default_factory=AmbientSpace)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices, key=lambda v: v.id)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))
        object.__setattr__(self, "crossings", tuple(sorted(self.crossings, key=lambda c: c.id)))
        self._check_ids()
        self._check_endpoints()
        self._check_crossings()

    def _check_ids(self) -> None:
        ids = [v.id for v in self.vertices] + [e.id for e in self.edges] + [c.id for c in self.crossings]
        for name in ids:
            if not _valid_id(name):
                raise DiagramSyntaxError(f"invalid identifier {name!r}")
        duplicates = sorted(name for name, n in Counter(ids).items() if n > 1)
        if duplicates:
            raise DuplicateIdError(f"identifiers declared more than once: {', '.join(duplicates)}")
        for v in self.vertices:
            repeated = sorted(h for h, n in Counter(v.half_edges).items() if n > 1)
            if repeated:
                raise DuplicateIdError(f"vertex {v.id} repeats half-edges {', '.join(repeated)}")
            if not all(_valid_id(h) for h in v.half_edges):
                raise DiagramSyntaxError(f"invalid half-edge id on vertex {v.id}")

    def _check_endpoints(self) -> None:
        slots = {v.id: set(v.half_edges) for v in self.vertices}
        used: Counter[tuple[str, str]] = Counter()
        for e in self.edges:
            for end in e.ends or ():
                if end.vertex not in slots:
                    raise DanglingReferenceError(f"edge {e.id} ends at undeclared vertex {end.vertex}")
                if end.slot not in slots[end.vertex]:
                    raise DanglingReferenceError(
                        f"edge {e.id} uses half-edge {end} not declared on vertex {end.vertex}"
                    )
                used[(end.vertex, end.slot)] += 1
        for v in self.vertices:
            if v.degree < 3:
                raise VertexDegreeError(f"vertex {v.id} has degree {v.degree}; graph vertices need degree >= 3")
            for h in v.half_edges:
                if used[(v.id, h)] != 1:
                    raise RotationSystemError(
                        f"half-edge {v.id}.{h} is used by {used[(v.id, h)]} edge endpoints, expected 1"
                    )

    def _check_crossings(self) -> None:
        declared = {c.id for c in self.crossings}
        roles: dict[str, list[Role]] = {c: [] for c in declared}
        for e in self.edges:
            for p in e.passages:
                if p.crossing not in declared:
                    raise DanglingReferenceError(f"edge {e.id} passes undeclared crossing {p.crossing}")
                roles[p.crossing].append(p.role)
        for crossing, seen in sorted(roles.items()):
            if sorted(r.value for r in seen) != ["over", "under"]:
                raise CrossingPassageError(
                    f"crossing {crossing} has passages [{', '.join(r.value for r in seen)}]; "
                    "expected exactly one over and one under"
                )

    def vertex(self, vertex_id: str) -> Vertex:
        for v in self.vertices:
            if v.id == vertex_id:
                return v
        raise DanglingReferenceError(f"no vertex {vertex_id}")

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise DanglingReferenceError(f"no edge {edge_id}")

    def passage_count(self) -> int:
        return sum(len(e.passages) for e in self.edges)

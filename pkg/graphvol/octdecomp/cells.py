"""Cells of the generalized octahedral decomposition.

Each crossing carries an octahedron with one apex at the over-strand, one at
the under-strand, and four equatorial vertices, two above the projection
surface (U) and two below (D). Its eight faces are labelled
``<side>-<o>-<u>``: the octant on ``side`` between the over-strand arm ``o``
and the under-strand arm ``u``. Every strand arm at a crossing owns one U
face and one D face, and those are the faces it glues across.

A graph vertex of valency ``r`` carries a starfruit of ``r`` fins; each fin
has a U side and a D side, labelled ``fin-<half-edge>-<side>``.
"""

from dataclasses import dataclass
from typing import Literal

from graphvol.diagram.checks import VertexType
from graphvol.diagram.models import Role

Side = Literal["U", "D"]
Direction = Literal["in", "out"]

SIDES: tuple[Side, Side] = ("U", "D")

VERTEX_SLOTS = ("over-apex", "under-apex", "U-eq-1", "U-eq-2", "D-eq-1", "D-eq-2")

OCTAHEDRON_FACES = tuple(f"{side}-{o}-{u}" for side in SIDES for o in ("in", "out") for u in ("in", "out"))

# (side, role, direction) -> face owned by that strand arm
_ARM_FACES: dict[tuple[Side, Role, Direction], str] = {
    ("U", Role.OVER, "in"): "U-in-in",
    ("U", Role.OVER, "out"): "U-out-out",
    ("U", Role.UNDER, "out"): "U-in-out",
    ("U", Role.UNDER, "in"): "U-out-in",
    ("D", Role.UNDER, "in"): "D-in-in",
    ("D", Role.UNDER, "out"): "D-out-out",
    ("D", Role.OVER, "in"): "D-in-out",
    ("D", Role.OVER, "out"): "D-out-in",
}

# Edges of the octahedron collapsed to one edge each.
EDGE_IDENTIFICATIONS = (
    (("D-eq-1", "under-apex"), ("D-eq-2", "under-apex")),
    (("U-eq-1", "over-apex"), ("U-eq-2", "over-apex")),
)


def arm_face(side: Side, role: Role, direction: Direction) -> str:
    """Label of the octahedron face on ``side`` owned by a strand arm."""
    return _ARM_FACES[(side, role, direction)]


def fin_face(half_edge: str, side: Side) -> str:
    return f"fin-{half_edge}-{side}"


@dataclass(frozen=True, order=True)
class FaceRef:
    """A face of a cell, written ``<cell>.<label>``."""

    cell: str
    label: str

    def __str__(self) -> str:
        return f"{self.cell}.{self.label}"

    @property
    def side(self) -> str:
        return self.label.rsplit("-", 1)[1] if self.label.startswith("fin-") else self.label[0]

    @property
    def is_fin(self) -> bool:
        return self.label.startswith("fin-")


@dataclass(frozen=True)
class OctCell:
    """Octahedron at a crossing; ``types`` follows :data:`VERTEX_SLOTS`."""

    crossing_id: str
    types: tuple[VertexType, ...]

    def __post_init__(self) -> None:
        if len(self.types) != len(VERTEX_SLOTS):
            raise ValueError(f"octahedron {self.crossing_id} needs {len(VERTEX_SLOTS)} vertex types")

    @property
    def faces(self) -> tuple[FaceRef, ...]:
        return tuple(FaceRef(self.crossing_id, label) for label in OCTAHEDRON_FACES)

    def slot_type(self, slot: str) -> VertexType:
        return self.types[VERTEX_SLOTS.index(slot)]


@dataclass(frozen=True)
class Starfruit:
    """Fins around a graph vertex, one per half-edge in rotation order."""

    vertex_id: str
    half_edges: tuple[str, ...]

    @property
    def fin_count(self) -> int:
        return len(self.half_edges)

    @property
    def faces(self) -> tuple[FaceRef, ...]:
        return tuple(FaceRef(self.vertex_id, fin_face(h, side)) for h in self.half_edges for side in SIDES)


@dataclass(frozen=True)
class Gluing:
    """Two faces identified across arc ``arc_index`` of diagram edge ``edge_id``."""

    face_a: FaceRef
    face_b: FaceRef
    edge_id: str
    arc_index: int


@dataclass(frozen=True)
class OctComplex:
    octahedra: tuple[OctCell, ...]
    starfruits: tuple[Starfruit, ...]
    gluings: tuple[Gluing, ...]

    @property
    def glueable_faces(self) -> tuple[FaceRef, ...]:
        faces: list[FaceRef] = []
        for cell in self.octahedra:
            faces.extend(cell.faces)
        for fruit in self.starfruits:
            faces.extend(fruit.faces)
        return tuple(faces)

    def pairing(self) -> dict[FaceRef, FaceRef]:
        """The face pairing as a map; a face listed twice keeps its last partner."""
        mapping: dict[FaceRef, FaceRef] = {}
        for g in self.gluings:
            mapping[g.face_a] = g.face_b
            mapping[g.face_b] = g.face_a
        return mapping

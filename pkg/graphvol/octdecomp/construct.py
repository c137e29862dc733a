"""Build the octahedral decomposition of a diagram exterior."""

from dataclasses import dataclass

from graphvol.core.errors import GraphVolError
from graphvol.core.logging import get_logger
from graphvol.diagram.checks import (
    CycleWitness,
    VertexType,
    classify_vertices,
    component_of_edge,
    find_crossing_free_cycle,
)
from graphvol.diagram.models import Edge, GraphDiagram, Role
from graphvol.octdecomp.cells import (
    SIDES,
    Direction,
    FaceRef,
    Gluing,
    OctCell,
    OctComplex,
    Side,
    Starfruit,
    arm_face,
    fin_face,
)

logger = get_logger(__name__)


class CrossingFreeCycleError(GraphVolError):
    """A cycle passes no crossing, so the exterior is not hyperbolic."""

    code = "crossing-free-cycle"

    def __init__(self, witness: CycleWitness, message: str | None = None):
        self.witness = witness
        super().__init__(
            message
            or f"cycle {','.join(witness)} passes no crossing; a graph with such a cycle "
            "has non-hyperbolic exterior"
        )


class UnknottedComponentError(CrossingFreeCycleError):
    """A vertex-free link component with no crossings."""

    code = "unknotted-component"

    def __init__(self, witness: CycleWitness):
        super().__init__(witness, f"link component {witness[0]} has no crossings")


@dataclass(frozen=True)
class _Site:
    """Where an edge arc starts or ends: a fin side set or a crossing arm."""

    cell: str
    half_edge: str | None = None
    role: Role | None = None

    def face(self, side: Side, direction: Direction) -> FaceRef:
        if self.half_edge is not None:
            return FaceRef(self.cell, fin_face(self.half_edge, side))
        assert self.role is not None
        return FaceRef(self.cell, arm_face(side, self.role, direction))


def _edge_gluings(e: Edge) -> list[Gluing]:
    """Glue consecutive sites along ``e``: the earlier site's outgoing faces to the later's incoming."""
    crossings = [_Site(p.crossing, role=p.role) for p in e.passages]
    if e.ends is None:
        sites = crossings + crossings[:1]
    else:
        start, end = e.ends
        sites = [_Site(start.vertex, half_edge=start.slot), *crossings, _Site(end.vertex, half_edge=end.slot)]

    gluings = []
    for arc, (earlier, later) in enumerate(zip(sites, sites[1:], strict=False)):
        for side in SIDES:
            gluings.append(Gluing(earlier.face(side, "out"), later.face(side, "in"), e.id, arc))
    return gluings


def _octahedron_types(d: GraphDiagram) -> dict[str, tuple[VertexType, ...]]:
    classes = classify_vertices(d)
    component = component_of_edge(d)
    apex: dict[tuple[str, Role], VertexType] = {}
    for e in d.edges:
        for p in e.passages:
            apex[(p.crossing, p.role)] = classes.components[component[e.id]]
    return {
        c.id: (apex[(c.id, Role.OVER)], apex[(c.id, Role.UNDER)], classes.u, classes.u, classes.d, classes.d)
        for c in d.crossings
    }


def decompose(d: GraphDiagram) -> OctComplex:
    """One octahedron per crossing, one starfruit per vertex, glued along the edges.

    Raises:
        CrossingFreeCycleError: some cycle passes no crossing
        UnknottedComponentError: a link component has no crossings
    """
    witness = find_crossing_free_cycle(d)
    if witness is not None:
        if len(witness) == 1 and d.edge(witness[0]).is_loop:
            raise UnknottedComponentError(witness)
        raise CrossingFreeCycleError(witness)

    types = _octahedron_types(d)
    complex_ = OctComplex(
        octahedra=tuple(OctCell(c.id, types[c.id]) for c in d.crossings),
        starfruits=tuple(Starfruit(v.id, v.half_edges) for v in d.vertices),
        gluings=tuple(g for e in d.edges for g in _edge_gluings(e)),
    )
    logger.info(
        "Built octahedral decomposition",
        octahedra=len(complex_.octahedra),
        starfruits=len(complex_.starfruits),
        pairs=len(complex_.gluings),
    )
    return complex_

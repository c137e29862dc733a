"""Crossing counts, obstructions and vertex classes of a diagram."""

from enum import Enum

import networkx as nx
from pydantic import BaseModel, Field

from graphvol.core.logging import get_logger
from graphvol.diagram.models import GraphDiagram

logger = get_logger(__name__)

CycleWitness = tuple[str, ...]


class VertexType(str, Enum):
    FINITE = "finite"
    IDEAL = "ideal"
    HYPERIDEAL = "hyperideal"


class ComponentSummary(BaseModel):
    """One connected component of the underlying graph (crossings do not connect)."""

    label: str
    link: bool
    vertices: list[str] = Field(default_factory=list)
    edges: list[str] = Field(default_factory=list)


class Obstruction(BaseModel):
    kind: str
    edges: list[str]
    message: str


class VertexClassification(BaseModel):
    """Types of the decomposition vertex classes.

    ``u`` and ``d`` are the classes above and below the projection surface;
    ``components`` maps each component label to the class at its boundary.
    """

    u: VertexType
    d: VertexType
    components: dict[str, VertexType]


class DiagramReport(BaseModel):
    valid: bool
    ambient: str
    crossing_count: int
    vertex_count: int
    edge_count: int
    obstructions: list[Obstruction] = Field(default_factory=list)
    components: list[ComponentSummary] = Field(default_factory=list)


def crossing_count(d: GraphDiagram) -> int:
    """Crossings in this diagram (an upper bound for the crossing number)."""
    return len(d.crossings)


def find_crossing_free_cycle(d: GraphDiagram) -> CycleWitness | None:
    """Edge ids of a cycle none of whose edges pass a crossing, or ``None``.

    Passage-free edges are added in id order to a spanning forest; the first
    edge closing a cycle yields the witness, the forest path plus that edge.
    """
    forest = nx.Graph()
    for e in d.edges:
        if e.passages:
            continue
        if e.ends is None:
            return (e.id,)
        u, v = e.ends[0].vertex, e.ends[1].vertex
        if u == v:
            return (e.id,)
        if forest.has_node(u) and forest.has_node(v) and nx.has_path(forest, u, v):
            path = nx.shortest_path(forest, u, v)
            along = tuple(forest.edges[a, b]["edge"] for a, b in zip(path, path[1:], strict=False))
            return (*along, e.id)
        forest.add_edge(u, v, edge=e.id)
    return None


def components(d: GraphDiagram) -> list[ComponentSummary]:
    """Connected components, graph components first (by smallest vertex id), then links."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(v.id for v in d.vertices)
    for e in d.edges:
        if e.ends is not None:
            graph.add_edge(e.ends[0].vertex, e.ends[1].vertex, key=e.id)

    summaries = []
    for nodes in nx.connected_components(graph):
        vertex_ids = sorted(nodes)
        edge_ids = sorted(key for _, _, key in graph.subgraph(nodes).edges(keys=True))
        summaries.append(ComponentSummary(label=vertex_ids[0], link=False, vertices=vertex_ids, edges=edge_ids))
    summaries.sort(key=lambda c: c.label)
    summaries += [ComponentSummary(label=e.id, link=True, edges=[e.id]) for e in d.edges if e.is_loop]
    return summaries


def component_of_edge(d: GraphDiagram) -> dict[str, str]:
    """Map every edge id to its component label."""
    return {edge_id: c.label for c in components(d) for edge_id in c.edges}


def classify_vertices(d: GraphDiagram) -> VertexClassification:
    """Vertex types of the U/D classes and of each component's boundary.

    In ``S³`` (or a thickened sphere or disk) U and D stay in the manifold as
    finite vertices. Over an annulus or torus they become ideal, over any
    surface of negative Euler characteristic they are truncated. A vertex-free
    link component has torus boundary and gives an ideal class; any other
    component bounds a higher-genus handlebody and gives a hyperideal class.
    """
    chi = d.ambient.euler_characteristic
    if d.ambient.is_s3 or chi > 0:
        surface = VertexType.FINITE
    elif chi == 0:
        surface = VertexType.IDEAL
    else:
        surface = VertexType.HYPERIDEAL
    return VertexClassification(
        u=surface,
        d=surface,
        components={c.label: VertexType.IDEAL if c.link else VertexType.HYPERIDEAL for c in components(d)},
    )


def check(d: GraphDiagram) -> DiagramReport:
    """Crossing count, obstructions and component summary."""
    obstructions = []
    witness = find_crossing_free_cycle(d)
    if witness is not None:
        obstructions.append(
            Obstruction(
                kind="crossing-free-cycle",
                edges=list(witness),
                message=(
                    f"cycle {','.join(witness)} passes no crossing, "
                    "so the graph exterior is not hyperbolic"
                ),
            )
        )
    report = DiagramReport(
        valid=not obstructions,
        ambient=str(d.ambient),
        crossing_count=crossing_count(d),
        vertex_count=len(d.vertices),
        edge_count=len(d.edges),
        obstructions=obstructions,
        components=components(d),
    )
    logger.info(
        "Checked diagram",
        crossings=report.crossing_count,
        components=len(report.components),
        obstructions=len(obstructions),
    )
    return report

"""Structural audit of an octahedral decomposition."""

from collections import Counter

from networkx.utils import UnionFind
from pydantic import BaseModel, Field

from graphvol.core.logging import get_logger
from graphvol.diagram.checks import classify_vertices, component_of_edge
from graphvol.diagram.models import GraphDiagram, Role
from graphvol.octdecomp.cells import VERTEX_SLOTS, FaceRef, OctComplex, arm_face

logger = get_logger(__name__)


class Finding(BaseModel):
    code: str
    message: str


class ValidationReport(BaseModel):
    face_count: int
    pair_count: int
    findings: list[Finding] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.findings

    def codes(self) -> set[str]:
        return {f.code for f in self.findings}


def _pairing_findings(c: OctComplex) -> list[Finding]:
    findings: list[Finding] = []
    faces = set(c.glueable_faces)
    uses: Counter[FaceRef] = Counter()
    for g in c.gluings:
        if g.face_a == g.face_b:
            findings.append(Finding(code="pairing-not-involution", message=f"face {g.face_a} is paired with itself"))
        uses[g.face_a] += 1
        uses[g.face_b] += 1

    unknown = sorted(str(f) for f in uses if f not in faces)
    repeated = sorted(str(f) for f, n in uses.items() if f in faces and n > 1)
    unpaired = sorted(str(f) for f in faces if uses[f] == 0)
    if unknown:
        findings.append(Finding(code="pairing-not-involution", message=f"unknown faces paired: {', '.join(unknown)}"))
    if repeated:
        findings.append(Finding(code="pairing-not-involution", message=f"faces paired twice: {', '.join(repeated)}"))
    if unpaired:
        findings.append(Finding(code="pairing-not-involution", message=f"unpaired faces: {', '.join(unpaired)}"))
    return findings


def _fin_cycle_findings(c: OctComplex) -> list[Finding]:
    """Fin-to-fin gluings on either side must not close up into a cycle of starfruits."""
    open_sides = {side: UnionFind(fruit.vertex_id for fruit in c.starfruits) for side in ("U", "D")}
    findings: list[Finding] = []
    for g in c.gluings:
        side = g.face_a.side
        if not (g.face_a.is_fin and g.face_b.is_fin) or side not in open_sides:
            continue
        fruits = open_sides[side]
        a, b = g.face_a.cell, g.face_b.cell
        if fruits[a] == fruits[b]:
            findings.append(
                Finding(
                    code="fin-cycle",
                    message=f"{side} fins close a cycle through edge {g.edge_id} with no octahedron between them",
                )
            )
            # one finding per side
            del open_sides[side]
            continue
        fruits.union(a, b)
    return findings


def _type_findings(c: OctComplex) -> list[Finding]:
    findings: list[Finding] = []
    for prefix in ("U", "D"):
        seen = {cell.slot_type(slot) for cell in c.octahedra for slot in VERTEX_SLOTS if slot.startswith(prefix)}
        if len(seen) > 1:
            kinds = ", ".join(sorted(t.value for t in seen))
            findings.append(
                Finding(code="inconsistent-vertex-types", message=f"{prefix} equatorial vertices carry {kinds}")
            )
    return findings


def _diagram_findings(c: OctComplex, d: GraphDiagram) -> list[Finding]:
    findings: list[Finding] = []
    fins = sum(fruit.fin_count for fruit in c.starfruits)
    valency = sum(v.degree for v in d.vertices)
    if len(c.octahedra) != len(d.crossings) or len(c.starfruits) != len(d.vertices) or fins != valency:
        findings.append(
            Finding(
                code="cell-count-mismatch",
                message=(
                    f"{len(c.octahedra)} octahedra, {len(c.starfruits)} starfruits, {fins} fins for "
                    f"{len(d.crossings)} crossings, {len(d.vertices)} vertices, valency sum {valency}"
                ),
            )
        )

    classes = classify_vertices(d)
    component = component_of_edge(d)
    strand_type = {
        (p.crossing, p.role): classes.components[component[e.id]] for e in d.edges for p in e.passages
    }
    for cell in c.octahedra:
        expected = (
            strand_type.get((cell.crossing_id, Role.OVER)),
            strand_type.get((cell.crossing_id, Role.UNDER)),
            classes.u,
            classes.u,
            classes.d,
            classes.d,
        )
        if cell.types != expected:
            findings.append(
                Finding(code="vertex-type-mismatch", message=f"octahedron {cell.crossing_id} vertex types disagree")
            )

    later_u_faces: dict[str, dict[int, FaceRef]] = {}
    for g in c.gluings:
        if g.face_a.side == "U":
            later_u_faces.setdefault(g.edge_id, {})[g.arc_index] = g.face_b
    for e in d.edges:
        arcs = later_u_faces.get(e.id, {})
        for k, p in enumerate(e.passages):
            expected_face = FaceRef(p.crossing, arm_face("U", p.role, "in"))
            if e.is_loop:
                k = (k - 1) % len(e.passages)
            if arcs.get(k) != expected_face:
                findings.append(
                    Finding(
                        code="passage-order-mismatch",
                        message=f"edge {e.id} arc {k} does not enter {expected_face}",
                    )
                )
                break
    return findings


def validate(c: OctComplex, diagram: GraphDiagram | None = None) -> ValidationReport:
    """Audit ``c``; with ``diagram`` also compare cell counts, types and passage order."""
    faces = c.glueable_faces
    findings = _pairing_findings(c)
    if len(faces) % 2:
        findings.append(Finding(code="odd-face-count", message=f"{len(faces)} glueable faces"))
    findings += _type_findings(c)
    findings += _fin_cycle_findings(c)
    if diagram is not None:
        findings += _diagram_findings(c, diagram)

    report = ValidationReport(face_count=len(faces), pair_count=len(c.gluings), findings=findings)
    if not report.passed:
        logger.warning("Decomposition failed validation", findings=sorted(report.codes()))
    return report

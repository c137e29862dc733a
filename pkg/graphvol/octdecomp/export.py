"""Text export of an octahedral decomposition.

::

    oct a types=ideal,ideal,finite,finite,finite,finite
    starfruit p fins=3 halfedges=p1,p2,p3
    pair a.U-out-out b.U-out-in edge=k arc=0

Cells are listed in stored order (sorted by id), pairs in construction order.
"""

import re

from graphvol.core.errors import GraphVolError
from graphvol.diagram.checks import VertexType
from graphvol.octdecomp.cells import FaceRef, Gluing, OctCell, OctComplex, Starfruit


class ExportFormatError(GraphVolError):
    """Export text could not be read back."""

    code = "export-format"


_OCT = re.compile(r"^oct (\S+) types=(\S+)$")
_STARFRUIT = re.compile(r"^starfruit (\S+) fins=(\d+) halfedges=(\S*)$")
_PAIR = re.compile(r"^pair ([^.\s]+)\.(\S+) ([^.\s]+)\.(\S+) edge=(\S+) arc=(\d+)$")


def export(c: OctComplex) -> str:
    lines = [f"oct {cell.crossing_id} types={','.join(t.value for t in cell.types)}" for cell in c.octahedra]
    lines += [
        f"starfruit {fruit.vertex_id} fins={fruit.fin_count} halfedges={','.join(fruit.half_edges)}"
        for fruit in c.starfruits
    ]
    lines += [f"pair {g.face_a} {g.face_b} edge={g.edge_id} arc={g.arc_index}" for g in c.gluings]
    return "\n".join(lines) + "\n"


def parse_export(text: str) -> OctComplex:
    """Read :func:`export` output back into an :class:`OctComplex`.

    Raises:
        ExportFormatError: a line matches no statement
    """
    octahedra: list[OctCell] = []
    starfruits: list[Starfruit] = []
    gluings: list[Gluing] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if match := _OCT.match(line):
                types = tuple(VertexType(t) for t in match.group(2).split(","))
                octahedra.append(OctCell(match.group(1), types))
            elif match := _STARFRUIT.match(line):
                half_edges = tuple(match.group(3).split(",")) if match.group(3) else ()
                if not all(half_edges):
                    raise ValueError(f"empty half-edge id in {match.group(3)!r}")
                if len(half_edges) != int(match.group(2)):
                    raise ValueError(f"fins={match.group(2)} but {len(half_edges)} half-edges listed")
                starfruits.append(Starfruit(match.group(1), half_edges))
            elif match := _PAIR.match(line):
                a_cell, a_label, b_cell, b_label, edge_id, arc = match.groups()
                gluings.append(Gluing(FaceRef(a_cell, a_label), FaceRef(b_cell, b_label), edge_id, int(arc)))
            else:
                raise ValueError("unrecognised statement")
        except ValueError as exc:
            raise ExportFormatError(f"line {lineno}: {exc}", original_error=exc) from exc
    return OctComplex(octahedra=tuple(octahedra), starfruits=tuple(starfruits), gluings=tuple(gluings))

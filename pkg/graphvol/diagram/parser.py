"""Line-oriented diagram text format.

::

    # trefoil as a one-component link
    ambient s3
    crossing a
    crossing b
    crossing c
    edge k loop
    edge k passes a:over b:under c:over a:under b:over c:under

Other statements: ``ambient thickened genus=<g> boundary=<b>``,
``vertex <id> <half-edge>...`` (rotation order) and
``edge <id> from <vertex>.<half-edge> to <vertex>.<half-edge>``. Repeated
``passes`` lines for one edge append in order. ``#`` starts a comment.
"""

import re

from graphvol.core.logging import get_logger
from graphvol.diagram.models import (
    AmbientSpace,
    Crossing,
    DanglingReferenceError,
    DiagramSyntaxError,
    DuplicateIdError,
    Edge,
    Endpoint,
    GraphDiagram,
    Passage,
    Role,
    Vertex,
)

logger = get_logger(__name__)

_TOKEN = re.compile(r"\S+")
_PASSAGE = re.compile(r"^([^:.]+):(over|under)$")
_ENDPOINT = re.compile(r"^([^.]+)\.([^.]+)$")
_NON_NEGATIVE = re.compile(r"^\d+$")

Token = tuple[str, int]


def _tokens(line: str) -> list[Token]:
    content = line.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(content)]


def _expect_count(tokens: list[Token], lineno: int, count: int, usage: str) -> None:
    if len(tokens) != count:
        column = tokens[min(len(tokens), count) - 1][1] if tokens else 1
        raise DiagramSyntaxError(f"expected `{usage}`", lineno, column)


def _parse_ambient(tokens: list[Token], lineno: int) -> AmbientSpace:
    if len(tokens) < 2:
        raise DiagramSyntaxError("expected `ambient s3` or `ambient thickened ...`", lineno, tokens[0][1])
    kind, column = tokens[1]
    if kind == "s3":
        _expect_count(tokens, lineno, 2, "ambient s3")
        return AmbientSpace.s3()
    if kind != "thickened":
        raise DiagramSyntaxError(f"unknown ambient {kind!r}", lineno, column)

    params = {"genus": 0, "boundary": 0}
    seen: set[str] = set()
    for text, col in tokens[2:]:
        key, sep, value = text.partition("=")
        if not sep or key not in params or key in seen or not _NON_NEGATIVE.match(value):
            raise DiagramSyntaxError(f"expected genus=<n> or boundary=<n>, got {text!r}", lineno, col)
        params[key] = int(value)
        seen.add(key)
    if "genus" not in seen:
        raise DiagramSyntaxError("thickened ambient needs genus=<n>", lineno, column)
    return AmbientSpace.thickened(params["genus"], params["boundary"])


def _parse_endpoint(token: Token, lineno: int) -> Endpoint:
    text, column = token
    match = _ENDPOINT.match(text)
    if match is None:
        raise DiagramSyntaxError(f"expected <vertex>.<half-edge>, got {text!r}", lineno, column)
    return Endpoint(match.group(1), match.group(2))


def _parse_passages(tokens: list[Token], lineno: int) -> list[Passage]:
    passages = []
    for text, column in tokens:
        match = _PASSAGE.match(text)
        if match is None:
            raise DiagramSyntaxError(f"expected <crossing>:over|under, got {text!r}", lineno, column)
        passages.append(Passage(match.group(1), Role(match.group(2))))
    return passages


def parse(text: str) -> GraphDiagram:
    """Parse diagram text.

    Raises:
        DiagramSyntaxError: malformed statements (with line and column)
        DanglingReferenceError: references to undeclared elements
        DuplicateIdError: an id declared twice
        CrossingPassageError: a crossing without exactly one over and one under passage
        VertexDegreeError: a vertex of degree below 3
        RotationSystemError: half-edges not used exactly once
    """
    ambient: AmbientSpace | None = None
    vertices: list[Vertex] = []
    crossings: list[Crossing] = []
    edge_ends: dict[str, tuple[Endpoint, Endpoint] | None] = {}
    edge_passages: dict[str, list[Passage]] = {}
    passes_line: dict[str, int] = {}

    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if not tokens:
            continue
        keyword, column = tokens[0]

        if keyword == "ambient":
            if ambient is not None:
                raise DiagramSyntaxError("ambient declared twice", lineno, column)
            ambient = _parse_ambient(tokens, lineno)
        elif keyword == "vertex":
            if len(tokens) < 2:
                raise DiagramSyntaxError("expected `vertex <id> <half-edge>...`", lineno, column)
            vertices.append(Vertex(tokens[1][0], tuple(t for t, _ in tokens[2:])))
        elif keyword == "crossing":
            _expect_count(tokens, lineno, 2, "crossing <id>")
            crossings.append(Crossing(tokens[1][0]))
        elif keyword == "edge":
            if len(tokens) < 3:
                raise DiagramSyntaxError("expected `edge <id> loop|from|passes ...`", lineno, column)
            edge_id = tokens[1][0]
            form, form_column = tokens[2]
            if form == "passes":
                edge_passages.setdefault(edge_id, []).extend(_parse_passages(tokens[3:], lineno))
                passes_line.setdefault(edge_id, lineno)
                continue
            if edge_id in edge_ends:
                raise DuplicateIdError(f"line {lineno}: edge {edge_id} declared twice")
            if form == "loop":
                _expect_count(tokens, lineno, 3, "edge <id> loop")
                edge_ends[edge_id] = None
            elif form == "from":
                if len(tokens) != 6 or tokens[4][0] != "to":
                    raise DiagramSyntaxError(
                        "expected `edge <id> from <vertex>.<half-edge> to <vertex>.<half-edge>`",
                        lineno,
                        form_column,
                    )
                edge_ends[edge_id] = (_parse_endpoint(tokens[3], lineno), _parse_endpoint(tokens[5], lineno))
            else:
                raise DiagramSyntaxError(f"unknown edge form {form!r}", lineno, form_column)
        else:
            raise DiagramSyntaxError(f"unknown statement {keyword!r}", lineno, column)

    if ambient is None:
        raise DiagramSyntaxError("missing `ambient` declaration", 1, 1)
    undeclared = sorted(set(edge_passages) - set(edge_ends), key=passes_line.__getitem__)
    if undeclared:
        edge_id = undeclared[0]
        raise DanglingReferenceError(f"line {passes_line[edge_id]}: passages given for undeclared edge {edge_id}")

    diagram = GraphDiagram(
        vertices=tuple(vertices),
        edges=tuple(Edge(e, ends, tuple(edge_passages.get(e, ()))) for e, ends in edge_ends.items()),
        crossings=tuple(crossings),
        ambient=ambient,
    )
    logger.debug(
        "Parsed diagram",
        vertices=len(diagram.vertices),
        edges=len(diagram.edges),
        crossings=len(diagram.crossings),
        ambient=str(ambient),
    )
    return diagram


def serialize(d: GraphDiagram) -> str:
    """Render ``d`` in the text format; output is ordered by id."""
    lines = [f"ambient {d.ambient}"]
    lines += [f"vertex {v.id} {' '.join(v.half_edges)}" for v in d.vertices]
    lines += [f"crossing {c.id}" for c in d.crossings]
    for e in d.edges:
        if e.ends is None:
            lines.append(f"edge {e.id} loop")
        else:
            lines.append(f"edge {e.id} from {e.ends[0]} to {e.ends[1]}")
        if e.passages:
            lines.append(f"edge {e.id} passes {' '.join(str(p) for p in e.passages)}")
    return "\n".join(lines) + "\n"

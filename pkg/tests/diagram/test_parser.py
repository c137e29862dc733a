"""Tests for the diagram text format."""

import pytest

from graphvol.diagram import (
    AmbientSpace,
    CrossingPassageError,
    DanglingReferenceError,
    DiagramSyntaxError,
    DuplicateIdError,
    Role,
    RotationSystemError,
    VertexDegreeError,
    parse,
    serialize,
)

FIXTURE_NAMES = [
    "trefoil",
    "flat_theta",
    "crossed_theta",
    "kinked_theta",
    "two_trefoils",
    "torus_knot_genus2",
    "theta_and_link_genus2",
    "trefoil_in_disk",
]


def test_parse_trefoil(trefoil):
    """Test parsing a one-component link."""
    assert trefoil.vertices == ()
    assert len(trefoil.edges) == 1
    assert trefoil.edges[0].is_loop
    assert [c.id for c in trefoil.crossings] == ["a", "b", "c"]
    roles = [p.role for p in trefoil.edges[0].passages]
    assert roles == [Role.OVER, Role.UNDER] * 3
    assert trefoil.ambient == AmbientSpace.s3()


def test_parse_flat_theta(flat_theta):
    """Test parsing a graph without crossings."""
    assert [v.degree for v in flat_theta.vertices] == [3, 3]
    assert len(flat_theta.edges) == 3
    assert flat_theta.crossings == ()


def test_parse_thickened_ambient(load_diagram):
    """Test the thickened-surface ambient statement."""
    d = load_diagram("torus_knot_genus2")
    assert d.ambient == AmbientSpace.thickened(2, 0)
    assert d.ambient.euler_characteristic == -2
    assert len(d.edges[0].passages) == 14
    assert load_diagram("theta_and_link_genus2").ambient.boundary_components == 0


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_round_trip(load_diagram, name):
    """Test that serializing and parsing back is the identity."""
    d = load_diagram(name)
    text = serialize(d)
    assert parse(text) == d
    assert serialize(parse(text)) == text


def test_serialize_is_sorted(trefoil):
    """Test the deterministic statement order."""
    assert serialize(trefoil) == (
        "ambient s3\n"
        "crossing a\n"
        "crossing b\n"
        "crossing c\n"
        "edge k loop\n"
        "edge k passes a:over b:under c:over a:under b:over c:under\n"
    )


def test_passes_lines_append():
    """Test that repeated passes lines extend the passage list in order."""
    text = (
        "ambient s3\ncrossing a\nedge k loop\n"
        "edge k passes a:over\n"
        "edge k passes a:under\n"
    )
    assert [p.role for p in parse(text).edges[0].passages] == [Role.OVER, Role.UNDER]


def test_comments_and_blank_lines():
    """Test that comments and blank lines are ignored."""
    text = "# header\n\nambient s3  # trailing\ncrossing a\nedge k loop\nedge k passes a:over a:under\n"
    assert len(parse(text).crossings) == 1


def test_undeclared_crossing():
    """Test a passage through an undeclared crossing."""
    with pytest.raises(DanglingReferenceError) as exc_info:
        parse("ambient s3\nedge k loop\nedge k passes z:over z:under\n")
    assert exc_info.value.code == "dangling-reference"


def test_undeclared_vertex():
    """Test an edge ending at an undeclared vertex."""
    text = "ambient s3\nvertex p p1 p2 p3\nedge e1 from p.p1 to q.q1\n"
    with pytest.raises(DanglingReferenceError):
        parse(text)


def test_unknown_statement_location():
    """Test that syntax errors carry line and column."""
    with pytest.raises(DiagramSyntaxError) as exc_info:
        parse("ambient s3\nknot k\n")
    assert (exc_info.value.line, exc_info.value.column) == (2, 1)


def test_bad_passage_location():
    """Test the column of a malformed passage."""
    with pytest.raises(DiagramSyntaxError) as exc_info:
        parse("ambient s3\ncrossing a\nedge k loop\nedge k passes a:sideways\n")
    assert (exc_info.value.line, exc_info.value.column) == (4, 15)
    assert exc_info.value.code == "diagram-syntax"


def test_missing_ambient():
    """Test that the ambient statement is required."""
    with pytest.raises(DiagramSyntaxError):
        parse("crossing a\nedge k loop\nedge k passes a:over a:under\n")


def test_bad_ambient_parameters():
    """Test malformed thickened-surface parameters."""
    with pytest.raises(DiagramSyntaxError):
        parse("ambient thickened genus=-1\n")
    with pytest.raises(DiagramSyntaxError):
        parse("ambient thickened boundary=1\n")
    with pytest.raises(DiagramSyntaxError):
        parse("ambient torus\n")


def test_crossing_with_two_overs():
    """Test that each crossing needs one over and one under passage."""
    text = "ambient s3\ncrossing a\nedge k loop\nedge k passes a:over a:over\n"
    with pytest.raises(CrossingPassageError) as exc_info:
        parse(text)
    assert exc_info.value.code == "crossing-passages"


def test_unused_crossing():
    """Test that a declared crossing must be passed."""
    with pytest.raises(CrossingPassageError):
        parse("ambient s3\ncrossing a\ncrossing b\nedge k loop\nedge k passes a:over a:under\n")


def test_low_degree_vertex():
    """Test that vertices of degree below 3 are rejected."""
    text = "ambient s3\nvertex p p1 p2\nedge e from p.p1 to p.p2\n"
    with pytest.raises(VertexDegreeError):
        parse(text)


def test_duplicate_ids():
    """Test the shared id namespace."""
    text = "ambient s3\ncrossing k\nedge k loop\nedge k passes k:over k:under\n"
    with pytest.raises(DuplicateIdError):
        parse(text)
    with pytest.raises(DuplicateIdError):
        parse("ambient s3\nedge k loop\nedge k loop\n")


@pytest.mark.parametrize(
    "text",
    [
        "ambient s3\nvertex p p,1 p2 p3\n",
        "ambient s3\nvertex p,q p1 p2 p3\n",
        "ambient s3\nedge k,1 loop\n",
        "ambient s3\ncrossing a,b\n",
    ],
)
def test_comma_in_id_rejected(text):
    """Test that ids may not contain the export list separator."""
    with pytest.raises(DiagramSyntaxError) as exc_info:
        parse(text)
    assert exc_info.value.code == "diagram-syntax"


def test_unused_half_edge():
    """Test that every half-edge is used exactly once."""
    text = (
        "ambient s3\nvertex p p1 p2 p3 p4\nvertex q q1 q2 q3\n"
        "edge e1 from p.p1 to q.q1\nedge e2 from p.p2 to q.q2\nedge e3 from p.p3 to q.q3\n"
    )
    with pytest.raises(RotationSystemError):
        parse(text)


def test_ambient_space_properties():
    """Test Euler characteristic and the annulus/torus test."""
    assert AmbientSpace.thickened(1, 0).is_annulus_or_torus
    assert AmbientSpace.thickened(0, 2).is_annulus_or_torus
    assert not AmbientSpace.thickened(0, 1).is_annulus_or_torus
    assert not AmbientSpace.s3().is_annulus_or_torus
    assert AmbientSpace.thickened(0, 1).euler_characteristic == 1
    assert str(AmbientSpace.thickened(2, 1)) == "thickened genus=2 boundary=1"

"""Tests for the decomposition text export."""

from pathlib import Path

import pytest

from graphvol.octdecomp import ExportFormatError, decompose, export, parse_export

GOLDEN = Path(__file__).parent / "golden"


def test_trefoil_matches_golden(trefoil):
    """Test the trefoil export against the hand-checked listing."""
    assert export(decompose(trefoil)) == (GOLDEN / "trefoil.oct").read_text(encoding="utf-8")


def test_export_is_deterministic(load_diagram):
    """Test that two runs give identical text."""
    d = load_diagram("theta_and_link_genus2")
    assert export(decompose(d)) == export(decompose(d))


def test_starfruit_lines(crossed_theta):
    """Test the starfruit statements."""
    lines = export(decompose(crossed_theta)).splitlines()
    assert "starfruit p fins=3 halfedges=p1,p2,p3" in lines
    assert "pair p.fin-p1-U a.U-in-in edge=e1 arc=0" in lines
    assert lines[0] == "oct a types=hyperideal,hyperideal,finite,finite,finite,finite"


@pytest.mark.parametrize("name", ["trefoil", "crossed_theta", "torus_knot_genus2", "theta_and_link_genus2"])
def test_parse_export(load_diagram, name):
    """Test reading an export back."""
    c = decompose(load_diagram(name))
    assert parse_export(export(c)) == c


@pytest.mark.parametrize(
    "text",
    [
        "oct a types=ideal,bogus,finite,finite,finite,finite\n",
        "oct a types=ideal,ideal\n",
        "starfruit p fins=2 halfedges=p1\n",
        "starfruit p fins=3 halfedges=p1,,p2\n",
        "starfruit p fins=3 halfedges=p1,p2,\n",
        "glue a.U-in-in b.U-in-in\n",
    ],
)
def test_parse_export_errors(text):
    """Test malformed export lines."""
    with pytest.raises(ExportFormatError) as exc_info:
        parse_export(text)
    assert exc_info.value.code == "export-format"
    assert "line 1" in exc_info.value.message

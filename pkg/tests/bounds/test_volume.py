"""Tests for volume bounds."""

import math

import pytest

from graphvol.bounds import (
    EulerCharacteristicError,
    NonPositiveVolumeError,
    WrongAmbientError,
    doubling_lower_bound,
    doubling_lower_bound_geodesic,
    upper_bound,
    upper_bound_s3,
    upper_bound_thickened,
)
from graphvol.core.formatting import fmt
from graphvol.diagram import AmbientSpace

UPPER_BOUNDS = [
    (1, "5.07470803204827", "12.0460920400944"),
    (3, "15.2241240961448", "36.1382761202831"),
    (7, "35.5229562243379", "84.3226442806606"),
    (100, "507.470803204827", "1204.60920400944"),
]


@pytest.mark.parametrize(("c", "s3", "thickened"), UPPER_BOUNDS)
def test_upper_bound_table(kinked_loop, c, s3, thickened):
    """Test the bound at several crossing counts, to 15 significant digits."""
    assert fmt(upper_bound_s3(kinked_loop(c, AmbientSpace.s3())).value) == s3
    assert fmt(upper_bound_thickened(kinked_loop(c, AmbientSpace.thickened(2))).value) == thickened


def test_six_crossing_example(load_diagram):
    """Test two trefoils in S3."""
    report = upper_bound(load_diagram("two_trefoils"))
    assert report.value == pytest.approx(30.448248192289, abs=1e-9)
    assert report.crossings == 6
    assert report.constant == "B4TRUNC"
    assert report.relation == "<"
    assert report.warnings == []


def test_report_carries_assumptions(trefoil):
    """Test that the bound states what it relies on."""
    report = upper_bound(trefoil)
    assert report.kind == "strict-upper"
    assert report.ambient == "s3"
    assert any("tg-hyperbolic" in a for a in report.assumptions)
    assert "4-bipyramid" in report.provenance


def test_thickened_bound_dispatch(load_diagram):
    """Test that a thickened ambient picks the cuboctahedron constant."""
    report = upper_bound(load_diagram("torus_knot_genus2"))
    assert report.constant == "QCUBOCT"
    assert report.crossings == 7
    assert fmt(report.value) == "84.3226442806606"


def test_thickened_bound_exceeds_s3_bound(kinked_loop):
    """Test that the thickened constant is the larger one."""
    for c in (1, 5, 12):
        s3 = upper_bound_s3(kinked_loop(c, AmbientSpace.s3())).value
        torus = upper_bound_thickened(kinked_loop(c, AmbientSpace.thickened(1))).value
        assert torus > s3


def test_bound_is_linear(kinked_loop):
    """Test that the bound grows linearly in the crossing count."""
    one = upper_bound_s3(kinked_loop(1, AmbientSpace.s3())).value
    assert upper_bound_s3(kinked_loop(9, AmbientSpace.s3())).value == pytest.approx(9 * one, rel=1e-15)
    assert upper_bound_s3(kinked_loop(0, AmbientSpace.s3())).value == 0.0


def test_disk_refused(load_diagram):
    """Test that a thickened disk has no cuboctahedral bound."""
    with pytest.raises(EulerCharacteristicError) as exc_info:
        upper_bound(load_diagram("trefoil_in_disk"))
    assert exc_info.value.code == "euler-characteristic"


def test_annulus_accepted(kinked_loop):
    """Test that χ = 0 is allowed."""
    report = upper_bound_thickened(kinked_loop(3, AmbientSpace.thickened(0, 2)))
    assert fmt(report.value) == "36.1382761202831"


def test_wrong_ambient(trefoil, load_diagram):
    """Test that each bound refuses the other ambient space."""
    with pytest.raises(WrongAmbientError) as exc_info:
        upper_bound_thickened(trefoil)
    assert exc_info.value.code == "wrong-ambient"
    with pytest.raises(WrongAmbientError):
        upper_bound_s3(load_diagram("torus_knot_genus2"))


def test_crossing_free_cycle_warning(flat_theta, caplog):
    """Test that an obstructed diagram still gets a bound, flagged as vacuous."""
    report = upper_bound(flat_theta)
    assert report.value == 0.0
    assert report.warnings == ["crossing-free-cycle edges=e1,e2"]
    assert "Bound is vacuous" in caplog.text


def test_doubling_lower_bound():
    """Test the half-double plus complement formula."""
    report = doubling_lower_bound(10.0, 3.0)
    assert report.value == 8.0
    assert report.kind == "lower"
    assert report.relation == ">="


def test_doubling_lower_bound_monotone():
    """Test that the bound grows in each argument."""
    base = doubling_lower_bound(10.0, 3.0).value
    assert doubling_lower_bound(10.5, 3.0).value > base
    assert doubling_lower_bound(10.0, 3.5).value > base


def test_doubling_geodesic_case():
    """Test the totally geodesic specialisation."""
    assert doubling_lower_bound_geodesic(4.0, 3.0).value == 7.0


@pytest.mark.parametrize(("a", "b"), [(0.0, 3.0), (10.0, -1.0), (math.nan, 3.0), (10.0, math.inf)])
def test_doubling_rejects_bad_volumes(a, b):
    """Test that volumes must be positive and finite."""
    with pytest.raises(NonPositiveVolumeError) as exc_info:
        doubling_lower_bound(a, b)
    assert exc_info.value.code == "non-positive-volume"

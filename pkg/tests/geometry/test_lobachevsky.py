"""Tests for the Lobachevsky function."""

import importlib
import math

import mpmath
import numpy as np
import pytest

from graphvol.geometry.lobachevsky import (
    LobachevskyError,
    TetAngles,
    TetAnglesError,
    ideal_tet_volume,
    lobachevsky,
    lobachevsky_quadrature,
    lobachevsky_series,
)

CATALAN = 0.915965594177219015054603514932

LOBACHEVSKY_MODULE = importlib.import_module("graphvol.geometry.lobachevsky")


def clausen_oracle(theta: float) -> float:
    """Λ(θ) = Cl₂(2θ)/2 evaluated at 30 digits."""
    mpmath.mp.dps = 30
    return float(mpmath.clsin(2, 2 * mpmath.mpf(theta)) / 2)


@pytest.fixture
def sample_angles() -> np.ndarray:
    return np.random.default_rng(20240611).uniform(-3.0, 3.0, size=120)


def test_known_values():
    """Test against closed-form special values."""
    assert lobachevsky(math.pi / 4) == pytest.approx(CATALAN / 2, abs=1e-13)
    assert lobachevsky(math.pi / 6) == pytest.approx(0.507470803204826812, abs=1e-13)
    assert lobachevsky(0.0) == 0.0
    assert abs(lobachevsky(math.pi / 2)) < 1e-13
    assert abs(lobachevsky(math.pi)) < 1e-13


def test_matches_clausen_oracle(sample_angles):
    """Test against an independent high-precision Clausen evaluation."""
    for theta in sample_angles:
        assert lobachevsky(float(theta)) == pytest.approx(clausen_oracle(float(theta)), abs=1e-12)


def test_odd(sample_angles):
    """Test Λ(-θ) = -Λ(θ)."""
    for theta in sample_angles:
        assert abs(lobachevsky(-theta) + lobachevsky(theta)) <= 4e-13


def test_periodic(sample_angles):
    """Test Λ(θ + π) = Λ(θ)."""
    for theta in sample_angles:
        assert abs(lobachevsky(theta + math.pi) - lobachevsky(theta)) <= 4e-13


def test_doubling_identity(sample_angles):
    """Test Λ(2θ) = 2Λ(θ) + 2Λ(θ + π/2)."""
    for theta in sample_angles:
        lhs = lobachevsky(2 * theta)
        rhs = 2 * lobachevsky(theta) + 2 * lobachevsky(theta + math.pi / 2)
        assert abs(lhs - rhs) <= 4e-13


def test_tripling_at_pi_over_six():
    """Test 3Λ(π/3) = 2Λ(π/6) and Λ(π/6) = 3/2 Λ(π/3)."""
    assert 3 * lobachevsky(math.pi / 3) == pytest.approx(2 * lobachevsky(math.pi / 6), abs=1e-12)
    assert lobachevsky(math.pi / 6) == pytest.approx(1.5 * lobachevsky(math.pi / 3), abs=1e-12)


def test_paths_agree_on_half_circle():
    """Test that series and quadrature agree on [0, π]."""
    for theta in np.linspace(0.0, math.pi, 181):
        assert lobachevsky_series(theta) == pytest.approx(lobachevsky_quadrature(theta), abs=1e-12)


def test_paths_disagree_raises(mocker):
    """Test that a disagreement between paths is reported."""
    mocker.patch.object(LOBACHEVSKY_MODULE, "lobachevsky_quadrature", return_value=0.0)
    with pytest.raises(LobachevskyError) as exc_info:
        lobachevsky(1.0)
    assert exc_info.value.code == "evaluation-paths-disagree"


def test_tolerance_below_floor():
    """Test that tolerances below 1e-14 are refused."""
    with pytest.raises(LobachevskyError) as exc_info:
        lobachevsky(1.0, tol=1e-16)
    assert exc_info.value.code == "tolerance-unachievable"


def test_tightest_tolerance_accepted():
    """Test evaluation at the tightest supported tolerance."""
    assert lobachevsky(1.0, tol=1e-14) == pytest.approx(clausen_oracle(1.0), abs=1e-13)


def test_non_finite_angle():
    """Test that infinite angles are rejected."""
    with pytest.raises(LobachevskyError) as exc_info:
        lobachevsky(math.inf)
    assert exc_info.value.code == "non-finite-angle"


def test_regular_ideal_tetrahedron():
    """Test the regular ideal tetrahedron volume 3Λ(π/3)."""
    third = math.pi / 3
    assert ideal_tet_volume(TetAngles(third, third, third)) == pytest.approx(1.01494160640965362502, abs=1e-12)


def test_tet_volume_symmetric():
    """Test that the volume does not depend on the order of angles."""
    a, b = 0.4, 1.1
    c = math.pi - a - b
    volumes = [ideal_tet_volume(TetAngles(*order)) for order in ((a, b, c), (b, c, a), (c, a, b), (b, a, c))]
    assert max(volumes) - min(volumes) < 1e-14


def test_tet_angles_validated():
    """Test that angle sums and signs are checked."""
    with pytest.raises(TetAnglesError) as exc_info:
        TetAngles(1.0, 1.0, 1.0)
    assert exc_info.value.code == "angle-sum-violation"
    with pytest.raises(TetAnglesError):
        TetAngles(0.0, math.pi / 2, math.pi / 2)


@pytest.mark.parametrize("theta", [math.pi / 4, math.pi / 6, math.pi / 3, 0.955316618124509])
def test_accurate_to_a_few_ulps(theta):
    """Test that the returned value is good to near double precision."""
    assert lobachevsky(theta) == pytest.approx(clausen_oracle(theta), abs=1e-15)

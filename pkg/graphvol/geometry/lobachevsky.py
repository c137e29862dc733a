"""Lobachevsky function and ideal tetrahedron volumes.

``Λ(θ) = -∫₀^θ ln|2 sin t| dt`` is odd and π-periodic, so every evaluation
first reduces θ to ``[0, π/2]``. Two independent paths are then computed and
must agree:

* series: the Fourier series ``½ Σ sin(2nθ)/n²`` resummed into the Clausen
  expansion ``Cl₂(x) = x - x ln x + x Σ ζ(2k)/(k(2k+1)) (x/2π)^{2k}`` with
  ``x = 2θ ≤ π``, so the ratio of consecutive terms is at most 1/4 and the
  tail has a geometric bound;
* quadrature: ``ln(2 sin t) = ln(2t) + ln(sin t / t)``; the first piece
  integrates in closed form, the second is bounded and smooth and goes to
  :func:`scipy.integrate.quad`.

The quadrature value is the one returned; the series only has to agree with it.

An ideal tetrahedron with dihedral angles α, β, γ (α + β + γ = π) has volume
``Λ(α) + Λ(β) + Λ(γ)``.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from graphvol.core.config import MIN_TOLERANCE, settings
from graphvol.core.errors import GraphVolError
from graphvol.core.logging import get_logger

logger = get_logger(__name__)

AngleRadians = float

_MAX_TERMS = 64
_ZETA_EVEN = special.zeta(2.0 * np.arange(1, _MAX_TERMS + 1))


class LobachevskyError(GraphVolError):
    """Numerical evaluation failure."""

    code = "lobachevsky"


class TetAnglesError(GraphVolError):
    """Dihedral angles do not describe an ideal tetrahedron."""

    code = "angle-sum-violation"


def _resolve_tol(tol: float | None) -> float:
    tol = settings.lobachevsky_tol if tol is None else tol
    if not tol >= MIN_TOLERANCE:
        raise LobachevskyError(
            f"tolerance {tol:g} is below the achievable {MIN_TOLERANCE:g}",
            code="tolerance-unachievable",
        )
    return tol


def _reduce_angle(theta: AngleRadians) -> tuple[float, float]:
    """Return ``(sign, phi)`` with ``Λ(θ) = sign·Λ(phi)`` and ``phi ∈ [0, π/2]``."""
    if not math.isfinite(theta):
        raise LobachevskyError(f"angle {theta!r} is not finite", code="non-finite-angle")
    r = math.remainder(theta, math.pi)
    return (1.0, r) if r >= 0.0 else (-1.0, -r)


def lobachevsky_series(theta: AngleRadians, tol: float | None = None) -> float:
    """Λ(θ) from the resummed Fourier series with a rigorous tail bound."""
    tol = _resolve_tol(tol)
    sign, phi = _reduce_angle(theta)
    if phi == 0.0:
        return 0.0

    x = 2.0 * phi
    q = (x / (2.0 * math.pi)) ** 2
    power = 1.0
    terms: list[float] = []
    for k in range(1, _MAX_TERMS + 1):
        power *= q
        terms.append(_ZETA_EVEN[k - 1] / (k * (2 * k + 1)) * power)
        # ζ(2j) ≤ ζ(2) and the remaining terms shrink at least geometrically by q
        tail = _ZETA_EVEN[0] * power * q / ((k + 1) * (2 * k + 3) * (1.0 - q))
        if 0.5 * x * tail < 0.1 * tol:
            break
    else:
        raise LobachevskyError(
            f"series for theta={theta!r} did not reach tol={tol:g}",
            code="tolerance-unachievable",
        )

    clausen = math.fsum((x * math.fsum(terms), x, -x * math.log(x)))
    return sign * 0.5 * clausen


def _log_sinc(t: float) -> float:
    return math.log(math.sin(t) / t) if t else 0.0


def lobachevsky_quadrature(theta: AngleRadians, tol: float | None = None) -> float:
    """Λ(θ) by adaptive quadrature after splitting off the log singularity at 0."""
    tol = _resolve_tol(tol)
    sign, phi = _reduce_angle(theta)
    if phi == 0.0:
        return 0.0

    singular = phi * math.log(2.0 * phi) - phi
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        smooth, abserr = integrate.quad(_log_sinc, 0.0, phi, epsabs=0.1 * tol, epsrel=0.0, limit=200)
    if abserr > tol:
        raise LobachevskyError(
            f"quadrature error estimate {abserr:g} exceeds tol={tol:g} at theta={theta!r}",
            code="tolerance-unachievable",
        )
    return sign * -(singular + smooth)


def lobachevsky(theta: AngleRadians, tol: float | None = None) -> float:
    """Evaluate Λ(θ) to absolute error ``tol`` (default ``settings.lobachevsky_tol``).

    Raises:
        LobachevskyError: the two evaluation paths disagree by more than
            ``10·tol`` or the tolerance cannot be met
    """
    tol = _resolve_tol(tol)
    series = lobachevsky_series(theta, tol)
    quadrature = lobachevsky_quadrature(theta, tol)
    if abs(series - quadrature) > 10.0 * tol:
        raise LobachevskyError(
            f"series {series!r} and quadrature {quadrature!r} disagree at theta={theta!r}",
            code="evaluation-paths-disagree",
        )
    return quadrature


@dataclass(frozen=True)
class TetAngles:
    """Dihedral angles of an ideal tetrahedron (opposite edges share an angle)."""

    alpha: AngleRadians
    beta: AngleRadians
    gamma: AngleRadians

    def __post_init__(self) -> None:
        angles = (self.alpha, self.beta, self.gamma)
        if not all(math.isfinite(a) and a > 0.0 for a in angles):
            raise TetAnglesError(f"dihedral angles must be positive, got {angles}")
        excess = math.fsum(angles) - math.pi
        if abs(excess) > settings.angle_sum_tol:
            raise TetAnglesError(f"dihedral angles {angles} sum to pi{excess:+.3e}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)


def ideal_tet_volume(angles: TetAngles, tol: float | None = None) -> float:
    """Volume of the ideal tetrahedron with these angles, ``Λ(α) + Λ(β) + Λ(γ)``."""
    return math.fsum(lobachevsky(a, tol) for a in angles.as_tuple())

"""Ball-model coordinates for the cuboctahedron dihedral angle.

The right-angled ideal cuboctahedron is cut into tetrahedra whose ideal
vertices sit on the unit sphere. Two faces of the central piece are the plane
``x - y + z = 0`` and the geodesic sphere centred at ``(1,1,1)/√2`` with
radius ``1/√2``; their intersection angle is ``θ = arctan √2``. The auxiliary
points ``u₁`` and ``u₂`` lie on both faces and on the symmetry plane
``x - z = 0``; ``u₂`` is outside the ball, so plain surface membership does
not require the ball invariant.
"""

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel

from graphvol.core.config import settings
from graphvol.core.errors import GraphVolError
from graphvol.core.logging import get_logger
from graphvol.geometry.lobachevsky import AngleRadians

logger = get_logger(__name__)

Triple = tuple[float, float, float]


class GeometryError(GraphVolError):
    """Invalid ball-model input."""

    code = "geometry"


def _triple(values: Sequence[float] | np.ndarray) -> Triple:
    x, y, z = (float(v) for v in values)
    return (x, y, z)


@dataclass(frozen=True)
class BallPoint:
    """A point of the closed unit ball."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        norm_sq = self.x**2 + self.y**2 + self.z**2
        if norm_sq > 1.0 + settings.ball_tol:
            raise GeometryError(
                f"point ({self.x}, {self.y}, {self.z}) lies outside the unit ball "
                f"(|p|^2 = {norm_sq:.15g})",
                code="outside-ball",
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


PointLike = BallPoint | Sequence[float] | np.ndarray


def _as_array(p: PointLike) -> np.ndarray:
    if isinstance(p, BallPoint):
        return p.as_array()
    return np.asarray(p, dtype=float)


@dataclass(frozen=True)
class Plane:
    """Plane ``n·p = d`` with unit normal ``n``."""

    normal: Triple
    offset: float

    def __post_init__(self) -> None:
        if abs(float(np.linalg.norm(self.normal)) - 1.0) > settings.geodesic_orthogonality_tol:
            raise GeometryError(f"plane normal {self.normal} is not a unit vector", code="invalid-surface")
        if abs(self.offset) >= 1.0:
            raise GeometryError(f"plane with offset {self.offset} misses the ball", code="invalid-surface")

    @classmethod
    def from_equation(cls, a: float, b: float, c: float, d: float = 0.0) -> "Plane":
        """Plane ``a x + b y + c z = d``, normalised."""
        n = np.array([a, b, c], dtype=float)
        length = float(np.linalg.norm(n))
        if length == 0.0:
            raise GeometryError("plane normal must be non-zero", code="invalid-surface")
        return cls(normal=_triple(n / length), offset=d / length)

    def transformed(self, m: np.ndarray) -> "Plane":
        return Plane(normal=_triple(m @ np.array(self.normal)), offset=self.offset)


@dataclass(frozen=True)
class Sphere:
    """Sphere ``|p - c| = r`` meeting the unit sphere orthogonally."""

    center: Triple
    radius: float

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise GeometryError(f"sphere radius must be positive, got {self.radius}", code="invalid-surface")
        c_sq = float(np.dot(self.center, self.center))
        if abs(c_sq - self.radius**2 - 1.0) > settings.geodesic_orthogonality_tol:
            raise GeometryError(
                f"sphere at {self.center} with radius {self.radius} is not orthogonal to the unit sphere",
                code="invalid-surface",
            )

    def transformed(self, m: np.ndarray) -> "Sphere":
        return Sphere(center=_triple(m @ np.array(self.center)), radius=self.radius)


GeodesicSurface = Plane | Sphere


def on_surface(p: PointLike, s: GeodesicSurface, tol: float | None = None) -> bool:
    """Whether ``p`` satisfies the surface equation; ``p`` may lie outside the ball."""
    tol = settings.surface_membership_tol if tol is None else tol
    v = _as_array(p)
    if isinstance(s, Plane):
        residual = float(np.dot(s.normal, v)) - s.offset
    else:
        diff = v - np.array(s.center)
        residual = float(np.dot(diff, diff)) - s.radius**2
    return abs(residual) <= tol


def _non_intersecting(s1: GeodesicSurface, s2: GeodesicSurface) -> GeometryError:
    return GeometryError(f"surfaces {s1} and {s2} do not intersect", code="non-intersecting-surfaces")


def _clipped_arccos(value: float) -> AngleRadians:
    return math.acos(min(1.0, max(0.0, value)))


def surface_angle(s1: GeodesicSurface, s2: GeodesicSurface) -> AngleRadians:
    """Acute angle between two intersecting surfaces, in ``[0, π/2]``.

    Raises:
        GeometryError: ``non-intersecting-surfaces``
    """
    tol = settings.surface_membership_tol
    if isinstance(s1, Sphere) and isinstance(s2, Plane):
        s1, s2 = s2, s1

    if isinstance(s1, Plane) and isinstance(s2, Plane):
        dot = float(np.dot(s1.normal, s2.normal))
        sine = float(np.linalg.norm(np.cross(s1.normal, s2.normal)))
        if sine <= tol:
            # parallel: coincident counts as meeting at angle 0
            if abs(s1.offset - math.copysign(1.0, dot) * s2.offset) > tol:
                raise _non_intersecting(s1, s2)
            return 0.0
        return math.atan2(sine, abs(dot))

    if isinstance(s1, Plane) and isinstance(s2, Sphere):
        distance = abs(float(np.dot(s1.normal, s2.center)) - s1.offset)
        if distance > s2.radius + tol:
            raise _non_intersecting(s1, s2)
        return _clipped_arccos(distance / s2.radius)

    assert isinstance(s1, Sphere) and isinstance(s2, Sphere)
    d_sq = float(np.sum((np.array(s1.center) - np.array(s2.center)) ** 2))
    d = math.sqrt(d_sq)
    if d > s1.radius + s2.radius + tol or d < abs(s1.radius - s2.radius) - tol:
        raise _non_intersecting(s1, s2)
    return _clipped_arccos(abs(s1.radius**2 + s2.radius**2 - d_sq) / (2.0 * s1.radius * s2.radius))


def euclid_dist(p: PointLike, q: PointLike) -> float:
    return float(np.linalg.norm(_as_array(p) - _as_array(q)))


def signed_permutations() -> list[np.ndarray]:
    """The 48 signed permutation matrices (symmetries of the cube fixing the ball)."""
    matrices = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1.0, -1.0), repeat=3):
            m = np.zeros((3, 3))
            for row, (col, sign) in enumerate(zip(perm, signs, strict=True)):
                m[row, col] = sign
            matrices.append(m)
    return matrices


_R2 = math.sqrt(2.0)

# Ideal vertices of the central tetrahedron's faces.
V1: Triple = (0.0, 1.0 / _R2, 1.0 / _R2)
V2: Triple = (1.0 / _R2, 0.0, 1.0 / _R2)
V3: Triple = (1.0 / _R2, 1.0 / _R2, 0.0)
V4: Triple = (1.0 / _R2, 0.0, -1.0 / _R2)

U1: Triple = (1.0 / (3.0 * _R2), _R2 / 3.0, 1.0 / (3.0 * _R2))
U2: Triple = (1.0 / _R2, _R2, 1.0 / _R2)

EXPECTED_THETA: AngleRadians = math.atan(_R2)
EXPECTED_U1U2 = 2.0 / math.sqrt(3.0)


def face_plane() -> Plane:
    """``x - y + z = 0``, through ``v₁, v₃, v₄``."""
    return Plane.from_equation(1.0, -1.0, 1.0)


def face_sphere() -> Sphere:
    """Geodesic sphere through ``v₁, v₂, v₃``."""
    return Sphere(center=(1.0 / _R2, 1.0 / _R2, 1.0 / _R2), radius=1.0 / _R2)


def symmetry_plane() -> Plane:
    """``x - z = 0``, orthogonal to both faces."""
    return Plane.from_equation(1.0, 0.0, -1.0)


class ThetaReport(BaseModel):
    """Result of reproducing the dihedral angle from coordinates."""

    angle: float
    expected: float
    difference: float
    memberships: dict[str, bool]
    u1u2_distance: float
    expected_u1u2_distance: float
    passed: bool


def theta_report() -> ThetaReport:
    """Build the surfaces, check every recorded membership, and measure the angle.

    Raises:
        GeometryError: ``membership-check-failed`` if a recorded point is not
            on the surface it should be on
    """
    plane, sphere, cut = face_plane(), face_sphere(), symmetry_plane()
    surfaces: dict[str, GeodesicSurface] = {"face_plane": plane, "face_sphere": sphere, "symmetry_plane": cut}
    expected_on = {
        "u1": (U1, ("face_plane", "face_sphere", "symmetry_plane")),
        "u2": (U2, ("face_plane", "face_sphere", "symmetry_plane")),
        "v1": (V1, ("face_plane", "face_sphere")),
        "v2": (V2, ("face_sphere",)),
        "v3": (V3, ("face_plane", "face_sphere")),
        "v4": (V4, ("face_plane",)),
    }
    memberships: dict[str, bool] = {}
    for point_name, (point, names) in expected_on.items():
        for name in names:
            memberships[f"{point_name}@{name}"] = on_surface(point, surfaces[name])
    for vertex in ("v1", "v2", "v3", "v4"):
        point = expected_on[vertex][0]
        memberships[f"{vertex}@sphere_at_infinity"] = abs(float(np.dot(point, point)) - 1.0) <= settings.ball_tol

    failed = sorted(key for key, ok in memberships.items() if not ok)
    if failed:
        raise GeometryError(f"points off their surfaces: {', '.join(failed)}", code="membership-check-failed")

    angle = surface_angle(plane, sphere)
    distance = euclid_dist(U1, U2)
    difference = angle - EXPECTED_THETA
    passed = abs(difference) <= settings.constant_check_tol and abs(distance - EXPECTED_U1U2) <= settings.constant_check_tol
    if not passed:
        logger.warning("Dihedral angle mismatch", angle=angle, expected=EXPECTED_THETA, distance=distance)
    return ThetaReport(
        angle=angle,
        expected=EXPECTED_THETA,
        difference=difference,
        memberships=memberships,
        u1u2_distance=distance,
        expected_u1u2_distance=EXPECTED_U1U2,
        passed=passed,
    )


def verify_theta() -> AngleRadians:
    """The dihedral angle ``θ`` reproduced from ball-model coordinates."""
    return theta_report().angle

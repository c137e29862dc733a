"""Hyperbolic volume primitives: Lobachevsky function, constants, ball-model checks."""

from graphvol.geometry.constants import (
    ConstantCheck,
    VolumeConstant,
    b4trunc_volume,
    constant_checks,
    cuboct_volume_by_decomposition,
    cuboct_volume_closed_form,
    qcuboct_reference,
    regular_ideal_octahedron_volume,
    regular_ideal_tetrahedron_volume,
)
from graphvol.geometry.hypgeom import (
    BallPoint,
    GeodesicSurface,
    GeometryError,
    Plane,
    Sphere,
    ThetaReport,
    euclid_dist,
    on_surface,
    surface_angle,
    theta_report,
    verify_theta,
)
from graphvol.geometry.lobachevsky import (
    LobachevskyError,
    TetAngles,
    TetAnglesError,
    ideal_tet_volume,
    lobachevsky,
)

__all__ = [
    "BallPoint",
    "ConstantCheck",
    "GeodesicSurface",
    "GeometryError",
    "LobachevskyError",
    "Plane",
    "Sphere",
    "TetAngles",
    "TetAnglesError",
    "ThetaReport",
    "VolumeConstant",
    "b4trunc_volume",
    "constant_checks",
    "cuboct_volume_by_decomposition",
    "cuboct_volume_closed_form",
    "euclid_dist",
    "ideal_tet_volume",
    "lobachevsky",
    "on_surface",
    "qcuboct_reference",
    "regular_ideal_octahedron_volume",
    "regular_ideal_tetrahedron_volume",
    "surface_angle",
    "theta_report",
    "verify_theta",
]

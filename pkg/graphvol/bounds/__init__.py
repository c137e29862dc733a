"""Volume bounds from crossing counts and from cutting and doubling."""

from graphvol.bounds.volume import (
    EulerCharacteristicError,
    NonPositiveVolumeError,
    VolumeBoundReport,
    WrongAmbientError,
    doubling_lower_bound,
    doubling_lower_bound_geodesic,
    upper_bound,
    upper_bound_s3,
    upper_bound_thickened,
)

__all__ = [
    "EulerCharacteristicError",
    "NonPositiveVolumeError",
    "VolumeBoundReport",
    "WrongAmbientError",
    "doubling_lower_bound",
    "doubling_lower_bound_geodesic",
    "upper_bound",
    "upper_bound_s3",
    "upper_bound_thickened",
]

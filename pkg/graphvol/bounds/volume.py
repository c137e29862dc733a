"""Volume bounds for spatial-graph exteriors.

Upper bounds are the diagram crossing count times the volume of the largest
piece one crossing's octahedron can become: the maximal generalized
4-bipyramid in ``S³``, the right-angled ideal cuboctahedron in a thickened
surface of negative or zero Euler characteristic. Both are strict and both are
conditional on the exterior being tg-hyperbolic; a crossing-free cycle proves
it is not, which the report carries as a warning.

The lower bound comes from cutting along the thickened surface and doubling:
``vol(M) ≥ ½ vol(D(M \\ F)) + vol((F × I) \\ G)``.
"""

import math
from typing import Literal

from pydantic import BaseModel, Field

from graphvol.core.errors import GraphVolError
from graphvol.core.formatting import fmt
from graphvol.core.logging import get_logger
from graphvol.diagram.checks import crossing_count, find_crossing_free_cycle
from graphvol.diagram.models import GraphDiagram
from graphvol.geometry.constants import VolumeConstant, b4trunc_volume, qcuboct_reference

logger = get_logger(__name__)

HYPERBOLICITY_ASSUMPTION = "graph exterior is tg-hyperbolic"
DIAGRAM_COUNT_ASSUMPTION = "crossings counted in the supplied diagram, which bounds c(G) from above"


class WrongAmbientError(GraphVolError):
    code = "wrong-ambient"


class EulerCharacteristicError(GraphVolError):
    code = "euler-characteristic"


class NonPositiveVolumeError(GraphVolError):
    code = "non-positive-volume"


class VolumeBoundReport(BaseModel):
    """A volume bound with everything needed to audit it."""

    kind: Literal["strict-upper", "lower"]
    value: float
    ambient: str | None = None
    crossings: int | None = None
    constant: str | None = None
    provenance: str = ""
    assumptions: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)

    @property
    def relation(self) -> str:
        return "<" if self.kind == "strict-upper" else ">="


def _upper_bound(d: GraphDiagram, constant: VolumeConstant) -> VolumeBoundReport:
    c = crossing_count(d)
    warnings = []
    witness = find_crossing_free_cycle(d)
    if witness is not None:
        warnings.append(f"crossing-free-cycle edges={','.join(witness)}")
        logger.warning(
            "Bound is vacuous: exterior is not hyperbolic",
            witness=list(witness),
            constant=constant.name,
        )
    report = VolumeBoundReport(
        kind="strict-upper",
        value=c * constant.value,
        ambient=str(d.ambient),
        crossings=c,
        constant=constant.name,
        provenance=constant.provenance,
        assumptions=[HYPERBOLICITY_ASSUMPTION, DIAGRAM_COUNT_ASSUMPTION],
        warnings=warnings,
    )
    logger.info("Computed upper bound", value=fmt(report.value), crossings=c, constant=constant.name)
    return report


def upper_bound_s3(d: GraphDiagram) -> VolumeBoundReport:
    """``vol < c · vol(B₄ᵗʳᵘⁿᶜ)`` for a diagram in ``S³``.

    Raises:
        WrongAmbientError: the diagram lives in a thickened surface
    """
    if not d.ambient.is_s3:
        raise WrongAmbientError(f"S3 bound needs an S3 diagram, got ambient {d.ambient}")
    return _upper_bound(d, b4trunc_volume())


def upper_bound_thickened(d: GraphDiagram) -> VolumeBoundReport:
    """``vol < c · vol(Q_cuboct)`` for a diagram in ``F × I`` with ``χ(F) < 1``.

    Raises:
        WrongAmbientError: the diagram lives in ``S³``
        EulerCharacteristicError: ``χ(F) ≥ 1``
    """
    if d.ambient.is_s3:
        raise WrongAmbientError("thickened-surface bound needs a thickened ambient, got s3")
    chi = d.ambient.euler_characteristic
    if chi >= 1:
        raise EulerCharacteristicError(f"surface has Euler characteristic {chi}; the bound needs chi < 1")
    return _upper_bound(d, qcuboct_reference())


def upper_bound(d: GraphDiagram) -> VolumeBoundReport:
    """The upper bound matching the diagram's ambient space."""
    return upper_bound_s3(d) if d.ambient.is_s3 else upper_bound_thickened(d)


def _require_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0.0):
        raise NonPositiveVolumeError(f"{name} must be a positive finite volume, got {value!r}")


def doubling_lower_bound(vol_double_cut: float, vol_thickened_complement: float) -> VolumeBoundReport:
    """``½ · vol_double_cut + vol_thickened_complement``.

    Raises:
        NonPositiveVolumeError: either input is not a positive finite number
    """
    _require_positive("vol_double_cut", vol_double_cut)
    _require_positive("vol_thickened", vol_thickened_complement)
    return VolumeBoundReport(
        kind="lower",
        value=0.5 * vol_double_cut + vol_thickened_complement,
        provenance="half the volume of the double of the cut manifold plus the thickened-surface complement",
        assumptions=[
            "both manifolds are tg-hyperbolic",
            "volumes supplied by the caller",
        ],
    )


def doubling_lower_bound_geodesic(vol_manifold: float, vol_thickened_complement: float) -> VolumeBoundReport:
    """The totally geodesic case, where half the double's volume is ``vol(M)``."""
    _require_positive("vol_manifold", vol_manifold)
    return doubling_lower_bound(2.0 * vol_manifold, vol_thickened_complement)

"""Named volume constants and their numerical cross-checks.

Reference values are stored as decimal strings together with a provenance
note and parsed at load time; derived values are recomputed from Λ.
"""

import math
from dataclasses import dataclass

from pydantic import BaseModel

from graphvol.core.config import settings
from graphvol.core.logging import get_logger
from graphvol.geometry.lobachevsky import TetAngles, ideal_tet_volume, lobachevsky

logger = get_logger(__name__)

# Dihedral angle of the right-angled ideal cuboctahedron's tetrahedra.
THETA = math.atan(math.sqrt(2.0))

QCUBOCT_DIGITS = "12.04609204009437764726837862923"
B4TRUNC_DIGITS = "5.07470803204826812510601277"

QCUBOCT_PROVENANCE = (
    "ideal right-angled cuboctahedron, closed form "
    "8L(pi/2-t)+16L(t)-6L(2t)+L(4t) at t=arctan(sqrt 2); "
    f"reference digits {QCUBOCT_DIGITS}"
)
B4TRUNC_PROVENANCE = (
    "maximal-volume generalized 4-bipyramid (dihedral angles 2pi/3 on the four "
    "equatorial edges, pi/3 on the other eight); published value "
    f"{B4TRUNC_DIGITS}, taken as given"
)


@dataclass(frozen=True)
class VolumeConstant:
    """A named volume with its audit trail."""

    name: str
    value: float
    provenance: str
    reference_digits: str | None = None

    def __post_init__(self) -> None:
        if not self.value > 0.0:
            raise ValueError(f"volume constant {self.name} must be positive, got {self.value}")

    @classmethod
    def from_digits(cls, name: str, digits: str, provenance: str) -> "VolumeConstant":
        return cls(name=name, value=float(digits), provenance=provenance, reference_digits=digits)


def cuboct_volume_closed_form(tol: float | None = None) -> VolumeConstant:
    """``8Λ(π/2-θ) + 16Λ(θ) - 6Λ(2θ) + Λ(4θ)`` at ``θ = arctan √2``."""
    t = THETA
    value = math.fsum(
        [
            8.0 * lobachevsky(math.pi / 2.0 - t, tol),
            16.0 * lobachevsky(t, tol),
            -6.0 * lobachevsky(2.0 * t, tol),
            lobachevsky(4.0 * t, tol),
        ]
    )
    return VolumeConstant(
        name="QCUBOCT",
        value=value,
        provenance=QCUBOCT_PROVENANCE,
        reference_digits=QCUBOCT_DIGITS,
    )


def cuboct_volume_unfolded(tol: float | None = None) -> float:
    """The same volume before using oddness and periodicity of Λ.

    ``8Λ(π/2-θ) + 16Λ(θ) + 6Λ(π-2θ) + Λ(4θ-π)``
    """
    t = THETA
    return math.fsum(
        [
            8.0 * lobachevsky(math.pi / 2.0 - t, tol),
            16.0 * lobachevsky(t, tol),
            6.0 * lobachevsky(math.pi - 2.0 * t, tol),
            lobachevsky(4.0 * t - math.pi, tol),
        ]
    )


def cuboct_tetrahedron_classes(theta: float = THETA) -> list[tuple[int, TetAngles]]:
    """The three isometry classes of the 13-tetrahedron decomposition, with multiplicities."""
    return [
        (8, TetAngles(math.pi / 2.0, math.pi / 2.0 - theta, theta)),
        (4, TetAngles(theta, theta, math.pi - 2.0 * theta)),
        (1, TetAngles(math.pi - 2.0 * theta, math.pi - 2.0 * theta, 4.0 * theta - math.pi)),
    ]


def cuboct_volume_by_decomposition(tol: float | None = None) -> float:
    """Sum of ideal tetrahedron volumes over the 8 + 4 + 1 decomposition."""
    return math.fsum(
        count * ideal_tet_volume(angles, tol) for count, angles in cuboct_tetrahedron_classes()
    )


def qcuboct_reference() -> VolumeConstant:
    """The cuboctahedron volume from its stored digits, for bound arithmetic."""
    return VolumeConstant.from_digits("QCUBOCT", QCUBOCT_DIGITS, QCUBOCT_PROVENANCE)


def b4trunc_volume() -> VolumeConstant:
    """Volume of the maximal generalized 4-bipyramid (stored, not computed)."""
    return VolumeConstant.from_digits("B4TRUNC", B4TRUNC_DIGITS, B4TRUNC_PROVENANCE)


def regular_ideal_octahedron_volume(tol: float | None = None) -> VolumeConstant:
    """``8Λ(π/4)``."""
    return VolumeConstant(
        name="VOCT",
        value=8.0 * lobachevsky(math.pi / 4.0, tol),
        provenance="regular ideal octahedron, 8L(pi/4)",
    )


def regular_ideal_tetrahedron_volume(tol: float | None = None) -> VolumeConstant:
    """``3Λ(π/3)``."""
    return VolumeConstant(
        name="VTET",
        value=ideal_tet_volume(TetAngles(math.pi / 3.0, math.pi / 3.0, math.pi / 3.0), tol),
        provenance="regular ideal tetrahedron, 3L(pi/3)",
    )


class ConstantCheck(BaseModel):
    """One named constant and the result of its cross-checks."""

    name: str
    value: float
    provenance: str
    passed: bool
    details: list[str]


def constant_checks(tol: float | None = None) -> list[ConstantCheck]:
    """Recompute every constant and run its cross-checks."""
    check_tol = settings.constant_check_tol
    results: list[ConstantCheck] = []

    cuboct = cuboct_volume_closed_form(tol)
    decomposition = cuboct_volume_by_decomposition(tol)
    unfolded = cuboct_volume_unfolded(tol)
    cuboct_gaps = {
        "reference": abs(cuboct.value - float(QCUBOCT_DIGITS)),
        "decomposition": abs(decomposition - cuboct.value),
        "unfolded": abs(unfolded - cuboct.value),
    }
    results.append(
        ConstantCheck(
            name=cuboct.name,
            value=cuboct.value,
            provenance=cuboct.provenance,
            passed=all(gap <= check_tol for gap in cuboct_gaps.values()),
            details=[f"{label}_gap={gap:.3e}" for label, gap in cuboct_gaps.items()],
        )
    )

    b4 = b4trunc_volume()
    tetrahedron = regular_ideal_tetrahedron_volume(tol)
    b4_gaps = {
        "ten_lambda_pi_6": abs(b4.value - 10.0 * lobachevsky(math.pi / 6.0, tol)),
        "five_vtet": abs(b4.value - 5.0 * tetrahedron.value),
    }
    results.append(
        ConstantCheck(
            name=b4.name,
            value=b4.value,
            provenance=b4.provenance,
            passed=all(gap <= check_tol for gap in b4_gaps.values()),
            details=[f"{label}_gap={gap:.3e}" for label, gap in b4_gaps.items()],
        )
    )

    octahedron = regular_ideal_octahedron_volume(tol)
    results.append(
        ConstantCheck(
            name=octahedron.name,
            value=octahedron.value,
            provenance=octahedron.provenance,
            passed=octahedron.value < b4.value < cuboct.value,
            details=["ordering VOCT < B4TRUNC < QCUBOCT"],
        )
    )

    tet_gap = abs(tetrahedron.value - 2.0 * lobachevsky(math.pi / 6.0, tol))
    results.append(
        ConstantCheck(
            name=tetrahedron.name,
            value=tetrahedron.value,
            provenance=tetrahedron.provenance,
            passed=tet_gap <= check_tol,
            details=[f"two_lambda_pi_6_gap={tet_gap:.3e}"],
        )
    )

    for result in results:
        if not result.passed:
            logger.warning("Constant cross-check failed", constant=result.name, details=result.details)
    return results

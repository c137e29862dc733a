"""Fixed numeric formatter shared by every report."""

from graphvol.core.config import settings


def fmt(value: float, digits: int | None = None) -> str:
    """Render ``value`` with a fixed number of significant digits (15 by default)."""
    return format(value, f".{digits or settings.significant_digits}g")

"""graphvol - volume bounds for spatial graph exteriors."""

__version__ = "0.1.0"

"""Command-line front end."""

from graphvol.cli.main import cli

__all__ = ["cli"]

"""Pytest configuration and fixtures."""

from collections.abc import Callable
from pathlib import Path

import pytest

from graphvol.core.logging import setup_logging
from graphvol.diagram import AmbientSpace, Crossing, Edge, GraphDiagram, Passage, Role, parse

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def _logging() -> None:
    """Point logging at the current (captured) stderr for every test."""
    setup_logging()


@pytest.fixture
def fixture_path() -> Callable[[str], Path]:
    """Path of a diagram file under ``tests/fixtures``."""
    return lambda name: FIXTURES / f"{name}.graph"


@pytest.fixture
def load_diagram() -> Callable[[str], GraphDiagram]:
    """Parse a diagram file from ``tests/fixtures``."""
    return lambda name: parse((FIXTURES / f"{name}.graph").read_text(encoding="utf-8"))


@pytest.fixture
def trefoil(load_diagram: Callable[[str], GraphDiagram]) -> GraphDiagram:
    return load_diagram("trefoil")


@pytest.fixture
def flat_theta(load_diagram: Callable[[str], GraphDiagram]) -> GraphDiagram:
    return load_diagram("flat_theta")


@pytest.fixture
def crossed_theta(load_diagram: Callable[[str], GraphDiagram]) -> GraphDiagram:
    return load_diagram("crossed_theta")


@pytest.fixture
def kinked_loop() -> Callable[[int, AmbientSpace], GraphDiagram]:
    """A single loop with ``c`` kinks, each one crossing of the loop with itself."""

    def build(c: int, ambient: AmbientSpace) -> GraphDiagram:
        passages = []
        for i in range(c):
            passages += [Passage(f"x{i}", Role.OVER), Passage(f"x{i}", Role.UNDER)]
        return GraphDiagram(
            edges=(Edge("k", None, tuple(passages)),),
            crossings=tuple(Crossing(f"x{i}") for i in range(c)),
            ambient=ambient,
        )

    return build

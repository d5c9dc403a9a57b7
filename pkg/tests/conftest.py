from __future__ import annotations

import pytest

from pvtopo.fixtures import load_fixture
from pvtopo.sset import build_complex

CUBE_TRIANGLES = [
    (0, 1, 4), (0, 2, 4), (0, 1, 5), (0, 3, 5), (0, 2, 6), (0, 3, 6),
    (1, 4, 7), (1, 5, 7), (2, 4, 7), (2, 6, 7), (3, 5, 7), (3, 6, 7),
]


@pytest.fixture
def triangle():
    return build_complex([("a", "b", "c")])


@pytest.fixture
def hollow_cube():
    """Boundary of the cube with integer vertex names."""
    return build_complex(CUBE_TRIANGLES)


@pytest.fixture
def petri():
    return load_fixture("petri-net").X


@pytest.fixture
def swiss():
    return load_fixture("swiss-reduced")


@pytest.fixture
def cube_program():
    return load_fixture("cube")

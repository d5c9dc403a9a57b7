"""Bundled example inputs."""

from __future__ import annotations

from importlib import resources

FIXTURES = {
    "hollow-cube": "hollow_cube.json",
    "petri-net": "petri_net.json",
    "swiss-reduced": "swiss_reduced.pv",
    "swiss-a": "swiss_a.pv",
    "cube": "cube.pv",
}


def fixture_text(name: str) -> str:
    return resources.files("pvtopo").joinpath("data", FIXTURES[name]).read_text(encoding="utf-8")


def fixture_path(name: str):
    return resources.files("pvtopo").joinpath("data", FIXTURES[name])


def load_fixture(name: str):
    """Load a bundled fixture as a :class:`pvtopo.io.LoadedInput`."""
    from .io import load_text

    return load_text(fixture_text(name))

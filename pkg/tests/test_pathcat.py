import pytest

from pvtopo.errors import UnknownVertex
from pvtopo.pathcat import edge_paths, hom_classes, rewrites

from oracles import dfs_paths as dfs_paths_oracle
from oracles import rewrite_classes as classes_oracle


def test_triangle(triangle):
    assert edge_paths(triangle, "a", "c") == [("a", "b", "c"), ("a", "c")]
    (cls,) = hom_classes(triangle, "a", "c").classes
    assert set(cls) == {("a", "c"), ("a", "b", "c")}
    assert hom_classes(triangle, "a", "c").representatives == (("a", "c"),)


def test_hollow_cube(hollow_cube):
    paths = edge_paths(hollow_cube, 0, 7)
    assert len(paths) == 12
    assert sorted(len(p) - 1 for p in paths) == [2] * 6 + [3] * 6
    assert set(paths) == dfs_paths_oracle(hollow_cube, 0, 7)
    assert len(hom_classes(hollow_cube, 0, 7)) == 1


def test_swiss(swiss):
    X = swiss.X
    paths = edge_paths(X, (0, 0), (4, 4))
    assert len(paths) >= 2
    assert set(paths) == dfs_paths_oracle(X, (0, 0), (4, 4))
    hc = hom_classes(X, (0, 0), (4, 4))
    assert len(hc) == 2
    assert {frozenset(c) for c in hc.classes} == classes_oracle(X, (0, 0), (4, 4))


@pytest.mark.parametrize("a, b", [("a", "l"), ("a", "k"), ("b", "l"), ("c", "j")])
def test_petri_matches_oracle(petri, a, b):
    hc = hom_classes(petri, a, b)
    assert {frozenset(c) for c in hc.classes} == classes_oracle(petri, a, b)


def test_identity_only(hollow_cube, petri, swiss):
    for X in (hollow_cube, petri, swiss.X):
        for v in X.vertices:
            assert hom_classes(X, v, v).classes == (((v,),),)


def test_classes_are_closed(petri, swiss):
    for X, a, b in ((petri, "a", "l"), (swiss.X, (0, 0), (4, 4))):
        hc = hom_classes(X, a, b)
        where = {p: k for k, c in enumerate(hc.classes) for p in c}
        for p, k in where.items():
            for q in rewrites(X, p):
                assert where[q] == k


def test_representatives_are_shortest(swiss):
    X = swiss.X
    for cls in hom_classes(X, (0, 0), (4, 4)).classes:
        assert len(cls[0]) == min(len(p) for p in cls)


def test_unknown_vertex(hollow_cube):
    with pytest.raises(UnknownVertex):
        edge_paths(hollow_cube, 0, "x")
    with pytest.raises(UnknownVertex):
        hom_classes(hollow_cube, "x", 0)

from itertools import combinations

import pytest

from pvtopo.errors import IndexOutOfRange, PreconditionViolated, UnknownVertex
from pvtopo.homology import components
from pvtopo.necklace import (
    MapSimplex,
    Necklace,
    check_necklace,
    enumerate_necklaces,
    face_map,
    flag_count,
    flanked_flags,
    format_simplex,
    mapping_space,
    subnecklace,
)
from pvtopo.pathcat import hom_classes

from oracles import necklace_sets as oracle_necklaces


def as_sets(necklaces):
    return {(n.joints, n.vertex_set) for n in necklaces}


def fubini_oracle(k):
    """Count strict chains through the boolean lattice on k elements by brute force."""
    if k == 0:
        return 1
    full = frozenset(range(k))

    def chains(current):
        if current == full:
            return 1
        rest = sorted(full - current)
        total = 0
        for r in range(1, len(rest) + 1):
            for add in combinations(rest, r):
                total += chains(current | frozenset(add))
        return total

    return chains(frozenset())


def test_triangle_necklaces(triangle):
    got = enumerate_necklaces(triangle, "a", "c")
    assert [n.beads for n in got] == [(("a", "b"), ("b", "c")), (("a", "c"),), (("a", "b", "c"),)]


def test_hollow_cube_necklaces(hollow_cube):
    got = enumerate_necklaces(hollow_cube, 0, 7)
    assert len(got) == 24
    assert as_sets(got) == oracle_necklaces(hollow_cube, 0, 7)
    shapes = sorted(n.shape for n in got)
    assert shapes.count((1, 1)) == 6 and shapes.count((1, 1, 1)) == 6
    assert sum(1 for s in shapes if 2 in s) == 12
    assert all(check_necklace(hollow_cube, n, 0, 7) for n in got)


def test_unreachable_gives_nothing(hollow_cube):
    assert enumerate_necklaces(hollow_cube, 7, 0) == []
    assert enumerate_necklaces(hollow_cube, 4, 5) == []


def test_trivial_necklace(hollow_cube):
    (n,) = enumerate_necklaces(hollow_cube, 3, 3)
    assert n.beads == () and n.joints == {3} and n.vertex_set == {3}


def test_unknown_vertex(hollow_cube):
    with pytest.raises(UnknownVertex):
        enumerate_necklaces(hollow_cube, 0, 99)


@pytest.mark.parametrize("a, b", [("a", "l"), ("a", "k"), ("b", "l"), ("c", "k"), ("a", "f")])
def test_petri_necklaces_match_oracle(petri, a, b):
    assert as_sets(enumerate_necklaces(petri, a, b)) == oracle_necklaces(petri, a, b)


def test_subnecklace_examples(hollow_cube):
    N = Necklace((("a", "b", "c"),), "a")
    assert subnecklace(N, {"a", "b", "c"}, {"a", "b", "c"}).beads == (("a", "b"), ("b", "c"))
    assert subnecklace(N, {"a", "c"}, {"a", "c"}).beads == (("a", "c"),)
    M = Necklace(((0, 1, 4), (4, 7)), 0)
    sub = subnecklace(M, {0, 4, 7}, {0, 4, 7})
    assert sub.beads == ((0, 4), (4, 7))
    assert all(hollow_cube.contains(b) for b in sub.beads)


def test_subnecklace_precondition():
    N = Necklace((("a", "b", "c"),), "a")
    with pytest.raises(PreconditionViolated):
        subnecklace(N, {"a"}, {"a", "c"})
    with pytest.raises(PreconditionViolated):
        subnecklace(N, {"a", "c"}, {"a", "c", "z"})


def test_face_map_hollow_cube(hollow_cube):
    N = Necklace(((0, 1), (1, 4, 7)), 0)
    s = MapSimplex(N, (frozenset({0, 1, 7}), frozenset({0, 1, 4, 7})))
    d1 = face_map(hollow_cube, s, 1)
    d0 = face_map(hollow_cube, s, 0)
    assert d1.necklace.beads == ((0, 1), (1, 7)) and d1.flag == (frozenset({0, 1, 7}),)
    assert d0.necklace.beads == ((0, 1), (1, 4), (4, 7)) and d0.flag == (frozenset({0, 1, 4, 7}),)
    with pytest.raises(IndexOutOfRange):
        face_map(hollow_cube, s, 2)
    with pytest.raises(IndexOutOfRange):
        face_map(hollow_cube, d0, 0)


def test_face_map_triangle(triangle):
    s = MapSimplex(Necklace((("a", "b", "c"),), "a"), (frozenset("ac"), frozenset("abc")))
    assert face_map(triangle, s, 1).necklace.beads == (("a", "c"),)
    assert face_map(triangle, s, 0).necklace.beads == (("a", "b"), ("b", "c"))


def test_petri_triangle_faces(petri):
    # the triangle on the edge paths a-f-l, a-f-i-l, a-c-f-i-l
    P = mapping_space(petri, "a", "l")
    by_flag = {s.flag: s for s in P.simplices[2]}
    flag = (frozenset("afl"), frozenset("afil"), frozenset("acfil"))
    s = by_flag[flag]
    assert s.necklace.shape == (2, 2)
    assert face_map(petri, s, 1).flag == (frozenset("afl"), frozenset("acfil"))
    for i in range(3):
        assert face_map(petri, s, i) in P.simplices[1]


def test_mapping_space_hollow_cube(hollow_cube):
    P = mapping_space(hollow_cube, 0, 7)
    assert P.fvector() == [12, 12]
    assert components(P)[0] == 1
    # the 1-skeleton is a single 12-cycle: every vertex has degree 2
    degree = [0] * 12
    for f0, f1 in P.faces[1]:
        assert f0 != f1
        degree[f0] += 1
        degree[f1] += 1
    assert degree == [2] * 12


def test_mapping_space_triangle(triangle):
    P = mapping_space(triangle, "a", "c")
    assert P.fvector() == [2, 1]
    names = [format_simplex(triangle, s) for s in P.simplices[0]]
    assert sorted(names) == ["(Δ¹, {a,c})", "(Δ¹∨Δ¹, {a,b,c})"]


def test_mapping_space_point(hollow_cube):
    P = mapping_space(hollow_cube, 5, 5)
    assert P.fvector() == [1]


def test_max_dim_caps(petri):
    full = mapping_space(petri, "a", "l")
    capped = mapping_space(petri, "a", "l", max_dim=1)
    assert capped.fvector() == full.fvector()[:2]


def test_format_simplex(hollow_cube):
    s = MapSimplex(Necklace(((0, 1), (1, 4, 7)), 0), (frozenset({0, 1, 7}), frozenset({0, 1, 4, 7})))
    assert format_simplex(hollow_cube, s) == "(Δ¹∨Δ², {0,1,7} ⊂ {0,1,4,7})"


@pytest.mark.parametrize("k", range(6))
def test_flag_count_matches_brute_force(k):
    assert flag_count(k) == fubini_oracle(k)


def _presentation_checks(X, a, b):
    P = mapping_space(X, a, b)
    assert P.check_simplicial_identities()
    index = [{s.flag: k for k, s in enumerate(layer)} for layer in P.simplices]
    for d in range(1, len(P.simplices)):
        for k, s in enumerate(P.simplices[d]):
            for i in range(d + 1):
                f = face_map(X, s, i)
                assert all(x < y for x, y in zip(f.flag, f.flag[1:]))
                assert f.flag[0] == f.necklace.joints and f.flag[-1] == f.necklace.vertex_set
                assert index[d - 1][f.flag] == P.faces[d][k][i]
                assert P.simplices[d - 1][P.faces[d][k][i]].necklace == f.necklace
    per_necklace = {}
    for layer in P.simplices:
        for s in layer:
            per_necklace[s.necklace] = per_necklace.get(s.necklace, 0) + 1
    for N, count in per_necklace.items():
        assert count == flag_count(len(N.vertex_set - N.joints))
    assert set(per_necklace) == set(enumerate_necklaces(X, a, b))
    return P


def test_presentation_invariants_fixtures(hollow_cube, petri, swiss):
    _presentation_checks(hollow_cube, 0, 7)
    _presentation_checks(petri, "a", "l")
    _presentation_checks(swiss.X, (0, 0), (4, 4))


def test_pi0_matches_path_classes_on_fixtures(hollow_cube, petri, swiss):
    for X, a, b in ((hollow_cube, 0, 7), (petri, "a", "l"), (swiss.X, (0, 0), (4, 4))):
        assert components(mapping_space(X, a, b))[0] == len(hom_classes(X, a, b))


def test_flanked_flags_are_strict():
    N = Necklace((("a", "b", "c", "d"),), "a")
    flags = list(flanked_flags(N))
    assert len(flags) == 3
    for f in flags:
        assert f[0] == frozenset("ad") and f[-1] == frozenset("abcd")
        assert all(x < y for x, y in zip(f, f[1:]))

import pytest

from pvtopo.analysis import deadlocks, reachability
from pvtopo.model import build_program_model
from pvtopo.pv import parse_program

from randprog import random_programs


def report_for(inp):
    return reachability(inp.X, inp.initial, inp.final)


def test_swiss(swiss):
    r = report_for(swiss)
    assert r.deadlocks == {(1, 1)}
    assert r.unreachable == {(3, 3)}
    assert r.doomed == {(1, 1)}
    assert (0, 0) in r.reachable and (4, 4) in r.coreachable


def test_cube_has_no_deadlock(cube_program):
    r = report_for(cube_program)
    assert r.deadlocks == frozenset()
    assert r.doomed == frozenset()
    assert r.unreachable == frozenset()


def test_single_process():
    X, info = build_program_model(parse_program("sem a = 1\nproc A = Pa.Va"))
    r = reachability(X, info.initial, info.final)
    assert r.reachable == {(0,), (1,), (2,)}
    assert not r.deadlocks and not r.doomed and not r.unreachable


def test_invalid_final_state():
    X, info = build_program_model(parse_program("sem a = 1\nproc A = Pa\nproc B = Pa"))
    assert not info.final_is_valid
    r = reachability(X, info.initial, info.final)
    assert r.coreachable == frozenset()
    assert r.deadlocks == {(1, 0), (0, 1)}


def _maximal_paths_end_in_deadlock(X, v, final):
    succ = X.successors(v)
    if not succ:
        return v != final
    return all(_maximal_paths_end_in_deadlock(X, w, final) for w in succ)


def _check(X, initial, final):
    r = reachability(X, initial, final)
    sinks = {v for v in X.vertices if not X.successors(v)}
    assert r.deadlocks | ({final} & sinks) == sinks
    assert r.deadlocks == deadlocks(X, final)
    if X.has_vertex(initial):
        assert initial in r.reachable
    if X.has_vertex(final):
        assert final in r.coreachable
    assert r.unreachable == set(X.vertices) - r.reachable
    for v in r.doomed:
        assert v in r.reachable
        assert _maximal_paths_end_in_deadlock(X, v, final)
    for v in r.reachable - r.doomed - {final}:
        assert v in r.coreachable


@pytest.mark.parametrize("spec", random_programs(60, seed=11), ids=lambda s: "-".join(str(len(p.ops)) for p in s.processes))
def test_invariants_on_random_programs(spec):
    X, info = build_program_model(spec)
    _check(X, info.initial, info.final)


def test_invariants_on_fixtures(swiss, cube_program):
    for inp in (swiss, cube_program):
        _check(inp.X, inp.initial, inp.final)

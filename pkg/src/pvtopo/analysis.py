"""Reachability diagnostics on the directed 1-skeleton of a model."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .sset import OrderedSSet, Vertex


@dataclass(frozen=True)
class StateReport:
    valid: tuple
    reachable: frozenset
    coreachable: frozenset
    deadlocks: frozenset
    unreachable: frozenset
    doomed: frozenset
    initial: Vertex
    final: Vertex


def deadlocks(X: OrderedSSet, final: Vertex) -> set:
    """Valid states other than ``final`` with no outgoing valid edge."""
    return {v for v in X.vertices if v != final and not X.successors(v)}


def _bfs(start, step) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in step(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def reachability(X: OrderedSSet, initial: Vertex, final: Vertex) -> StateReport:
    """Forward search from ``initial`` and backward search from ``final``.

    Either endpoint may be absent from X (an invalid state); its search
    then covers nothing.
    """
    reach = _bfs(initial, X.successors) if X.has_vertex(initial) else set()
    if X.has_vertex(final):
        preds = X.predecessors()
        coreach = _bfs(final, preds.__getitem__)
    else:
        coreach = set()
    valid = X.vertices
    return StateReport(
        valid=valid,
        reachable=frozenset(reach),
        coreachable=frozenset(coreach),
        deadlocks=frozenset(deadlocks(X, final)),
        unreachable=frozenset(v for v in valid if v not in reach),
        doomed=frozenset(v for v in reach if v not in coreach and v != final),
        initial=initial,
        final=final,
    )

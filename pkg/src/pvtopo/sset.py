"""Finite ordered simplicial sets stored as their nondegenerate simplices.

An ordered simplicial set has simplices determined by their vertex sets and
no directed loops, so every nondegenerate simplex is a strictly increasing
chain of vertices in some linear extension of the vertex order.  Chains are
plain tuples of vertex ids; the complex keeps the rank of every vertex.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import CyclicOrder, DuplicateVertexInSimplex, IndexOutOfRange, UnknownVertex

Vertex = Hashable
Chain = tuple


def face(c: Sequence, i: int) -> Chain:
    """Return the i-th face of a chain: the chain with vertex i removed."""
    c = tuple(c)
    if len(c) < 2:
        raise IndexOutOfRange(f"a {len(c) - 1}-simplex has no faces")
    if not 0 <= i < len(c):
        raise IndexOutOfRange(f"face index {i} out of range for dimension {len(c) - 1}")
    return c[:i] + c[i + 1:]


class OrderedSSet:
    """Immutable downward-closed family of vertex chains.

    ``vertices`` must be listed in rank order.  Simplices may be given in any
    vertex order; they are normalised to ascending rank.
    """

    def __init__(self, vertices: Sequence[Vertex], simplices: Iterable[Sequence[Vertex]] = ()):
        self._vertices = tuple(vertices)
        self._rank = {v: r for r, v in enumerate(self._vertices)}
        if len(self._rank) != len(self._vertices):
            raise DuplicateVertexInSimplex(self._vertices)
        by_dim: dict[int, set[Chain]] = defaultdict(set)
        by_dim[0] = {(v,) for v in self._vertices}
        for s in simplices:
            c = self.normalize(s)
            by_dim[len(c) - 1].add(c)
        top = max((d for d, layer in by_dim.items() if layer), default=-1)
        self._simplices = tuple(
            tuple(sorted(by_dim.get(d, ()), key=self.chain_key)) for d in range(top + 1)
        )
        self._members = frozenset(c for layer in self._simplices for c in layer)
        self._from: dict[Vertex, list[Chain]] = defaultdict(list)
        self._apex: dict[tuple[Vertex, Vertex], list[Vertex]] = defaultdict(list)
        for layer in self._simplices[1:]:
            for c in layer:
                self._from[c[0]].append(c)
        if len(self._simplices) > 2:
            for u, v, w in self._simplices[2]:
                self._apex[(u, w)].append(v)

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def dimension(self) -> int:
        return len(self._simplices) - 1

    def rank(self, v: Vertex) -> int:
        try:
            return self._rank[v]
        except (KeyError, TypeError):
            raise UnknownVertex(v) from None

    def has_vertex(self, v: Vertex) -> bool:
        try:
            return v in self._rank
        except TypeError:
            return False

    def chain_key(self, c: Sequence[Vertex]) -> tuple[int, ...]:
        return tuple(self._rank[v] for v in c)

    def normalize(self, s: Sequence[Vertex]) -> Chain:
        """Sort a vertex collection into a chain, rejecting repeats."""
        c = tuple(sorted(s, key=self.rank))
        if not c:
            raise ValueError("empty simplex")
        if len(set(c)) != len(c):
            raise DuplicateVertexInSimplex(s)
        return c

    def simplices(self, dim: int | None = None):
        """All stored chains of one dimension, or every chain when ``dim`` is None."""
        if dim is None:
            return [c for layer in self._simplices for c in layer]
        if 0 <= dim < len(self._simplices):
            return list(self._simplices[dim])
        return []

    def counts(self) -> list[int]:
        return [len(layer) for layer in self._simplices]

    def __contains__(self, c) -> bool:
        return self.contains(c)

    def contains(self, c: Sequence[Vertex]) -> bool:
        try:
            return tuple(c) in self._members
        except TypeError:
            return False

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[Chain]:
        for layer in self._simplices:
            yield from layer

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderedSSet):
            return NotImplemented
        return self._vertices == other._vertices and self._members == other._members

    def __hash__(self) -> int:
        return hash((self._vertices, self._members))

    def __repr__(self) -> str:
        return f"OrderedSSet(counts={self.counts()})"

    # -- navigation ----------------------------------------------------

    def simplices_from(self, v: Vertex) -> list[Chain]:
        """Simplices of dimension >= 1 whose minimum vertex is ``v``.

        Ordered by dimension, then lexicographically on ranks.
        """
        self.rank(v)
        return list(self._from.get(v, ()))

    def edges(self) -> list[Chain]:
        return self.simplices(1)

    def successors(self, v: Vertex) -> list[Vertex]:
        return [c[1] for c in self.simplices_from(v) if len(c) == 2]

    def predecessors(self) -> dict[Vertex, list[Vertex]]:
        preds: dict[Vertex, list[Vertex]] = {v: [] for v in self._vertices}
        for u, w in self.edges():
            preds[w].append(u)
        return preds

    def apexes(self, u: Vertex, w: Vertex) -> list[Vertex]:
        """Middle vertices v with (u, v, w) a stored triangle."""
        return list(self._apex.get((u, w), ()))

    def maximal_simplices(self) -> list[Chain]:
        covered = set()
        for layer in self._simplices[1:]:
            for c in layer:
                for i in range(len(c)):
                    covered.add(face(c, i))
        return [c for c in self if c not in covered]

    # -- invariants ----------------------------------------------------

    def is_downward_closed(self) -> bool:
        return all(face(c, i) in self._members for c in self if len(c) > 1 for i in range(len(c)))

    def check_simplicial_identities(self) -> bool:
        for c in self:
            n = len(c) - 1
            if n < 2:
                continue
            for j in range(1, n + 1):
                for i in range(j):
                    if face(face(c, j), i) != face(face(c, i), j - 1):
                        return False
        return True


def topological_ranks(order: Sequence[Vertex], before: Iterable[tuple[Vertex, Vertex]]) -> list[Vertex]:
    """Topologically sort ``order`` under the pairs ``(u, v)`` meaning u < v.

    Ties go to the vertex appearing first in ``order``.
    """
    position = {v: i for i, v in enumerate(order)}
    succ: dict[Vertex, set[Vertex]] = defaultdict(set)
    indeg = {v: 0 for v in order}
    for u, v in before:
        if v not in succ[u]:
            succ[u].add(v)
            indeg[v] += 1
    heap = [position[v] for v in order if indeg[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        u = order[heapq.heappop(heap)]
        out.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, position[v])
    if len(out) != len(order):
        raise CyclicOrder(_find_cycle([v for v in order if indeg[v] > 0], succ))
    return out


def _find_cycle(stuck: list, succ) -> list:
    # every stuck vertex keeps a stuck predecessor, so walking backwards must loop
    remaining = set(stuck)
    pred = {v: [u for u in stuck if v in succ[u]] for v in stuck}
    v = stuck[0]
    seen: dict = {}
    path = []
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = next(u for u in pred[v] if u in remaining)
    cycle = path[seen[v]:] + [v]
    return cycle[::-1]


def build_complex(maximal: Iterable[Sequence[Vertex]], vertices: Sequence[Vertex] | None = None) -> OrderedSSet:
    """Downward closure of the given simplices, each listed in ascending order.

    Vertex ranks come from a topological sort of the precedence pairs implied
    by the tuples, ties broken by first appearance (``vertices`` first).
    """
    maximal = [tuple(s) for s in maximal]
    order: dict[Vertex, None] = dict.fromkeys(vertices or ())
    pairs = []
    for s in maximal:
        if not s:
            raise ValueError("empty simplex")
        if len(set(s)) != len(s):
            raise DuplicateVertexInSimplex(s)
        order.update(dict.fromkeys(s))
        pairs.extend(zip(s, s[1:]))
    ranked = topological_ranks(list(order), pairs)
    closure = set()
    for s in maximal:
        for k in range(2, len(s) + 1):
            closure.update(combinations(s, k))
    return OrderedSSet(ranked, closure)

"""Hom-sets of the path category of a finite ordered simplicial set.

Paths are sequences of nondegenerate edges, so identities are the empty
paths.  Two paths are related when one is obtained from the other by
replacing the long edge (u, w) of a triangle (u, v, w) with the two short
edges (u, v), (v, w).  Because the 1-skeleton is acyclic the set of paths
between two vertices is finite, and the classes are found by union-find
over that set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sset import OrderedSSet, Vertex
from .unionfind import UnionFind

# A path is stored as its vertex sequence; the edges are consecutive pairs.
Path = tuple


def path_edges(path: Path) -> list[tuple]:
    return list(zip(path, path[1:]))


def edge_paths(X: OrderedSSet, a: Vertex, b: Vertex) -> list[Path]:
    """Every directed edge path from a to b, depth first in rank order."""
    X.rank(a)
    X.rank(b)
    if a == b:
        return [(a,)]
    preds = X.predecessors()
    good = {b}
    stack = [b]
    while stack:
        w = stack.pop()
        for u in preds[w]:
            if u not in good:
                good.add(u)
                stack.append(u)
    out: list[Path] = []

    def walk(path: list) -> None:
        v = path[-1]
        if v == b:
            out.append(tuple(path))
            return
        for w in X.successors(v):
            if w in good:
                path.append(w)
                walk(path)
                path.pop()

    if a in good:
        walk([a])
    return out


@dataclass(frozen=True)
class HomClasses:
    classes: tuple[tuple[Path, ...], ...]

    @property
    def representatives(self) -> tuple[Path, ...]:
        return tuple(c[0] for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def rewrites(X: OrderedSSet, path: Path):
    """Paths one triangle move away: each long edge split through an apex, each short pair merged."""
    for t in range(len(path) - 1):
        u, w = path[t], path[t + 1]
        for v in X.apexes(u, w):
            yield path[: t + 1] + (v,) + path[t + 1:]
    for t in range(len(path) - 2):
        u, v, w = path[t : t + 3]
        if X.contains((u, v, w)):
            yield path[: t + 1] + path[t + 2:]


def hom_classes(X: OrderedSSet, a: Vertex, b: Vertex) -> HomClasses:
    paths = edge_paths(X, a, b)
    uf = UnionFind(paths)
    for p in paths:
        for q in rewrites(X, p):
            uf.union(p, q)

    def key(p: Path):
        return (len(p), X.chain_key(p))

    classes = [tuple(sorted(g, key=key)) for g in uf.groups()]
    classes.sort(key=lambda c: key(c[0]))
    return HomClasses(tuple(classes))

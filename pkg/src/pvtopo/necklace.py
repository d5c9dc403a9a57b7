"""Necklaces in an ordered simplicial set and the mapping spaces they build.

A necklace from a to b is a sequence of simplices (beads) of X, each running
from its minimum vertex to its maximum vertex, with the last vertex of one
bead equal to the first vertex of the next.  An n-simplex of the mapping
space from a to b is a necklace together with a strictly increasing chain of
vertex sets running from its joints to all of its vertices.  Since the
ambient complex is ordered, a necklace is determined by its joint set and
vertex set, so a simplex is determined by its flag alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import IndexOutOfRange, PreconditionViolated
from .sset import Chain, OrderedSSet, Vertex


@dataclass(frozen=True)
class Necklace:
    beads: tuple[Chain, ...]
    start: Vertex

    @property
    def end(self) -> Vertex:
        return self.beads[-1][-1] if self.beads else self.start

    @property
    def joints(self) -> frozenset:
        return frozenset([self.start, *(b[-1] for b in self.beads)])

    @property
    def vertex_set(self) -> frozenset:
        return frozenset([self.start, *(v for b in self.beads for v in b)])

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(b) - 1 for b in self.beads)

    def __len__(self) -> int:
        return len(self.beads)


@dataclass(frozen=True)
class MapSimplex:
    necklace: Necklace
    flag: tuple[frozenset, ...]

    @property
    def dim(self) -> int:
        return len(self.flag) - 1


def _reaches(X: OrderedSSet, b: Vertex) -> set:
    preds = X.predecessors()
    seen = {b}
    stack = [b]
    while stack:
        w = stack.pop()
        for u in preds[w]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def iter_necklaces(X: OrderedSSet, a: Vertex, b: Vertex) -> Iterator[Necklace]:
    X.rank(a)
    X.rank(b)
    if a == b:
        yield Necklace((), a)
        return
    good = _reaches(X, b)
    if a not in good:
        return
    beads: list[Chain] = []
    used = {a}

    def walk(v: Vertex) -> Iterator[Necklace]:
        for s in X.simplices_from(v):
            w = s[-1]
            if w not in good or used.intersection(s[1:]):
                continue
            beads.append(s)
            used.update(s[1:])
            if w == b:
                yield Necklace(tuple(beads), a)
            else:
                yield from walk(w)
            used.difference_update(s[1:])
            beads.pop()

    yield from walk(a)


def enumerate_necklaces(X: OrderedSSet, a: Vertex, b: Vertex) -> list[Necklace]:
    """All necklaces from a to b in depth-first canonical order."""
    return list(iter_necklaces(X, a, b))


def subnecklace(N: Necklace, joints, vertices) -> Necklace:
    """Restrict ``N`` to ``vertices`` and split its beads at ``joints``."""
    joints = frozenset(joints)
    vertices = frozenset(vertices)
    if not (N.joints <= joints <= vertices <= N.vertex_set):
        raise PreconditionViolated("need joints(N) <= joints <= vertices <= vertices(N)")
    beads = []
    for bead in N.beads:
        kept = [v for v in bead if v in vertices]
        piece = [kept[0]]
        for v in kept[1:]:
            piece.append(v)
            if v in joints:
                beads.append(tuple(piece))
                piece = [v]
    return Necklace(tuple(beads), N.start)


def face_map(X: OrderedSSet | None, s: MapSimplex, i: int) -> MapSimplex:
    n = s.dim
    if n < 1 or not 0 <= i <= n:
        raise IndexOutOfRange(f"face index {i} out of range for a {n}-simplex")
    flag = s.flag
    if i == 0:
        return MapSimplex(subnecklace(s.necklace, flag[1], flag[-1]), flag[1:])
    if i == n:
        return MapSimplex(subnecklace(s.necklace, flag[0], flag[-2]), flag[:-1])
    return MapSimplex(s.necklace, flag[:i] + flag[i + 1:])


def flanked_flags(N: Necklace, max_dim: int | None = None) -> Iterator[tuple[frozenset, ...]]:
    """Strict flags from joints(N) to vertices(N); one per ordered set partition of the interior."""
    J = N.joints
    interior = sorted(N.vertex_set - J, key=lambda v: _position(N, v))
    for blocks in _ordered_partitions(interior, max_dim):
        flag = [J]
        for block in blocks:
            flag.append(flag[-1] | block)
        yield tuple(flag)


def _ordered_partitions(items: list, max_blocks: int | None) -> Iterator[list[frozenset]]:
    if not items:
        yield []
        return
    if max_blocks is not None and max_blocks < 1:
        return
    rest_cap = None if max_blocks is None else max_blocks - 1
    k = len(items)
    for mask in range(1, 1 << k):
        first = frozenset(items[i] for i in range(k) if mask >> i & 1)
        rest = [items[i] for i in range(k) if not mask >> i & 1]
        for tail in _ordered_partitions(rest, rest_cap):
            yield [first, *tail]


def _position(N: Necklace, v: Vertex) -> int:
    pos = 0
    for bead in N.beads:
        for u in bead:
            if u == v:
                return pos
            pos += 1
    return pos


@dataclass
class SSetPresentation:
    """A finite simplicial set given by its nondegenerate simplices.

    ``faces[d][k]`` lists, for the k-th simplex of dimension d, the index of
    each of its d+1 faces in dimension d-1.
    """

    simplices: list[list[MapSimplex]]
    faces: list[list[tuple[int, ...]]]

    def fvector(self) -> list[int]:
        return [len(layer) for layer in self.simplices]

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def check_simplicial_identities(self) -> bool:
        for d in range(2, len(self.simplices)):
            for k in range(len(self.simplices[d])):
                f = self.faces[d][k]
                for j in range(1, d + 1):
                    for i in range(j):
                        if self.faces[d - 1][f[j]][i] != self.faces[d - 1][f[i]][j - 1]:
                            return False
        return True


def mapping_space(X: OrderedSSet, a: Vertex, b: Vertex, max_dim: int | None = None) -> SSetPresentation:
    """Nondegenerate simplices of the mapping space from a to b with face incidence.

    Simplices are ordered within each dimension by the rank tuples of their
    flag entries.  Faces are looked up by flag, which is sound because the
    flag of a face (see :func:`face_map`) is always a sub-flag and the flag
    determines the necklace.
    """
    rank = X.rank
    layers: list[list[tuple]] = []
    for N in iter_necklaces(X, a, b):
        for flag in flanked_flags(N, max_dim):
            d = len(flag) - 1
            while len(layers) <= d:
                layers.append([])
            key = tuple(tuple(sorted(map(rank, T))) for T in flag)
            layers[d].append((key, MapSimplex(N, flag)))
    simplices = []
    for layer in layers:
        layer.sort(key=lambda item: item[0])
        simplices.append([s for _, s in layer])
    index = [{s.flag: k for k, s in enumerate(layer)} for layer in simplices]
    faces: list[list[tuple[int, ...]]] = [[() for _ in simplices[0]]] if simplices else []
    for d in range(1, len(simplices)):
        below = index[d - 1]
        faces.append([
            tuple(below[s.flag[:i] + s.flag[i + 1:]] for i in range(d + 1)) for s in simplices[d]
        ])
    return SSetPresentation(simplices, faces)


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def format_simplex(X: OrderedSSet, s: MapSimplex, name=str) -> str:
    """Render like ``(Δ¹∨Δ², {0,1,7} ⊂ {0,1,4,7})``."""
    shape = "∨".join("Δ" + str(k).translate(_SUPERSCRIPTS) for k in s.necklace.shape) or "Δ⁰"
    sets = " ⊂ ".join("{" + ",".join(name(v) for v in sorted(T, key=X.rank)) + "}" for T in s.flag)
    return f"({shape}, {sets})"


def flag_count(interior: int) -> int:
    """Number of strict flags through a boolean interval with ``interior`` free elements (Fubini number)."""
    from math import comb

    fub = [1]
    for k in range(1, interior + 1):
        fub.append(sum(comb(k, j) * fub[k - j] for j in range(1, k + 1)))
    return fub[interior]


def check_necklace(X: OrderedSSet, N: Necklace, a: Vertex, b: Vertex) -> bool:
    """Validate necklace invariants against X."""
    if N.start != a or N.end != b:
        return False
    prev = a
    seen = [a]
    for bead in N.beads:
        if len(bead) < 2 or bead[0] != prev or not X.contains(bead):
            return False
        seen.extend(bead[1:])
        prev = bead[-1]
    return len(seen) == len(set(seen))

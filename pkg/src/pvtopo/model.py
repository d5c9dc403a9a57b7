"""Filtered necklace models of processes and the valid part of their product.

A process with N operations is a necklace of N edges whose vertex t carries
the vector of how far each semaphore has been decremented after t steps.  A
simplex of the product of such necklaces is a chain of grid points that is
strictly increasing in the product order and spans at most one bead in every
coordinate.  Its degree is, per semaphore, the sum over processes of the
largest degree the process passes through; the program model keeps the
simplices whose degree is within the semaphore capacities.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import product
from typing import Sequence

from .pv import Op, ProgramSpec
from .sset import OrderedSSet

GridVertex = tuple  # tuple[int, ...], one local state index per process
DegreeVector = tuple  # tuple[int, ...], one entry per semaphore


@dataclass(frozen=True)
class FilteredNecklace:
    degrees: tuple[DegreeVector, ...]  # N+1 rows

    @property
    def length(self) -> int:
        return len(self.degrees) - 1

    @property
    def m(self) -> int:
        return len(self.degrees[0])

    def edge_degree(self, t: int) -> DegreeVector:
        """Degree of edge t (1-based), from vertex t-1 to vertex t."""
        return tuple(map(max, self.degrees[t - 1], self.degrees[t]))

    def edge_degrees(self) -> list[DegreeVector]:
        return [self.edge_degree(t) for t in range(1, self.length + 1)]


def process_model(ops: Sequence[Op], m: int) -> FilteredNecklace:
    row = [0] * m
    rows = [tuple(row)]
    for op in ops:
        row[op.sem] += 1 if op.kind == "P" else -1
        rows.append(tuple(row))
    return FilteredNecklace(tuple(rows))


def vertex_degree(models: Sequence[FilteredNecklace], x: GridVertex) -> DegreeVector:
    m = models[0].m if models else 0
    total = [0] * m
    for model, xi in zip(models, x):
        for j, d in enumerate(model.degrees[xi]):
            total[j] += d
    return tuple(total)


def simplex_degree(models: Sequence[FilteredNecklace], chain: Sequence[GridVertex]) -> DegreeVector:
    m = models[0].m if models else 0
    total = [0] * m
    for i, model in enumerate(models):
        trace = {x[i] for x in chain}
        for j in range(m):
            total[j] += max(model.degrees[t][j] for t in trace)
    return tuple(total)


def within(degree: DegreeVector, capacities: Sequence[int] | None) -> bool:
    if capacities is None:
        return True
    return all(d <= k for d, k in zip(degree, capacities))


def is_valid(models: Sequence[FilteredNecklace], chain: Sequence[GridVertex], capacities) -> bool:
    return within(simplex_degree(models, chain), capacities)


def is_product_simplex(chain: Sequence[GridVertex]) -> bool:
    """Check the normal form: strictly increasing, per-coordinate span <= 1."""
    for x, y in zip(chain, chain[1:]):
        if x == y or any(a > b for a, b in zip(x, y)):
            return False
    return all(y - x <= 1 for x, y in zip(chain[0], chain[-1]))


@dataclass(frozen=True)
class ModelInfo:
    models: tuple[FilteredNecklace, ...]
    capacities: tuple[int, ...] | None
    initial: GridVertex
    final: GridVertex
    process_names: tuple[str, ...] = ()
    semaphore_names: tuple[str, ...] = ()
    degrees: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def final_is_valid(self) -> bool:
        return self.final in self.degrees


def build_product_model(
    models: Sequence[FilteredNecklace], capacities: Sequence[int] | None
) -> tuple[OrderedSSet, ModelInfo]:
    """Valid part of the product of filtered necklaces.

    ``capacities=None`` keeps every simplex (the unfiltered product).
    Chains are grown depth first; a chain whose degree exceeds the
    capacities is pruned together with all its extensions, which is sound
    because extending a chain can only raise its degree.
    """
    models = tuple(models)
    caps = None if capacities is None else tuple(capacities)
    n = len(models)
    m = models[0].m if models else 0
    bounds = [model.length for model in models]
    grid = sorted(product(*(range(b + 1) for b in bounds)))
    degrees = {}
    for x in grid:
        d = vertex_degree(models, x)
        if within(d, caps):
            degrees[x] = d
    valid = list(degrees)
    simplices: list[tuple] = []

    # per-coordinate running max degree: maxes[i][j]
    def extend(chain: list, maxes: list[list[int]]) -> None:
        last = chain[-1]
        base = chain[0]
        for y in _upper_cell(last, base, bounds):
            if y not in degrees:
                continue
            new = [row[:] for row in maxes]
            for i in range(n):
                if y[i] != last[i]:
                    drow = models[i].degrees[y[i]]
                    for j in range(m):
                        if drow[j] > new[i][j]:
                            new[i][j] = drow[j]
            if caps is not None and any(sum(new[i][j] for i in range(n)) > caps[j] for j in range(m)):
                continue
            chain.append(y)
            simplices.append(tuple(chain))
            extend(chain, new)
            chain.pop()

    for x in valid:
        extend([x], [list(models[i].degrees[x[i]]) for i in range(n)])

    X = OrderedSSet(valid, simplices)
    info = ModelInfo(
        models=models,
        capacities=caps,
        initial=tuple([0] * n),
        final=tuple(bounds),
        degrees=degrees,
    )
    return X, info


def _upper_cell(last: GridVertex, base: GridVertex, bounds: Sequence[int]):
    """Grid points strictly above ``last`` within the unit cell at ``base``, lexicographic."""
    choices = []
    for i, (l, b) in enumerate(zip(last, base)):
        if l == b and b < bounds[i]:
            choices.append((l, l + 1))
        else:
            choices.append((l,))
    for y in product(*choices):
        if y != last:
            yield y


def build_program_model(spec: ProgramSpec) -> tuple[OrderedSSet, ModelInfo]:
    m = len(spec.semaphores)
    models = [process_model(p.ops, m) for p in spec.processes]
    X, info = build_product_model(models, spec.capacities)
    return X, replace(
        info,
        process_names=tuple(p.name for p in spec.processes),
        semaphore_names=tuple(s.name for s in spec.semaphores),
    )

"""Seeded generator of small random PV programs for property suites."""

from __future__ import annotations

import random

from pvtopo.pv import Op, Process, ProgramSpec, Semaphore

MAX_PROCESSES = 3
MAX_TOTAL_OPS = 6
MAX_SEMAPHORES = 2


def random_program(rng: random.Random) -> ProgramSpec:
    m = rng.randint(1, MAX_SEMAPHORES)
    n = rng.randint(1, MAX_PROCESSES)
    sems = tuple(Semaphore("ab"[j], rng.randint(1, 2)) for j in range(m))
    budget = rng.randint(n, MAX_TOTAL_OPS)
    lengths = [1] * n
    for _ in range(budget - n):
        lengths[rng.randrange(n)] += 1
    procs = []
    for i, length in enumerate(lengths):
        ops = []
        held = [0] * m
        for _ in range(length):
            j = rng.randrange(m)
            # mostly well-formed: release only what is held, with an occasional stray V
            kind = "V" if held[j] > 0 and rng.random() < 0.6 else "P"
            if rng.random() < 0.08:
                kind = "V"
            held[j] += 1 if kind == "P" else -1
            ops.append(Op(kind, j))
        procs.append(Process("ABC"[i], tuple(ops)))
    return ProgramSpec(sems, tuple(procs))


def random_programs(count: int = 100, seed: int = 20101) -> list[ProgramSpec]:
    rng = random.Random(seed)
    return [random_program(rng) for _ in range(count)]

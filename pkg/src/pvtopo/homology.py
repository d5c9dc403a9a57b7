"""Integer homology of finite simplicial sets given by nondegenerate simplices.

Works on the normalized chain complex: degenerate simplices never appear,
and a face that happens to be degenerate does not occur for the ordered
complexes handled here.  All arithmetic is on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence, Union

from .necklace import SSetPresentation
from .sset import OrderedSSet, face
from .unionfind import UnionFind


@dataclass
class IntMatrix:
    """Sparse integer matrix; ``entries`` maps (row, col) to a nonzero int."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        entries = {(i, j): int(v) for i, r in enumerate(rows) for j, v in enumerate(r) if v}
        return cls(len(rows), ncols, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, dict[int, int]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, {})[j] = v
        acc: dict[tuple[int, int], int] = {}
        for (i, k), u in self.entries.items():
            for j, v in by_row.get(k, {}).items():
                acc[(i, j)] = acc.get((i, j), 0) + u * v
        return IntMatrix(self.rows, other.cols, {key: v for key, v in acc.items() if v})

    def is_zero(self) -> bool:
        return not self.entries


Complex = Union[SSetPresentation, OrderedSSet]


def _face_table(p: Complex) -> tuple[list[int], list[list[tuple[int, ...]]]]:
    """Simplex counts per dimension and face indices as in SSetPresentation.faces."""
    if isinstance(p, SSetPresentation):
        return p.fvector(), p.faces
    layers = [p.simplices(d) for d in range(p.dimension + 1)]
    index = [{c: k for k, c in enumerate(layer)} for layer in layers]
    faces: list[list[tuple[int, ...]]] = [[() for _ in layers[0]]] if layers else []
    for d in range(1, len(layers)):
        faces.append([tuple(index[d - 1][face(c, i)] for i in range(d + 1)) for c in layers[d]])
    return [len(layer) for layer in layers], faces


def boundary_matrices(p: Complex) -> list[IntMatrix]:
    """``[∂_1, ∂_2, ...]`` with ∂_d of shape (#(d-1)-simplices, #d-simplices).

    ∂_d σ = Σ_i (-1)^i d_i σ, accumulating coincident faces.
    """
    counts, faces = _face_table(p)
    out = []
    for d in range(1, len(counts)):
        entries: dict[tuple[int, int], int] = {}
        for k, fs in enumerate(faces[d]):
            for i, f in enumerate(fs):
                key = (f, k)
                entries[key] = entries.get(key, 0) + (-1) ** i
        out.append(IntMatrix(counts[d - 1], counts[d], {key: v for key, v in entries.items() if v}))
    return out


def _snf_dense(a: list[list[int]]) -> list[int]:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, cols):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for r in a[t:]:
                            r[j] -= q * r[t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a smaller remainder appeared in row or column t; bring it to the pivot
                best = None
                for i in range(t, rows):
                    if a[i][t] and (best is None or abs(a[i][t]) < abs(best[2])):
                        best = (i, t, a[i][t])
                for j in range(t, cols):
                    if a[t][j] and (best is None or abs(a[t][j]) < abs(best[2])):
                        best = (t, j, a[t][j])
                i, j, _ = best
                a[t], a[i] = a[i], a[t]
                for r in a:
                    r[t], r[j] = r[j], r[t]
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            rb, rt = a[bad], a[t]
            for j in range(t, cols):
                rt[j] += rb[j]
        diag.append(abs(a[t][t]))
        t += 1
    # enforce the divisibility chain (already holds, kept as a cheap normaliser)
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            diag[i], diag[j] = g, diag[i] * diag[j] // g
    return diag


def smith_normal_form(m: IntMatrix | Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Invariant factors d_1 | d_2 | ... (all positive) and the rank.

    Unit pivots are eliminated sparsely first; whatever is left is reduced
    densely.
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix.from_dense(m)
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in m.entries.items():
        rows.setdefault(i, {})[j] = v
        cols.setdefault(j, set()).add(i)
    units = 0
    progress = True
    while progress:
        progress = False
        for r in sorted(rows):
            row = rows.get(r)
            if not row:
                continue
            c = next((c for c, v in row.items() if v == 1 or v == -1), None)
            if c is None:
                continue
            pv = row[c]
            for r2 in sorted(cols[c] - {r}):
                row2 = rows[r2]
                factor = row2[c] * pv
                for cc, v in row.items():
                    nv = row2.get(cc, 0) - factor * v
                    if nv:
                        if cc not in row2:
                            cols[cc].add(r2)
                        row2[cc] = nv
                    elif cc in row2:
                        del row2[cc]
                        cols[cc].discard(r2)
                if not row2:
                    del rows[r2]
            for cc in row:
                cols[cc].discard(r)
            del cols[c]
            del rows[r]
            units += 1
            progress = True
    rest_rows = sorted(rows)
    rest_cols = sorted({c for row in rows.values() for c in row})
    col_pos = {c: k for k, c in enumerate(rest_cols)}
    dense = [[0] * len(rest_cols) for _ in rest_rows]
    for k, r in enumerate(rest_rows):
        for c, v in rows[r].items():
            dense[k][col_pos[c]] = v
    tail = _snf_dense(dense) if dense and rest_cols else []
    invariants = [1] * units + tail
    return invariants, len(invariants)


@dataclass(frozen=True)
class HomologyGroup:
    dim: int
    betti: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) or "0"


@dataclass(frozen=True)
class HomologyResult:
    groups: tuple[HomologyGroup, ...]

    def betti(self, d: int) -> int:
        return self.groups[d].betti if d < len(self.groups) else 0

    def torsion(self, d: int) -> tuple[int, ...]:
        return self.groups[d].torsion if d < len(self.groups) else ()

    @property
    def betti_numbers(self) -> list[int]:
        return [g.betti for g in self.groups]

    def __str__(self) -> str:
        return ", ".join(f"H{g.dim} = {g}" for g in self.groups)


def homology(p: Complex) -> HomologyResult:
    counts, _ = _face_table(p)
    snf = [smith_normal_form(b) for b in boundary_matrices(p)]
    ranks = [0] + [r for _, r in snf] + [0]
    groups = []
    for d, n in enumerate(counts):
        torsion = tuple(x for x in snf[d][0] if x > 1) if d < len(snf) else ()
        groups.append(HomologyGroup(d, n - ranks[d] - ranks[d + 1], torsion))
    return HomologyResult(tuple(groups))


def components(p: Complex) -> tuple[int, list[int]]:
    """Connected components of the 1-skeleton: (count, label per vertex)."""
    counts, faces = _face_table(p)
    n0 = counts[0] if counts else 0
    uf = UnionFind(range(n0))
    if len(faces) > 1:
        for f0, f1 in faces[1]:
            uf.union(f0, f1)
    label: dict[int, int] = {}
    labels = []
    for v in range(n0):
        labels.append(label.setdefault(uf.find(v), len(label)))
    return len(label), labels

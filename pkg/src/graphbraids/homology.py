"""Exact integer homology via Smith normal form.

This is the brute-force oracle the rest of the package is checked against.
All arithmetic uses Python integers: intermediate entries can outgrow any
fixed width even when the input is all 0/±1. Elimination starts on a sparse
coordinate representation and falls back to a dense one once fill passes 25%,
since row/column operations destroy sparsity quickly. Pivots are chosen by
smallest absolute value (rows scanned before columns, ties to the lowest
index), which keeps entry growth tame and the output deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .errors import GraphBraidError

if TYPE_CHECKING:  # pragma: no cover
    from .complexes import CubicalComplex

_DENSE_FILL = 0.25


@dataclass(frozen=True)
class IntegerMatrix:
    """Sparse integer matrix: {(row, col): value} with no stored zeros."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise GraphBraidError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            if v == 0:
                raise GraphBraidError(f"stored zero at ({i}, {j})")

    @staticmethod
    def from_dense(data: list[list[int]]) -> IntegerMatrix:
        rows = len(data)
        cols = len(data[0]) if data else 0
        entries = {
            (i, j): v for i, row in enumerate(data) for j, v in enumerate(row) if v
        }
        return IntegerMatrix(rows, cols, entries)

    def to_dense(self) -> list[list[int]]:
        data = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            data[i][j] = v
        return data

    def fill(self) -> float:
        if self.rows * self.cols == 0:
            return 0.0
        return len(self.entries) / (self.rows * self.cols)

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, v) for (i, j), v in self.entries.items())


def _pivot_sparse(rows: dict[int, dict[int, int]]) -> tuple[int, int] | None:
    """Smallest |value| pivot; ties go to the lowest row, then column, index."""
    best = None
    for i in sorted(rows):
        for j in sorted(rows[i]):
            v = abs(rows[i][j])
            if best is None or v < best[0]:
                best = (v, i, j)
        if best is not None and best[0] == 1:
            break
    if best is None:
        return None
    return best[1], best[2]


def _smith_sparse(m: IntegerMatrix) -> list[int]:
    """Elimination on dict-of-rows storage; densifies when fill passes 25%."""
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in m.entries.items():
        rows.setdefault(i, {})[j] = v
        cols.setdefault(j, set()).add(i)

    def set_entry(i: int, j: int, v: int) -> None:
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)
        else:
            if i in rows and j in rows[i]:
                del rows[i][j]
                if not rows[i]:
                    del rows[i]
                cols[j].discard(i)
                if not cols[j]:
                    del cols[j]

    def add_multiple_row(dst: int, src: int, factor: int) -> None:
        for j, v in list(rows.get(src, {}).items()):
            set_entry(dst, j, rows.get(dst, {}).get(j, 0) + factor * v)

    def add_multiple_col(dst: int, src: int, factor: int) -> None:
        for i in list(cols.get(src, set())):
            v = rows[i][src]
            set_entry(i, dst, rows.get(i, {}).get(dst, 0) + factor * v)

    diag: list[int] = []
    active_rows, active_cols = m.rows, m.cols
    while rows:
        nnz = sum(len(r) for r in rows.values())
        if active_rows * active_cols and nnz > _DENSE_FILL * active_rows * active_cols:
            remap_r = {i: a for a, i in enumerate(sorted(rows))}
            live_cols = sorted(cols)
            remap_c = {j: a for a, j in enumerate(live_cols)}
            dense = [[0] * len(live_cols) for _ in range(len(remap_r))]
            for i, row in rows.items():
                for j, v in row.items():
                    dense[remap_r[i]][remap_c[j]] = v
            diag.extend(_smith_dense(dense))
            return diag

        pivot = _pivot_sparse(rows)
        if pivot is None:
            break
        pi, pj = pivot
        p = rows[pi][pj]
        col_rest = [i for i in cols[pj] if i != pi]
        row_rest = [j for j in rows[pi] if j != pj]
        if col_rest:
            for i in col_rest:
                add_multiple_row(i, pi, -(rows[i][pj] // p))
            continue
        if row_rest:
            for j in row_rest:
                add_multiple_col(j, pj, -(rows[pi][j] // p))
            continue
        # pivot row and column are clear; enforce divisibility
        offender = None
        for i in rows:
            if i == pi:
                continue
            for j, v in rows[i].items():
                if v % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_multiple_row(pi, offender, 1)
            continue
        diag.append(abs(p))
        set_entry(pi, pj, 0)
        active_rows -= 1
        active_cols -= 1
    return diag


def _smith_dense(a: list[list[int]]) -> list[int]:
    """Textbook Smith elimination on a dense matrix; returns |diagonal| entries."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        # smallest |value| pivot in the active submatrix, lowest indices first
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < best[0]):
                    best = (abs(a[i][j]), i, j)
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        p = a[t][t]
        dirty = False
        for i in range(t + 1, nrows):
            if a[i][t]:
                q = a[i][t] // p
                for j in range(t, ncols):
                    a[i][j] -= q * a[t][j]
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, ncols):
            if a[t][j]:
                q = a[t][j] // p
                for i in range(t, nrows):
                    a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        offender = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if a[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(t, ncols):
                a[t][j] += a[offender][j]
            continue
        diag.append(abs(p))
        t += 1
    return diag


def smith_normal_form(m: IntegerMatrix) -> tuple[list[int], int]:
    """Invariant factors d_1 | d_2 | ... | d_r and the rank r of m over Z."""
    if m.rows == 0 or m.cols == 0 or not m.entries:
        return [], 0
    if m.fill() > _DENSE_FILL:
        diag = _smith_dense(m.to_dense())
    else:
        diag = _smith_sparse(m)
    for a, b in zip(diag, diag[1:]):
        assert b % a == 0, "invariant factor chain broken"
    return diag, len(diag)


@dataclass(frozen=True)
class HomologySummary:
    dimension: int
    betti: int
    torsion: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"d": self.dimension, "betti": self.betti, "torsion": list(self.torsion)}


def homology(c: "CubicalComplex", d: int) -> HomologySummary:
    """H_d of the complex with integer coefficients, as Betti rank plus torsion."""
    if d < 0:
        raise GraphBraidError("homology dimension must be nonnegative")
    n_d = len(c.cells(d))
    rank_d = smith_normal_form(c.boundary(d))[1] if d >= 1 else 0
    factors_up, rank_up = smith_normal_form(c.boundary(d + 1))
    betti = n_d - rank_d - rank_up
    torsion = tuple(f for f in factors_up if f > 1)
    return HomologySummary(d, betti, torsion)


def first_betti(g, n: int, auto_subdivide: bool = False) -> int:
    """b_1 of the n-strand discretized space, subdividing first if allowed."""
    from .complexes import build_complex
    from .errors import InsufficientSubdivisionError
    from .graphs import is_sufficiently_subdivided, sufficiently_subdivide

    work = g
    if n >= 2:
        ok, violations = is_sufficiently_subdivided(work, n)
        if not ok:
            if not auto_subdivide:
                raise InsufficientSubdivisionError(
                    f"graph is not sufficiently subdivided for {n} strands",
                    violations,
                )
            work = sufficiently_subdivide(work, n)
    return homology(build_complex(work, n), 1).betti

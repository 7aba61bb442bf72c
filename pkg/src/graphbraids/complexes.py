"""Discretized configuration spaces of graphs as finite cubical complexes.

A cell of the n-strand discretized space is a set of n pairwise-disjoint
closed pieces of the graph: some vertices and some closed edges, no vertex
lying on a chosen edge and no two chosen edges sharing an endpoint. The
dimension of a cell is the number of edges in it. Boundary matrices carry the
usual product-of-intervals signs, with each edge oriented by a vertex order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import EmptyComplexError, GraphBraidError
from .graphs import Graph
from .homology import IntegerMatrix


@dataclass(frozen=True, order=True)
class Cell:
    """A configuration: sorted vertex indices plus sorted edge indices."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CubicalComplex:
    n: int
    graph: Graph
    cells_by_dim: tuple[tuple[Cell, ...], ...]
    boundaries: tuple[IntegerMatrix, ...]  # boundaries[d-1] maps d-chains to (d-1)-chains

    @property
    def dimension(self) -> int:
        return len(self.cells_by_dim) - 1

    def cell_counts(self) -> list[int]:
        """Cells per dimension, padded with zeros up to dimension n."""
        counts = [len(cells) for cells in self.cells_by_dim]
        counts.extend([0] * (self.n + 1 - len(counts)))
        return counts

    def cells(self, d: int) -> tuple[Cell, ...]:
        if 0 <= d < len(self.cells_by_dim):
            return self.cells_by_dim[d]
        return ()

    def boundary(self, d: int) -> IntegerMatrix:
        """The boundary matrix from d-cells to (d-1)-cells (zero map off-range)."""
        if 1 <= d <= self.dimension:
            return self.boundaries[d - 1]
        return IntegerMatrix(len(self.cells(d - 1)), len(self.cells(d)), {})

    def index_of(self, d: int) -> dict[Cell, int]:
        return {cell: i for i, cell in enumerate(self.cells(d))}


def _disjoint_edge_sets(g: Graph, k: int):
    """All k-sets of pairwise vertex-disjoint edges, as sorted index tuples."""
    edges = g.edges

    def extend(start: int, used: set[int], chosen: list[int]):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if u in used or v in used:
                continue
            chosen.append(idx)
            yield from extend(idx + 1, used | {u, v}, chosen)
            chosen.pop()

    yield from extend(0, set(), [])


def cell_faces(graph: Graph, cell: Cell, order: tuple[int, ...] | None = None):
    """Signed codimension-1 faces of a cell.

    Yields (face, sign) pairs: for the i-th edge (ascending by index) the face
    with that edge replaced by its larger-order endpoint gets sign (-1)^(i-1),
    the smaller-order endpoint the opposite sign.
    """
    rank = order if order is not None else tuple(range(graph.vertex_count))
    for i, edge_idx in enumerate(cell.edges):
        u, v = graph.edges[edge_idx]
        hi, lo = (u, v) if rank[u] > rank[v] else (v, u)
        sign = -1 if i % 2 else 1
        rest = cell.edges[:i] + cell.edges[i + 1 :]
        yield Cell(tuple(sorted(cell.vertices + (hi,))), rest), sign
        yield Cell(tuple(sorted(cell.vertices + (lo,))), rest), -sign


def build_complex(
    g: Graph, n: int, order: tuple[int, ...] | None = None
) -> CubicalComplex:
    """Enumerate the n-strand discretized space of g and its boundary maps.

    Cells are found by backtracking over disjoint closed edges, then filling
    the remaining strands with disjoint vertices; they are stored in
    lexicographic (vertices, edges) order so indices are stable. `order`
    optionally orients edges by a vertex numbering instead of raw indices.
    """
    if n < 1:
        raise GraphBraidError(f"strand count must be at least 1, got {n}")
    if n > g.vertex_count:
        raise EmptyComplexError(
            f"{n} strands do not fit on {g.vertex_count} vertices"
        )
    cells_by_dim: list[list[Cell]] = []
    for d in range(0, min(n, g.edge_count) + 1):
        layer = []
        for edge_set in _disjoint_edge_sets(g, d):
            blocked = {x for idx in edge_set for x in g.edges[idx]}
            free = [v for v in range(g.vertex_count) if v not in blocked]
            for vs in itertools.combinations(free, n - d):
                layer.append(Cell(tuple(vs), edge_set))
        if not layer:
            break
        layer.sort()
        cells_by_dim.append(layer)

    boundaries = []
    for d in range(1, len(cells_by_dim)):
        index = {cell: i for i, cell in enumerate(cells_by_dim[d - 1])}
        entries: dict[tuple[int, int], int] = {}
        for col, cell in enumerate(cells_by_dim[d]):
            for face, sign in cell_faces(g, cell, order):
                entries[(index[face], col)] = sign
        boundaries.append(
            IntegerMatrix(len(cells_by_dim[d - 1]), len(cells_by_dim[d]), entries)
        )
    return CubicalComplex(
        n, g, tuple(tuple(layer) for layer in cells_by_dim), tuple(boundaries)
    )


def euler_characteristic(c: CubicalComplex) -> int:
    return sum((-1) ** d * len(cells) for d, cells in enumerate(c.cells_by_dim))


def connected_components(c: CubicalComplex) -> int:
    """Number of components of the 1-skeleton (the b_0 of the complex)."""
    zero_cells = c.cells(0)
    index = {cell: i for i, cell in enumerate(zero_cells)}
    parent = list(range(len(zero_cells)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cell in c.cells(1):
        ends = [index[face] for face, _ in cell_faces(c.graph, cell)]
        a, b = find(ends[0]), find(ends[1])
        if a != b:
            parent[a] = b
    return len({find(i) for i in range(len(zero_cells))})

"""Discrete Morse matching on discretized configuration spaces.

The matching follows the Farley-Sabalka recipe: order the vertices by the
walk around a rooted spanning tree, let e(v) be the tree edge from v toward
the root, and pair each cell with the cell obtained by sliding its smallest
unblocked vertex along e(v). Unpaired cells are critical; for trees the
critical 1-cells count the presentation generators exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexes import Cell, CubicalComplex, cell_faces, euler_characteristic
from .errors import MatchingValidationError
from .graphs import Graph, MorseTree, morse_spanning_tree


def reduction_vertex_candidates(cell: Cell, tree: MorseTree) -> list[int]:
    """Vertices of the cell whose tree edge toward the root is unobstructed.

    A vertex v (not the root) qualifies when the closed edge e(v) meets no
    other piece of the configuration, i.e. parent(v) is neither an occupied
    vertex nor an endpoint of an occupied edge. Sorted by tree order.
    """
    g = tree.graph
    occupied_vertices = set(cell.vertices)
    edge_endpoints = {x for idx in cell.edges for x in g.edges[idx]}
    out = []
    for v in cell.vertices:
        if v == tree.root:
            continue
        p = tree.parent[v]
        if p in occupied_vertices or p in edge_endpoints:
            continue
        out.append(v)
    return sorted(out, key=lambda v: tree.order[v])


def principal_reduction(cell: Cell, tree: MorseTree) -> Cell | None:
    """Slide the smallest candidate vertex onto its tree edge, if any."""
    candidates = reduction_vertex_candidates(cell, tree)
    if not candidates:
        return None
    v = candidates[0]
    edge = tree.edge_toward_root(v)
    edge_idx = tree.graph.edges.index(edge)
    vertices = tuple(x for x in cell.vertices if x != v)
    return Cell(vertices, tuple(sorted(cell.edges + (edge_idx,))))


@dataclass(frozen=True)
class MorseMatching:
    complex: CubicalComplex
    tree: MorseTree
    pairs: tuple[dict[int, int], ...]  # per dimension d: d-cell index -> (d+1)-cell index
    critical: tuple[tuple[int, ...], ...]

    def critical_counts(self) -> list[int]:
        """Critical cells per dimension, padded like the complex census."""
        counts = [len(c) for c in self.critical]
        counts.extend([0] * (self.complex.n + 1 - len(counts)))
        return counts

    def critical_cells(self, d: int) -> list[Cell]:
        return [self.complex.cells(d)[i] for i in self.critical[d]]


def build_matching(c: CubicalComplex, tree: MorseTree) -> MorseMatching:
    """Construct and validate the Morse matching on the complex.

    W is defined dimension by dimension: a cell gets matched with its
    principal reduction unless it is already the image of a lower cell.
    The result is validated against all four matching conditions; a failure
    here means a construction bug, never bad user input.
    """
    top = c.dimension
    pairs: list[dict[int, int]] = []
    critical: list[tuple[int, ...]] = []
    image: set[int] = set()
    for d in range(top + 1):
        index_up = c.index_of(d + 1) if d < top else {}
        w: dict[int, int] = {}
        for idx, cell in enumerate(c.cells(d)):
            if idx in image:
                continue
            red = principal_reduction(cell, tree)
            if red is None:
                continue
            if red not in index_up:
                raise MatchingValidationError(
                    f"reduction of a {d}-cell is not a cell of the complex"
                )
            w[idx] = index_up[red]
        crit = tuple(
            idx
            for idx in range(len(c.cells(d)))
            if idx not in w and idx not in image
        )
        pairs.append(w)
        critical.append(crit)
        image = set(w.values())

    matching = MorseMatching(c, tree, tuple(pairs), tuple(critical))
    _validate(matching)
    return matching


def _is_regular_pair(g: Graph, sigma: Cell, tau: Cell) -> bool:
    extra = set(tau.edges) - set(sigma.edges)
    if set(sigma.edges) - set(tau.edges) or len(extra) != 1:
        return False
    e = g.edges[extra.pop()]
    gained = set(sigma.vertices) - set(tau.vertices)
    return len(gained) == 1 and gained.pop() in e and set(tau.vertices) <= set(sigma.vertices)


def _validate(m: MorseMatching) -> None:
    c, g = m.complex, m.complex.graph
    for d, w in enumerate(m.pairs):
        if len(set(w.values())) != len(w):
            raise MatchingValidationError(f"W_{d} is not injective")
        for idx, tgt in w.items():
            if not _is_regular_pair(g, c.cells(d)[idx], c.cells(d + 1)[tgt]):
                raise MatchingValidationError(
                    f"W_{d} pairs a cell with a non-regular coface"
                )
        if d + 1 <= c.dimension:
            if set(w.values()) & set(m.pairs[d + 1].keys()):
                raise MatchingValidationError(
                    f"im(W_{d}) meets dom(W_{d + 1})"
                )
    for d, w in enumerate(m.pairs):
        if not w:
            continue
        if _has_directed_cycle(m, d):
            raise MatchingValidationError(
                f"closed non-stationary W-path among {d}-cells"
            )


def _has_directed_cycle(m: MorseMatching, d: int) -> bool:
    """Cycle check for the flow graph sigma -> sigma' with sigma' < W(sigma)."""
    c = m.complex
    index = c.index_of(d)
    arcs: dict[int, list[int]] = {}
    for idx, tgt in m.pairs[d].items():
        tau = c.cells(d + 1)[tgt]
        nbrs = []
        for face, _ in cell_faces(c.graph, tau):
            j = index[face]
            if j != idx:
                nbrs.append(j)
        arcs[idx] = nbrs
    indeg: dict[int, int] = {i: 0 for i in arcs}
    for nbrs in arcs.values():
        for j in nbrs:
            if j in indeg:
                indeg[j] = indeg.get(j, 0) + 1
    queue = [i for i, k in indeg.items() if k == 0]
    seen = 0
    while queue:
        i = queue.pop()
        seen += 1
        for j in arcs.get(i, ()):  # only matched cells propagate
            if j in indeg:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
    return seen != len(indeg)


def morse_generator_count(g: Graph, n: int) -> int:
    """Generator count of the Morse presentation for n strands on g.

    Computed from the prepared spanning tree: one generator per deleted edge
    plus, for every tree vertex of degree at least 3, the usual binomial
    count per incoming direction. Subdividing never changes the value, so the
    graph need not be sufficiently subdivided to evaluate the formula.
    """
    tree = morse_spanning_tree(g)
    deg = [0] * tree.graph.vertex_count
    for u, v in tree.tree_edges:
        deg[u] += 1
        deg[v] += 1
    total = len(tree.deleted_edges)
    for v in range(tree.graph.vertex_count):
        d = deg[v]
        if d <= 2:
            continue
        for i in range(2, d):
            total += math.comb(n + d - 2, n - 1) - math.comb(n + d - i - 1, n - 1)
    return total


def matching_euler_identity(m: MorseMatching) -> bool:
    """Alternating sum of critical cells equals the Euler characteristic."""
    alt = sum((-1) ** d * len(crit) for d, crit in enumerate(m.critical))
    return alt == euler_characteristic(m.complex)

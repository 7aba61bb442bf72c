"""Shared graphs for the test suite."""

import itertools

from graphbraids import Graph


def path(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def star(k: int) -> Graph:
    """K_{1,k} with the center at index 0."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(k: int) -> Graph:
    return Graph(k, list(itertools.combinations(range(k), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def h_tree() -> Graph:
    """Two degree-3 vertices 0, 1; leaves 2, 3 on 0 and 4, 5 on 1."""
    return Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def lollipop() -> Graph:
    """Triangle 0-1-2 with a tail 2-3; one properly embedded cycle."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def figure_eight() -> Graph:
    """Two triangles sharing vertex 0; cycle rank 2."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def theta() -> Graph:
    """Vertices 0 and 1 joined by three internally disjoint paths."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def add_prepared_edge(g: Graph, u: int, v: int) -> Graph:
    """Join u and v by a twice-subdivided edge (the deleted-edge preparation)."""
    w = g.vertex_count
    return Graph(w + 2, list(g.edges) + [(u, w), (w, w + 1), (v, w + 1)])


K31 = star(3)

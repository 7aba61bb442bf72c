"""Finite simple graphs and the combinatorial operations behind everything else.

A Graph is immutable: a vertex count plus a canonically sorted tuple of
undirected edges. Vertices are 0-based integers. The module provides the
subdivision conditions for discretized configuration spaces, homeomorphism-type
detection, line/opposite graphs, and the rooted spanning tree with the
plane-walk vertex numbering used by the discrete Morse machinery.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum

from .errors import DisconnectedGraphError, GraphFormatError


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with stable vertex indexing.

    Edges are stored as (u, v) pairs with u < v, sorted lexicographically.
    The constructor canonicalizes edge order and rejects loops, duplicate
    edges and out-of-range endpoints.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges=()):
        if vertex_count < 0:
            raise GraphFormatError(f"negative vertex count {vertex_count}")
        canon = []
        for e in edges:
            u, v = e
            if u == v:
                raise GraphFormatError(f"loop edge [{u}, {v}] not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphFormatError(
                    f"edge [{u}, {v}] has an endpoint outside 0..{vertex_count - 1}"
                )
            canon.append((min(u, v), max(u, v)))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise GraphFormatError(f"duplicate edge {list(a)}")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists sorted ascending; index order is the plane embedding."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        degs = [0] * self.vertex_count
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return degs

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def cycle_rank(self) -> int:
        """First Betti number E - V + 1 of a connected graph."""
        return self.edge_count - self.vertex_count + 1

    def to_json(self) -> str:
        return json.dumps(
            {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}
        )


def parse_graph(text: str) -> Graph:
    """Parse the JSON graph format {"vertices": n, "edges": [[u, v], ...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphFormatError('expected an object with "vertices" and "edges"')
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, int) or isinstance(vertices, bool):
        raise GraphFormatError('"vertices" must be an integer')
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be a list of pairs')
    pairs = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphFormatError(f"edge {e!r} is not a pair of integers")
        pairs.append((e[0], e[1]))
    return Graph(vertices, pairs)


def essential_vertices(g: Graph) -> set[int]:
    """Vertices of degree != 2 (leaves and branch points alike)."""
    return {v for v, d in enumerate(g.degrees()) if d != 2}


def _chains(g: Graph) -> tuple[list[list[int]], list[list[int]]]:
    """Maximal degree-2 chains anchored at essential vertices.

    Returns (open_chains, closed_chains) as vertex paths. An open chain runs
    between two distinct essential vertices; a closed chain starts and ends at
    the same essential vertex. Components without essential vertices (pure
    cycles) are not reported here; see _pure_cycles.
    """
    adj = g.adjacency()
    ess = essential_vertices(g)
    open_chains: list[list[int]] = []
    closed_chains: list[list[int]] = []
    seen: set[frozenset[tuple[int, int]]] = set()
    for u in sorted(ess):
        for w in adj[u]:
            path = [u, w]
            while path[-1] not in ess:
                prev, cur = path[-2], path[-1]
                nxt = [x for x in adj[cur] if x != prev]
                path.append(nxt[0])
            key = frozenset(
                (min(a, b), max(a, b)) for a, b in zip(path, path[1:])
            )
            if key in seen:
                continue
            seen.add(key)
            if path[0] == path[-1]:
                closed_chains.append(path)
            else:
                open_chains.append(path)
    return open_chains, closed_chains


def _pure_cycles(g: Graph) -> list[list[int]]:
    """Cycle components in which every vertex has degree 2."""
    adj = g.adjacency()
    ess = essential_vertices(g)
    reached: set[int] = set()
    open_chains, closed_chains = _chains(g)
    for chain in open_chains + closed_chains:
        reached.update(chain)
    cycles = []
    visited = set(reached) | ess
    for v in range(g.vertex_count):
        if v in visited or not adj[v]:
            continue
        cycle = [v, adj[v][0]]
        visited.add(v)
        while cycle[-1] != v:
            prev, cur = cycle[-2], cycle[-1]
            visited.add(cur)
            nxt = [x for x in adj[cur] if x != prev]
            cycle.append(nxt[0])
        cycles.append(cycle)
    return cycles


def _shortest_cycle_through(g: Graph, edge: tuple[int, int]) -> list[int] | None:
    """Shortest cycle containing the given edge (BFS in g minus the edge)."""
    u, v = edge
    adj = g.adjacency()
    prev = {u: None}
    queue = [u]
    while queue:
        nxt = []
        for x in queue:
            for y in adj[x]:
                if (min(x, y), max(x, y)) == edge:
                    continue
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        queue = nxt
    if v not in prev:
        return None
    path = [v]
    while path[-1] is not None and prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path


def is_sufficiently_subdivided(g: Graph, n: int) -> tuple[bool, list[dict]]:
    """Check the two subdivision conditions for n strands.

    (A) every maximal degree-2 path between distinct essential vertices has
    edge-length >= n - 1, and (B) every cycle has edge-length >= n + 1.
    Returns (ok, violations); each violation names the offending path or cycle.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("subdivision conditions need a connected graph")
    if g.vertex_count <= 1:
        raise GraphFormatError("subdivision conditions need at least 2 vertices")
    violations: list[dict] = []
    open_chains, _ = _chains(g)
    for path in open_chains:
        length = len(path) - 1
        if length < n - 1:
            violations.append(
                {"kind": "path", "vertices": path, "length": length, "required": n - 1}
            )
    seen_cycles: set[frozenset[int]] = set()
    for edge in g.edges:
        cycle = _shortest_cycle_through(g, edge)
        if cycle is None or len(cycle) >= n + 1:
            continue
        key = frozenset(cycle)
        if key not in seen_cycles:
            seen_cycles.add(key)
            violations.append(
                {"kind": "cycle", "vertices": cycle, "length": len(cycle), "required": n + 1}
            )
    return (not violations, violations)


def sufficiently_subdivide(g: Graph, n: int) -> Graph:
    """Minimal subdivision of g meeting both conditions for n strands.

    Each too-short chain or cycle receives exactly the number of vertices it
    is missing, spread evenly over its edges with the surplus going to
    lexicographically earlier edges. Chains between distinct essential
    vertices need length n - 1; cycles through at most one essential vertex
    need length n + 1; every other cycle is then long enough automatically
    (it contains two such chains).
    """
    if not g.is_connected():
        raise DisconnectedGraphError("cannot subdivide a disconnected graph")
    open_chains, closed_chains = _chains(g)
    add: dict[tuple[int, int], int] = {}

    def spread(path: list[int], deficit: int) -> None:
        chain_edges = sorted(
            (min(a, b), max(a, b)) for a, b in zip(path, path[1:])
        )
        base, extra = divmod(deficit, len(chain_edges))
        for i, e in enumerate(chain_edges):
            add[e] = add.get(e, 0) + base + (1 if i < extra else 0)

    for path in open_chains:
        deficit = (n - 1) - (len(path) - 1)
        if deficit > 0:
            spread(path, deficit)
    for path in closed_chains + _pure_cycles(g):
        deficit = (n + 1) - (len(path) - 1)
        if deficit > 0:
            spread(path, deficit)
    return subdivide_edges(g, add)


def subdivide_edges(g: Graph, add: dict[tuple[int, int], int]) -> Graph:
    """Replace each listed edge by a path through `add[edge]` fresh vertices.

    Edges are processed in canonical order, so new vertex indices are
    deterministic: the first subdivided edge gets V, V+1, ... and so on.
    """
    new_edges: list[tuple[int, int]] = []
    next_vertex = g.vertex_count
    for edge in g.edges:
        count = add.get(edge, 0)
        if count <= 0:
            new_edges.append(edge)
            continue
        u, v = edge
        path = [u] + list(range(next_vertex, next_vertex + count)) + [v]
        next_vertex += count
        new_edges.extend(zip(path, path[1:]))
    return Graph(next_vertex, new_edges)


class HomeoTag(str, Enum):
    INTERVAL = "Interval"
    CIRCLE = "Circle"
    STAR3 = "Star3"
    TREE = "Tree"
    ONE_CYCLE = "OneCycle"
    OTHER = "Other"


@dataclass(frozen=True)
class HomeoType:
    tag: HomeoTag
    cycle_rank: int


def homeomorphism_type(g: Graph) -> HomeoType:
    """Classify the homeomorphism type after smoothing degree-2 vertices.

    Smoothing does not change the degrees of essential vertices or the cycle
    rank, so the class can be read off those directly. Tags are mutually
    exclusive: Interval (path or point), Circle, Star3 (one degree-3 branch
    vertex, three legs), Tree, OneCycle (cycle rank 1, not a circle), Other.
    """
    if g.vertex_count == 0:
        raise GraphFormatError("homeomorphism type needs at least one vertex")
    if not g.is_connected():
        raise DisconnectedGraphError("homeomorphism type needs a connected graph")
    rank = g.cycle_rank()
    degs = g.degrees()
    if rank == 0:
        if all(d <= 2 for d in degs):
            return HomeoType(HomeoTag.INTERVAL, 0)
        branch = [v for v, d in enumerate(degs) if d >= 3]
        if len(branch) == 1 and degs[branch[0]] == 3:
            return HomeoType(HomeoTag.STAR3, 0)
        return HomeoType(HomeoTag.TREE, 0)
    if all(d == 2 for d in degs):
        return HomeoType(HomeoTag.CIRCLE, 1)
    if rank == 1:
        return HomeoType(HomeoTag.ONE_CYCLE, 1)
    return HomeoType(HomeoTag.OTHER, rank)


def count_distinct_paths(g: Graph) -> int:
    """Number of maximal degree-2 chains anchored at essential vertices.

    Equals the edge count of the smoothed graph; a graph with no essential
    vertices (a circle) has none.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("distinct paths need a connected graph")
    open_chains, closed_chains = _chains(g)
    return len(open_chains) + len(closed_chains)


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of g; adjacency iff the edges share an endpoint."""
    edges = []
    for i, e in enumerate(g.edges):
        for j in range(i + 1, len(g.edges)):
            f = g.edges[j]
            if set(e) & set(f):
                edges.append((i, j))
    return Graph(len(g.edges), edges)


def opposite_graph(g: Graph) -> Graph:
    """Complement graph on the same vertices."""
    present = set(g.edges)
    edges = [
        (u, v)
        for u in range(g.vertex_count)
        for v in range(u + 1, g.vertex_count)
        if (u, v) not in present
    ]
    return Graph(g.vertex_count, edges)


def nonisomorphic_graphs(vertex_count: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on the given vertices.

    Brute force over edge subsets with permutation canonicalization; meant
    for small vertex counts only.
    """
    pairs = list(itertools.combinations(range(vertex_count), 2))
    perms = list(itertools.permutations(range(vertex_count)))
    seen: set[tuple] = set()
    out = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        canon = min(
            tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in edges))
            for p in perms
        )
        if canon not in seen:
            seen.add(canon)
            out.append(Graph(vertex_count, edges))
    return out


@dataclass(frozen=True)
class MorseTree:
    """A rooted spanning tree with the plane-walk vertex numbering.

    `graph` is the (possibly subdivided) graph the tree spans; the
    construction may add vertices so that the root has tree degree 1 and both
    endpoints of every deleted (non-tree) edge are leaves of the tree.
    `order[v]` is the position of v in the walk around the tree; `parent[v]`
    is the unique tree neighbor one step toward the root (-1 at the root).
    """

    graph: Graph
    tree_edges: tuple[tuple[int, int], ...]
    root: int
    order: tuple[int, ...]
    parent: tuple[int, ...]
    deleted_edges: tuple[tuple[int, int], ...]

    def edge_toward_root(self, v: int) -> tuple[int, int]:
        """The tree edge e(v) oriented away from v, as a canonical pair."""
        p = self.parent[v]
        if p < 0:
            raise ValueError(f"vertex {v} is the root; it has no edge toward the root")
        return (min(v, p), max(v, p))


def morse_spanning_tree(g: Graph) -> MorseTree:
    """Spanning tree, plane-walk order and deleted edges for the Morse matching.

    The tree is grown depth-first (neighbors in index order) from the
    smallest-index degree-1 vertex, or from vertex 0 when the graph has no
    leaf. Every non-tree edge is then subdivided twice: the outer thirds join
    the tree as stubs, so the surviving deleted edge has both endpoints of
    tree degree 1. The walk is rooted at the smallest-index tree leaf of the
    prepared tree; with a graph leaf present that is the original degree-1
    root, otherwise it is the first stub (the standard picture for a cycle,
    whose basepoint is an endpoint of the deleted edge).
    """
    if not g.is_connected():
        raise DisconnectedGraphError("spanning tree needs a connected graph")
    work = g
    if work.vertex_count == 1:
        return MorseTree(work, (), 0, (0,), (-1,), ())

    leaves = [v for v, d in enumerate(work.degrees()) if d == 1]
    start = min(leaves) if leaves else 0

    adj = work.adjacency()
    visited = {start}
    tree: set[tuple[int, int]] = set()
    stack = [(start, iter(adj[start]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in visited:
                visited.add(w)
                tree.add((min(v, w), max(v, w)))
                stack.append((w, iter(adj[w])))
                break
        else:
            stack.pop()
    non_tree = [e for e in work.edges if e not in tree]

    deleted: list[tuple[int, int]] = []
    if non_tree:
        fresh = work.vertex_count
        new_edges = []
        for e in work.edges:
            if e not in set(non_tree):
                new_edges.append(e)
                continue
            u, v = e
            a, b = fresh, fresh + 1
            fresh += 2
            new_edges.extend([(u, a), (a, b), (v, b)])
            tree.add((u, a))
            tree.add((v, b))
            deleted.append((a, b))
        work = Graph(fresh, new_edges)

    tree_adj: list[list[int]] = [[] for _ in range(work.vertex_count)]
    for u, v in tree:
        tree_adj[u].append(v)
        tree_adj[v].append(u)
    for lst in tree_adj:
        lst.sort()
    tree_deg = [len(lst) for lst in tree_adj]
    root = min(v for v, d in enumerate(tree_deg) if d == 1)

    order = [-1] * work.vertex_count
    parent = [-1] * work.vertex_count
    stamp = 0
    walk = [(root, -1)]
    while walk:
        v, par = walk.pop()
        if order[v] >= 0:
            continue
        order[v] = stamp
        parent[v] = par
        stamp += 1
        for w in reversed(tree_adj[v]):
            if order[w] < 0:
                walk.append((w, v))

    assert stamp == work.vertex_count, "spanning tree misses vertices"
    assert tree_deg[root] == 1, "root must have tree degree 1"
    for a, b in deleted:
        assert tree_deg[a] == 1 and tree_deg[b] == 1, "deleted edge endpoints must be tree leaves"

    return MorseTree(
        work,
        tuple(sorted(tree)),
        root,
        tuple(order),
        tuple(parent),
        tuple(sorted(deleted)),
    )

"""Immutable finite simple graphs and the structural predicates used by the checks.

Vertices are the dense ids ``0..n-1``. Every function here is a pure function
of its inputs; ``Graph`` values never change after construction.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class Sentinel(enum.Enum):
    """Markers for quantities that have no numeric value on a given graph."""

    UNDEFINED = "undefined"
    ACYCLIC = "acyclic"
    DISCONNECTED = "disconnected"

    def __repr__(self) -> str:
        return self.name


UNDEFINED = Sentinel.UNDEFINED
ACYCLIC = Sentinel.ACYCLIC
DISCONNECTED = Sentinel.DISCONNECTED

ISOMORPHISM_LIMIT = 9


class GraphError(ValueError):
    """Raised for malformed vertex/edge input."""


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Duplicate pairs (in either orientation) are collapsed and recorded in
    ``duplicates_collapsed``. ``labels`` optionally keeps the original vertex
    labels of parsed input; it does not take part in equality.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence | None = None,
    ):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        duplicates = False
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop {pair!r} is not allowed in a simple graph")
            if v in adj[u]:
                duplicates = True
                continue
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self.duplicates_collapsed = duplicates
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphError(f"{len(labels)} labels given for {n} vertices")
        self.labels = labels

    @classmethod
    def _from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        # trusted fast path: adj must already be symmetric and loop-free
        g = cls.__new__(cls)
        g._adj = tuple(frozenset(s) for s in adj)
        g.duplicates_collapsed = False
        g.labels = None
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v
        )

    @cached_property
    def m(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


@dataclass(frozen=True)
class DegreeSummary:
    degrees: tuple[int, ...]
    distinct: frozenset[int]
    max_degree: int | Sentinel
    min_degree: int | Sentinel

    @property
    def isolated(self) -> int:
        return self.degrees.count(0)


def degree_summary(g: Graph) -> DegreeSummary:
    """Degree sequence plus the max/min degree.

    The minimum is taken over non-isolated vertices; with no edges at all
    both extremes are ``UNDEFINED``.
    """
    degs = g.degrees
    positive = [d for d in degs if d > 0]
    if not positive:
        return DegreeSummary(degs, frozenset(degs), UNDEFINED, UNDEFINED)
    return DegreeSummary(degs, frozenset(degs), max(positive), min(positive))


def has_isolated_vertices(g: Graph) -> bool:
    return 0 in g.degrees


class Component(NamedTuple):
    graph: Graph
    vertices: tuple[int, ...]  # vertices[i] is the id in the parent graph


def _component_vertex_sets(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        part = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    part.append(w)
                    queue.append(w)
        parts.append(sorted(part))
    return parts


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    return Graph._from_adjacency(
        [[index[w] for w in g._adj[v] if w in index] for v in vertices]
    )


def connected_components(g: Graph) -> list[Component]:
    return [
        Component(induced_subgraph(g, part), tuple(part))
        for part in _component_vertex_sets(g)
    ]


def is_connected(g: Graph) -> bool:
    return len(_component_vertex_sets(g)) <= 1


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[list[int]] = []
    offset = 0
    for h in graphs:
        adj.extend([w + offset for w in s] for s in h._adj)
        offset += h.n
    return Graph._from_adjacency(adj)


def line_graph(g: Graph) -> Graph:
    """Intersection graph of the edge set; vertex ``i`` is ``g.edges[i]``."""
    edges = g.edges
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    adj: list[set[int]] = [set() for _ in edges]
    for inc in incident:
        for a, b in itertools.combinations(inc, 2):
            adj[a].add(b)
            adj[b].add(a)
    return Graph._from_adjacency(adj)


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g._adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def girth(g: Graph) -> int | Sentinel:
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g._adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else best


def diameter(g: Graph) -> int | Sentinel:
    if g.n == 0:
        return 0
    best = 0
    for s in range(g.n):
        dist = _bfs_distances(g, s)
        if -1 in dist:
            return DISCONNECTED
        best = max(best, max(dist))
    return best


def is_triangle_free(g: Graph) -> bool:
    adj = g._adj
    return all(not (adj[u] & adj[v]) for u, v in g.edges)


def dominant_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v, d in enumerate(g.degrees) if d == g.n - 1 and g.n > 1)


def adjacent_dominant_pair(g: Graph) -> tuple[int, int] | None:
    """An edge whose two endpoints are both dominant, if one exists."""
    dom = sorted(dominant_vertices(g))
    if len(dom) >= 2:
        return dom[0], dom[1]
    return None


def pendant_path_count(g: Graph) -> int:
    """Number of edges joining a degree-1 vertex to a degree-2 vertex.

    Each such edge is the pendant end of exactly one path of length two
    running through the degree-2 vertex.
    """
    degs = g.degrees
    return sum(1 for u, v in g.edges if {degs[u], degs[v]} == {1, 2})


def two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g._adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


@dataclass(frozen=True)
class Regular:
    k: int

    @property
    def degree_sum(self) -> int:
        return 2 * self.k


@dataclass(frozen=True)
class Biregular:
    max_degree: int
    min_degree: int

    @property
    def degree_sum(self) -> int:
        return self.max_degree + self.min_degree


@dataclass(frozen=True)
class Neither:
    pass


def _classify_connected(g: Graph) -> Regular | Biregular | Neither:
    degs = g.degrees
    distinct = set(degs)
    if len(distinct) == 1:
        return Regular(degs[0] if degs else 0)
    if len(distinct) != 2:
        return Neither()
    color = two_coloring(g)
    if color is None:
        return Neither()
    side = [set(), set()]
    for v, c in enumerate(color):
        side[c].add(degs[v])
    if len(side[0]) == 1 and len(side[1]) == 1 and side[0] != side[1]:
        hi, lo = max(distinct), min(distinct)
        return Biregular(hi, lo)
    return Neither()


def regularity_class(g: Graph) -> list[Regular | Biregular | Neither]:
    """Per-component classification, in component order."""
    return [_classify_connected(c.graph) for c in connected_components(g)]


def is_coherent(g: Graph) -> bool:
    classes = regularity_class(g)
    if any(isinstance(c, Neither) for c in classes):
        return False
    return len({c.degree_sum for c in classes}) <= 1


def is_disjoint_union_of_k2(g: Graph) -> bool:
    return g.m > 0 and all(
        c.graph.n == 2 and c.graph.m == 1 for c in connected_components(g)
    )


def has_alternated_degree(g: Graph) -> bool:
    degs = g.degrees
    return all((degs[u] + degs[v]) % 2 == 1 for u, v in g.edges)


def component_degree_parities(g: Graph) -> list[str]:
    """'even', 'odd' or 'mixed' for the degree set of each component."""
    out = []
    for c in connected_components(g):
        parities = {d % 2 for d in c.graph.degrees}
        out.append("mixed" if len(parities) > 1 else ("even" if parities == {0} else "odd"))
    return out


# -- isomorphism ------------------------------------------------------------


def _refined_cells(g: Graph) -> list[tuple]:
    """Isomorphism-invariant colour per vertex: degree, then sorted neighbour degrees."""
    degs = g.degrees
    return [(degs[v], tuple(sorted(degs[w] for w in g._adj[v]))) for v in range(g.n)]


def _check_limit(*graphs: Graph) -> None:
    for h in graphs:
        if h.n > ISOMORPHISM_LIMIT:
            raise GraphError(
                f"isomorphism search refused for n={h.n} (limit {ISOMORPHISM_LIMIT})"
            )


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking over colour-compatible vertex maps."""
    _check_limit(g1, g2)
    if g1.n != g2.n or g1.m != g2.m:
        return False
    c1, c2 = _refined_cells(g1), _refined_cells(g2)
    if sorted(c1) != sorted(c2):
        return False
    n = g1.n
    order = sorted(range(n), key=lambda v: (c1.count(c1[v]), c1[v]))
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or c2[w] != c1[v]:
                continue
            if all((u in g1._adj[v]) == (mapping[u] in g2._adj[w]) for u in mapping):
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    return extend(0)


def canonical_form(g: Graph) -> tuple:
    """Lexicographically greatest upper-triangle bit string over colour-preserving relabelings.

    Vertices are first grouped by an isomorphism-invariant colour; only the
    permutations inside each colour class are searched, so the result is a
    complete invariant.
    """
    _check_limit(g)
    cells = _refined_cells(g)
    classes: dict[tuple, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(cells[v], []).append(v)
    groups = [classes[k] for k in sorted(classes)]
    pairs = [(i, j) for j in range(g.n) for i in range(j)]
    best = None
    for perms in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        order = [v for p in perms for v in p]  # order[new_id] = old vertex
        bits = tuple(1 if order[j] in g._adj[order[i]] else 0 for i, j in pairs)
        if best is None or bits > best:
            best = bits
    return (g.n, tuple(sorted(cells)), best if best is not None else ())

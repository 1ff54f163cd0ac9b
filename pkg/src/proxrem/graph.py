"""Immutable undirected simple graphs and layered composition operators.

Vertices are dense 0-based integers. A graph is fully described by its
per-vertex neighbor lists, which are kept sorted so that iteration order is
canonical and two equal graphs compare equal structurally. Builders return
new graphs; nothing here mutates an existing one, so graphs can be shared
freely across threads.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Iterator, Sequence

import numpy as np

# A vertex id is just an index in [0, order); a layer plan is the sequence of
# layer sizes fed to sequential_sum.
VertexId = int
LayerPlan = Sequence[int]


class GraphError(ValueError):
    """Raised when a graph cannot be built from the given data."""


class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    Neighbor lists are sorted ascending, contain no duplicates and no
    self-loops, and are symmetric (u lists v iff v lists u). Instances are
    immutable after construction.
    """

    __slots__ = ("_adj", "_edge_count", "_csr", "_hash")

    def __init__(self, adjacency: Sequence[Iterable[int]], _trusted: bool = False):
        if _trusted:
            adj = tuple(tuple(nbrs) for nbrs in adjacency)
        else:
            adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adjacency)
            self._check(adj)
        if not adj:
            raise GraphError("graph must have at least one vertex")
        self._adj = adj
        self._edge_count = sum(len(nbrs) for nbrs in adj) // 2
        self._csr: tuple[np.ndarray, np.ndarray] | None = None
        self._hash: int | None = None

    @staticmethod
    def _check(adj: tuple[tuple[int, ...], ...]) -> None:
        n = len(adj)
        for v, nbrs in enumerate(adj):
            for w in nbrs:
                if not 0 <= w < n:
                    raise GraphError(f"neighbor {w} of vertex {v} out of range [0, {n})")
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
            for w in nbrs:
                row = adj[w]
                pos = bisect_left(row, v)
                if pos >= len(row) or row[pos] != v:
                    raise GraphError(f"asymmetric adjacency: {v} lists {w} but not conversely")

    @property
    def order(self) -> int:
        """Number of vertices."""
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        """Number of undirected edges."""
        return self._edge_count

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples."""
        return self._adj

    def neighbors(self, v: VertexId) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: VertexId) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self._adj)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        row = self._adj[u]
        pos = bisect_left(row, v)
        return pos < len(row) and row[pos] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once, as (u, v) with u < v."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency as a flat (offsets, neighbors) pair for fast BFS sweeps."""
        if self._csr is None:
            n = self.order
            indptr = np.zeros(n + 1, dtype=np.int64)
            for v, nbrs in enumerate(self._adj):
                indptr[v + 1] = indptr[v] + len(nbrs)
            indices = np.empty(int(indptr[n]), dtype=np.int32)
            pos = 0
            for nbrs in self._adj:
                for w in nbrs:
                    indices[pos] = w
                    pos += 1
            self._csr = (indptr, indices)
        return self._csr

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from unordered vertex pairs.

    Duplicate pairs are dropped. Endpoints outside [0, n) and self-loops are
    rejected with the offending pair in the message.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range [0, {n})")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(tuple(tuple(sorted(s)) for s in adj), _trusted=True)


def basic_generator(kind: str, n: int) -> Graph:
    """Return the named graph (path, cycle, complete, or edgeless) on n vertices."""
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    if kind == "path":
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs at least 3 vertices, got {n}")
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "edgeless":
        return from_edge_list(n, [])
    raise GraphError(f"unknown graph kind {kind!r}; expected path, cycle, complete, or edgeless")


def sequential_sum(plan: LayerPlan) -> tuple[Graph, tuple[int, ...]]:
    """Join consecutive edgeless layers completely.

    The result has one vertex block per layer (numbered layer by layer) and
    every vertex of layer i adjacent to every vertex of layer i+1, nothing
    else. Returns the graph and the layer index of each vertex.
    """
    sizes = list(plan)
    if not sizes:
        raise GraphError("layer plan must be nonempty")
    if any(s < 1 for s in sizes):
        raise GraphError(f"layer sizes must be positive, got {sizes}")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(len(sizes) - 1):
        below = range(starts[i], starts[i + 1])
        above = range(starts[i + 1], starts[i + 2])
        for u in below:
            adj[u].extend(above)
        for v in above:
            adj[v].extend(below)
    layer_of = tuple(i for i, s in enumerate(sizes) for _ in range(s))
    return Graph([sorted(a) for a in adj], _trusted=True), layer_of


def add_twins(g: Graph, w: VertexId, t: int) -> Graph:
    """Append t new vertices, each adjacent to exactly the neighbors of w.

    Twins replicate w's neighborhood, so distances between original vertices
    are unchanged and triangle-freeness is preserved. Isolated w is rejected
    (its twins would be isolated too).
    """
    if not 0 <= w < g.order:
        raise GraphError(f"vertex {w} out of range [0, {g.order})")
    if t < 0:
        raise GraphError(f"twin count must be >= 0, got {t}")
    if g.degree(w) == 0:
        raise GraphError(f"vertex {w} is isolated; twins would disconnect the graph")
    if t == 0:
        return g
    base = g.order
    nbrs = g.neighbors(w)
    adj = [list(row) for row in g.adjacency]
    new_ids = range(base, base + t)
    for x in nbrs:
        adj[x].extend(new_ids)
    for _ in new_ids:
        adj.append(list(nbrs))
    return Graph([sorted(a) for a in adj], _trusted=True)


def disjoint_union_with_links(
    parts: Sequence[Graph],
    links: Iterable[tuple[int, int, int, int]],
) -> tuple[Graph, tuple[int, ...]]:
    """Disjoint union of parts plus bridge edges, with vertices renumbered per part.

    Each link (i, u, j, v) adds an edge between vertex u of part i and vertex
    v of part j. Returns the graph and the numbering offset of each part.
    """
    if not parts:
        raise GraphError("need at least one part")
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p.order)
    adj: list[list[int]] = []
    for p, off in zip(parts, offsets):
        for nbrs in p.adjacency:
            adj.append([w + off for w in nbrs])
    for i, u, j, v in links:
        for idx, name in ((i, "part"), (j, "part")):
            if not 0 <= idx < len(parts):
                raise GraphError(f"link ({i}, {u}, {j}, {v}) references unknown {name} {idx}")
        if not 0 <= u < parts[i].order:
            raise GraphError(f"link ({i}, {u}, {j}, {v}): vertex {u} not in part {i}")
        if not 0 <= v < parts[j].order:
            raise GraphError(f"link ({i}, {u}, {j}, {v}): vertex {v} not in part {j}")
        a, b = offsets[i] + u, offsets[j] + v
        if a == b:
            raise GraphError(f"link ({i}, {u}, {j}, {v}) is a self-loop")
        adj[a].append(b)
        adj[b].append(a)
    return (
        Graph([sorted(set(a)) for a in adj], _trusted=True),
        tuple(offsets[:-1]),
    )


def is_connected(g: Graph) -> bool:
    """True iff one BFS from vertex 0 reaches every vertex."""
    n = g.order
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == n


def min_degree(g: Graph) -> int:
    return min(len(nbrs) for nbrs in g.adjacency)

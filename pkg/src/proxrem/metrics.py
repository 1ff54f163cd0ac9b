"""Exact distance invariants: total distances, proximity, remoteness, eccentricities.

Distances are integers and the per-vertex averages are reduced rationals
(``fractions.Fraction``), so every comparison downstream is exact. The full
sweep runs one BFS per vertex over the graph's flat (offsets, neighbors)
adjacency; sources are independent, so the sweep can fan out over threads.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Collection, Literal

# Pick the portable threading layer before numba initialises one; callers may
# still override via the environment.
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

import numba
import numpy as np
from numba import njit, prange

from .graph import Graph, VertexId

# Exact rational type used for proximity/remoteness; Fraction is always stored
# in lowest terms with a positive denominator.
Rational = Fraction

_SOURCE_CHUNK = 64


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph but some vertex is unreachable."""

    def __init__(self, source: int, unreached: int):
        self.source = source
        self.unreached = unreached
        super().__init__(f"graph is disconnected: vertex {unreached} is unreachable from {source}")


def bfs_distances(g: Graph, v: VertexId) -> list[int]:
    """Shortest-path distances from v to every vertex, as a list indexed by vertex."""
    n = g.order
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range [0, {n})")
    dist = [-1] * n
    dist[v] = 0
    queue = deque([v])
    reached = 1
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = du
                reached += 1
                queue.append(w)
    if reached < n:
        unreached = next(w for w in range(n) if dist[w] < 0)
        raise DisconnectedGraphError(v, unreached)
    return dist


def total_distance(g: Graph, v: VertexId) -> int:
    """Sum of distances from v to all other vertices."""
    return sum(bfs_distances(g, v))


def partial_total_distance(g: Graph, v: VertexId, x: Collection[int]) -> int:
    """Sum of distances from v to the vertices of x (zero for empty x)."""
    n = g.order
    for member in x:
        if not 0 <= member < n:
            raise ValueError(f"set member {member} out of range [0, {n})")
    if not x:
        return 0
    dist = bfs_distances(g, v)
    return sum(dist[member] for member in x)


def neighborhood_ring(
    g: Graph, v: VertexId, i: int, mode: Literal["exact", "at_most", "at_least"] = "exact"
) -> set[int]:
    """Vertices at distance exactly / at most / at least i from v (v counts as distance 0)."""
    if i < 0:
        raise ValueError(f"distance must be >= 0, got {i}")
    dist = bfs_distances(g, v)
    if mode == "exact":
        return {w for w, d in enumerate(dist) if d == i}
    if mode == "at_most":
        return {w for w, d in enumerate(dist) if d <= i}
    if mode == "at_least":
        return {w for w, d in enumerate(dist) if d >= i}
    raise ValueError(f"unknown mode {mode!r}; expected exact, at_most, or at_least")


@dataclass(frozen=True)
class InvariantReport:
    """Exact distance invariants of one connected graph.

    ``triangle_free``/``c4_free`` stay None until filled in from the subgraph
    checks (see :mod:`proxrem.forbidden` and :func:`proxrem.bounds.check_graph`).
    """

    order: int
    total_distance: tuple[int, ...]
    eccentricity: tuple[int, ...]
    proximity: Rational
    remoteness: Rational
    diameter: int
    radius: int
    median_vertices: tuple[int, ...]
    margin_vertices: tuple[int, ...]
    center_vertices: tuple[int, ...]
    average_distance: Rational
    min_degree: int
    triangle_free: bool | None = None
    c4_free: bool | None = None

    def with_class_flags(self, triangle_free: bool, c4_free: bool) -> "InvariantReport":
        return replace(self, triangle_free=triangle_free, c4_free=c4_free)


@njit(cache=True)
def _sigma_ecc_serial(indptr, indices):  # pragma: no cover - exercised via wrapper
    n = indptr.shape[0] - 1
    sigma = np.zeros(n, np.int64)
    ecc = np.zeros(n, np.int64)
    dist = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    seen = np.zeros(n, np.int32)  # epoch tags avoid clearing between sources
    min_reached = n
    epoch = 0
    for s in range(n):
        epoch += 1
        queue[0] = s
        seen[s] = epoch
        dist[s] = 0
        head = 0
        tail = 1
        tot = 0
        far = 0
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for i in range(indptr[u], indptr[u + 1]):
                w = indices[i]
                if seen[w] != epoch:
                    seen[w] = epoch
                    dist[w] = du
                    tot += du
                    far = du
                    queue[tail] = w
                    tail += 1
        if tail < min_reached:
            min_reached = tail
        sigma[s] = tot
        ecc[s] = far
    return sigma, ecc, min_reached


@njit(cache=True, parallel=True)
def _sigma_ecc_parallel(indptr, indices, chunk):  # pragma: no cover - exercised via wrapper
    n = indptr.shape[0] - 1
    sigma = np.zeros(n, np.int64)
    ecc = np.zeros(n, np.int64)
    reached = np.empty(n, np.int32)
    nchunks = (n + chunk - 1) // chunk
    for c in prange(nchunks):
        dist = np.empty(n, np.int32)
        queue = np.empty(n, np.int32)
        seen = np.zeros(n, np.int32)
        epoch = 0
        lo = c * chunk
        hi = min(n, lo + chunk)
        for s in range(lo, hi):
            epoch += 1
            queue[0] = s
            seen[s] = epoch
            dist[s] = 0
            head = 0
            tail = 1
            tot = 0
            far = 0
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[u] + 1
                for i in range(indptr[u], indptr[u + 1]):
                    w = indices[i]
                    if seen[w] != epoch:
                        seen[w] = epoch
                        dist[w] = du
                        tot += du
                        far = du
                        queue[tail] = w
                        tail += 1
            reached[s] = tail
            sigma[s] = tot
            ecc[s] = far
    return sigma, ecc, reached


_default_threads: int | None = None


def set_default_threads(threads: int | None) -> None:
    """Set the thread count used by invariant sweeps when none is passed explicitly.

    None restores the default (all threads numba was launched with).
    """
    global _default_threads
    if threads is not None and threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads}")
    _default_threads = threads


def get_default_threads() -> int | None:
    return _default_threads


def _sigma_ecc(g: Graph, threads: int | None) -> tuple[np.ndarray, np.ndarray]:
    indptr, indices = g.csr()
    if threads is None:
        threads = _default_threads
    if threads == 1:
        sigma, ecc, min_reached = _sigma_ecc_serial(indptr, indices)
        if min_reached < g.order:
            _raise_disconnected(g)
        return sigma, ecc
    if threads is not None:
        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
    sigma, ecc, reached = _sigma_ecc_parallel(indptr, indices, _SOURCE_CHUNK)
    if int(reached.min()) < g.order:
        _raise_disconnected(g)
    return sigma, ecc


def _raise_disconnected(g: Graph) -> None:
    dist = [-1] * g.order
    dist[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    unreached = next(w for w in range(g.order) if dist[w] < 0)
    raise DisconnectedGraphError(0, unreached)


def invariant_report(g: Graph, threads: int | None = None) -> InvariantReport:
    """Compute every distance invariant of a connected graph in one BFS sweep.

    Cost is one BFS per vertex; with ``threads`` above one the sources are
    processed concurrently and the results reduced. All values are exact.
    """
    n = g.order
    if n < 2:
        raise ValueError("invariants need order >= 2 (average distance is undefined on one vertex)")
    sigma, ecc = _sigma_ecc(g, threads)
    sig_min = int(sigma.min())
    sig_max = int(sigma.max())
    ecc_min = int(ecc.min())
    ecc_max = int(ecc.max())
    return InvariantReport(
        order=n,
        total_distance=tuple(int(s) for s in sigma),
        eccentricity=tuple(int(e) for e in ecc),
        proximity=Fraction(sig_min, n - 1),
        remoteness=Fraction(sig_max, n - 1),
        diameter=ecc_max,
        radius=ecc_min,
        median_vertices=tuple(int(v) for v in np.flatnonzero(sigma == sig_min)),
        margin_vertices=tuple(int(v) for v in np.flatnonzero(sigma == sig_max)),
        center_vertices=tuple(int(v) for v in np.flatnonzero(ecc == ecc_min)),
        average_distance=Fraction(int(sigma.sum()), n * (n - 1)),
        min_degree=min(len(nbrs) for nbrs in g.adjacency),
    )

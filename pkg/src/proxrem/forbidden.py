"""Triangle and 4-cycle detection plus the second-neighborhood ball check.

Both detectors look for subgraphs, not induced subgraphs: a 4-cycle exists
iff some vertex pair has two common neighbors, which is what the detection
counts. Scans are deterministic, so a returned witness is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexId, is_connected, min_degree
from .metrics import bfs_distances


@dataclass(frozen=True)
class ForbiddenWitness:
    """A concrete 3- or 4-cycle: consecutive vertices (cyclically) are adjacent."""

    kind: str  # "triangle" or "c4"
    vertices: tuple[int, ...]

    def validates_against(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


class C4FreeRequiredError(ValueError):
    """Raised when a C4-free precondition fails; carries the offending cycle."""

    def __init__(self, witness: ForbiddenWitness):
        self.witness = witness
        super().__init__(f"graph contains a 4-cycle {witness.vertices}")


def find_triangle(g: Graph) -> ForbiddenWitness | None:
    """First triangle under the ascending scan order, or None if triangle-free."""
    nbr_sets = [set(nbrs) for nbrs in g.adjacency]
    for u in range(g.order):
        for v in g.neighbors(u):
            if v <= u:
                continue
            common = nbr_sets[u] & nbr_sets[v]
            best = None
            for w in common:
                if w > v and (best is None or w < best):
                    best = w
            if best is not None:
                return ForbiddenWitness("triangle", (u, v, best))
    return None


def find_c4(g: Graph) -> ForbiddenWitness | None:
    """First 4-cycle found by common-neighbor counting, or None if C4-free.

    A pair with two common neighbors closes a 4-cycle; scanning midpoints in
    ascending order keeps the witness deterministic and exits early.
    """
    first_mid: dict[tuple[int, int], int] = {}
    for w in range(g.order):
        nbrs = g.neighbors(w)
        for ai in range(len(nbrs)):
            for bi in range(ai + 1, len(nbrs)):
                pair = (nbrs[ai], nbrs[bi])
                other = first_mid.get(pair)
                if other is None:
                    first_mid[pair] = w
                else:
                    return ForbiddenWitness("c4", (pair[0], other, pair[1], w))
    return None


def ball2_size(g: Graph, v: VertexId) -> int:
    """Number of vertices at distance at most 2 from v, counting v itself."""
    ball = {v}
    for w in g.neighbors(v):
        ball.add(w)
        ball.update(g.neighbors(w))
    return len(ball)


@dataclass(frozen=True)
class BallLemmaReport:
    """Outcome of the per-vertex second-neighborhood bound on a C4-free graph."""

    min_degree: int
    bound: int
    min_ball: int
    min_ball_vertex: int
    slack: int
    holds: bool


def ball_bound(delta: int) -> int:
    """The guaranteed minimum size of a distance-2 ball in a C4-free graph."""
    return delta * delta - 2 * (delta // 2) + 1


def check_epp_lemma(g: Graph) -> BallLemmaReport:
    """Check |N_<=2(v)| >= delta^2 - 2*floor(delta/2) + 1 for every vertex.

    The graph must be connected and C4-free; a 4-cycle is reported as an
    error carrying the witness. The report records the smallest ball and its
    slack against the bound.
    """
    witness = find_c4(g)
    if witness is not None:
        raise C4FreeRequiredError(witness)
    if not is_connected(g):
        # name a vertex unreachable from 0 for the error message
        bfs_distances(g, 0)
    delta = min_degree(g)
    bound = ball_bound(delta)
    min_ball = g.order + 1
    argmin = -1
    for v in range(g.order):
        size = ball2_size(g, v)
        if size < min_ball:
            min_ball = size
            argmin = v
    return BallLemmaReport(
        min_degree=delta,
        bound=bound,
        min_ball=min_ball,
        min_ball_vertex=argmin,
        slack=min_ball - bound,
        holds=min_ball >= bound,
    )

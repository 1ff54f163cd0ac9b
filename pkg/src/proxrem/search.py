"""Exhaustive small-graph enumeration, a brute-force distance oracle, and
corpus scanning against the bounds catalog.

Enumeration produces one representative per isomorphism class of connected
graphs by extending smaller graphs one vertex at a time and rejecting
duplicates via a canonical form. Intermediate graphs are kept as tuples of
neighbor bitmasks; Graph objects are materialised only when yielded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import graph6
from .bounds import all_check_ids, check_graph
from .graph import Graph, is_connected

MAX_ENUM_ORDER = 9

_FILTERS = ("all", "triangle_free", "c4_free", "both")

Rows = tuple[int, ...]


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def _refine_colors(rows: Rows) -> list[int]:
    """Iterated neighborhood refinement; colors are canonical integers."""
    n = len(rows)
    degs = [bin(r).count("1") for r in rows]
    palette = {d: i for i, d in enumerate(sorted(set(degs)))}
    colors = [palette[d] for d in degs]
    while True:
        keys = []
        for v in range(n):
            sig = []
            m = rows[v]
            while m:
                low = m & -m
                sig.append(colors[low.bit_length() - 1])
                m ^= low
            sig.sort()
            keys.append((colors[v], tuple(sig)))
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [rank[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def canonical_rows(rows: Rows) -> bytes:
    """Canonical certificate of a bitmask adjacency, equal across isomorphs.

    The certificate is the lexicographically smallest upper-triangle
    bit-string over all vertex orderings that respect the refinement
    partition (cells placed in canonical color order). Restricting to
    refinement-compatible orderings keeps the search small while remaining a
    complete isomorphism invariant: the certificate still encodes the whole
    adjacency matrix.
    """
    n = len(rows)
    if n > 32:
        raise ValueError(f"canonical forms are supported for order <= 32, got {n}")
    if n == 1:
        return bytes([1])
    colors = _refine_colors(rows)
    color_sequence = sorted(colors)
    # Search states: (used vertex mask, per-vertex adjacency signature to the
    # placed prefix, earliest-placed vertex in the most significant bit).
    # Keeping every state that attains the minimal chunk prefix makes the
    # minimisation exact; deduplication caps the blowup on symmetric graphs.
    frontier: set[tuple[int, Rows]] = {(0, (0,) * n)}
    chunks: list[int] = []
    for depth in range(n):
        required = color_sequence[depth]
        best: int | None = None
        nxt: set[tuple[int, Rows]] = set()
        for used, sigs in frontier:
            for u in range(n):
                if used >> u & 1 or colors[u] != required:
                    continue
                chunk = sigs[u]
                if best is None or chunk < best:
                    best = chunk
                    nxt = set()
                elif chunk != best:
                    continue
                nused = used | (1 << u)
                row = rows[u]
                nsigs = tuple(
                    0 if nused >> w & 1 else (sigs[w] << 1) | (row >> w & 1)
                    for w in range(n)
                )
                nxt.add((nused, nsigs))
        assert best is not None
        chunks.append(best)
        frontier = nxt
    # position j contributes j bits; pack the whole upper triangle
    bits = 0
    for j, chunk in enumerate(chunks):
        bits = (bits << j) | chunk
    nbits = n * (n - 1) // 2
    return bytes([n]) + bits.to_bytes((nbits + 7) // 8, "big")


def canonical_form(g: Graph) -> bytes:
    """Canonical certificate of a Graph; equal iff the graphs are isomorphic."""
    rows = tuple(sum(1 << w for w in nbrs) for nbrs in g.adjacency)
    return canonical_rows(rows)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _extension_ok(rows: Rows, mask: int, filt: str) -> bool:
    """Would attaching a new vertex with this neighbor mask keep the filter?

    Only cycles through the new vertex can appear, so a new triangle needs an
    edge inside the mask and a new 4-cycle needs two mask vertices with a
    common neighbor.
    """
    check_tri = filt in ("triangle_free", "both")
    check_c4 = filt in ("c4_free", "both")
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        m ^= low
        if check_tri and rows[i] & mask:
            return False
        if check_c4:
            rest = m
            while rest:
                low2 = rest & -rest
                j = low2.bit_length() - 1
                rest ^= low2
                if rows[i] & rows[j]:
                    return False
    return True


def _rows_to_graph(rows: Rows) -> Graph:
    return Graph(
        tuple(tuple(w for w in range(len(rows)) if r >> w & 1) for r in rows),
        _trusted=True,
    )


def enumerate_connected(n: int, filter: str = "all") -> Iterator[Graph]:
    """Yield one representative per isomorphism class of connected graphs.

    Supported orders are 2..9 (larger corpora must be supplied externally as
    graph6 files). Filters prune during extension: a graph containing a
    triangle is never extended when filtering triangle-free graphs, which
    subgraph monotonicity makes safe.
    """
    if filter not in _FILTERS:
        raise ValueError(f"unknown filter {filter!r}; expected one of {_FILTERS}")
    if not 2 <= n <= MAX_ENUM_ORDER:
        raise ValueError(
            f"built-in enumeration supports 2 <= n <= {MAX_ENUM_ORDER}, got {n}; "
            "supply larger corpora as graph6 files"
        )
    level: list[Rows] = [(0,)]
    for k in range(1, n):
        seen: dict[bytes, Rows] = {}
        for rows in level:
            full = 1 << k
            for mask in range(1, full):
                if filter != "all" and not _extension_ok(rows, mask, filter):
                    continue
                child = tuple(
                    rows[i] | (1 << k) if mask >> i & 1 else rows[i] for i in range(k)
                ) + (mask,)
                cert = canonical_rows(child)
                if cert not in seen:
                    seen[cert] = child
        level = list(seen.values())
    for rows in level:
        yield _rows_to_graph(rows)


# ---------------------------------------------------------------------------
# Brute-force all-pairs oracle
# ---------------------------------------------------------------------------

MAX_ORACLE_ORDER = 256


def oracle_apsp(g: Graph) -> np.ndarray:
    """All-pairs distances by Floyd-Warshall over a dense matrix.

    Independent of the BFS path on purpose; meant for cross-checking in
    tests, and capped at order 256.
    """
    n = g.order
    if n > MAX_ORACLE_ORDER:
        raise ValueError(f"oracle supports order <= {MAX_ORACLE_ORDER}, got {n}")
    inf = np.iinfo(np.int32).max // 2
    dist = np.full((n, n), inf, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    for u, v in g.edges():
        dist[u, v] = 1
        dist[v, u] = 1
    for k in range(n):
        np.minimum(dist, dist[:, k, None] + dist[None, k, :], out=dist)
    if int(dist.max()) >= inf // 2:
        u, v = np.argwhere(dist >= inf // 2)[0]
        raise ValueError(f"graph is disconnected: no path between {u} and {v}")
    return dist


# ---------------------------------------------------------------------------
# Corpus scanning
# ---------------------------------------------------------------------------


@dataclass
class BoundScanStats:
    """Aggregate of one bound over a corpus; tight and extreme cases carry
    graph6 witnesses so they can be re-verified."""

    applicable: int = 0
    violations: int = 0
    violation_witnesses: list[str] = field(default_factory=list)
    tight_cases: list[str] = field(default_factory=list)
    min_slack: Fraction | None = None
    min_slack_witness: str | None = None


@dataclass
class ScanSummary:
    corpus: str
    scanned: int = 0
    skipped_disconnected: int = 0
    per_bound: dict[str, BoundScanStats] = field(default_factory=dict)

    @property
    def total_violations(self) -> int:
        return sum(s.violations for s in self.per_bound.values())


_WITNESS_CAP = 1000


def scan(
    corpus: Iterable[Graph],
    ids: Sequence[str] | None = None,
    description: str = "corpus",
) -> ScanSummary:
    """Run check_graph over a corpus and aggregate per-bound statistics.

    Disconnected corpus entries are counted and skipped, not errors; external
    files may contain them. Any applicable-and-violated bound is recorded
    with its witness; the caller decides how loudly to fail.
    """
    wanted = list(ids) if ids is not None else list(all_check_ids())
    summary = ScanSummary(corpus=description)
    for bound_id in wanted:
        summary.per_bound[bound_id] = BoundScanStats()
    for g in corpus:
        if not is_connected(g):
            summary.skipped_disconnected += 1
            continue
        summary.scanned += 1
        results = check_graph(g, wanted)
        encoded: str | None = None
        for result in results:
            if not result.applicable:
                continue
            stats = summary.per_bound[result.bound_id]
            stats.applicable += 1
            if encoded is None:
                encoded = graph6.emit_graph6(g)
            if not result.holds:
                stats.violations += 1
                if len(stats.violation_witnesses) < _WITNESS_CAP:
                    stats.violation_witnesses.append(encoded)
            if result.tight and len(stats.tight_cases) < _WITNESS_CAP:
                stats.tight_cases.append(encoded)
            if stats.min_slack is None or result.slack < stats.min_slack:
                stats.min_slack = result.slack
                stats.min_slack_witness = encoded
    return summary


def format_scan_summary(summary: ScanSummary) -> str:
    lines = [
        f"corpus: {summary.corpus}",
        f"graphs scanned: {summary.scanned}"
        + (
            f" (skipped {summary.skipped_disconnected} disconnected)"
            if summary.skipped_disconnected
            else ""
        ),
    ]
    for bound_id, stats in summary.per_bound.items():
        if stats.applicable == 0:
            lines.append(f"  {bound_id}: not applicable to any graph")
            continue
        part = (
            f"  {bound_id}: applicable {stats.applicable}, violations {stats.violations}, "
            f"tight {len(stats.tight_cases)}"
        )
        if stats.min_slack is not None:
            part += f", min slack {stats.min_slack} at {stats.min_slack_witness}"
        lines.append(part)
        if stats.tight_cases:
            lines.append(f"    tight cases: {' '.join(stats.tight_cases[:20])}")
        if stats.violation_witnesses:
            lines.append(f"    VIOLATIONS: {' '.join(stats.violation_witnesses[:20])}")
    return "\n".join(lines)

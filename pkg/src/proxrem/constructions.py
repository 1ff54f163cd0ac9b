"""Extremal graph families: the layered triangle-free family and the
punctured polarity-graph family over GF(q).

Every constructor validates its advertised invariants (order, minimum
degree, forbidden subgraphs, diameter, radius) before returning; a failed
claim raises ConstructionError rather than handing back an unvalidated
graph. Vertex numbering is documented per family so tests can address
specific vertices.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import forbidden
from .fields import FieldSpec, make_field
from .graph import (
    Graph,
    add_twins,
    basic_generator,
    disjoint_union_with_links,
    is_connected,
    min_degree,
    sequential_sum,
)
from .metrics import bfs_distances, invariant_report


class ConstructionError(RuntimeError):
    """A constructed graph failed one of its validated claims."""


def _claim(condition: bool, family: str, message: str) -> None:
    if not condition:
        raise ConstructionError(f"{family}: {message}")


# ---------------------------------------------------------------------------
# Layered triangle-free family
# ---------------------------------------------------------------------------


def layered_sizes(delta: int, k: int) -> list[int]:
    """Layer sizes of the layered family: a singleton cap at each end backed by
    a size-delta layer, with k-2 interior blocks of two (delta-1)-layers
    between singleton separators."""
    head = [1, delta, delta - 1, 1]
    mid = [1, delta - 1, delta - 1, 1] * (k - 2)
    tail = [1, delta - 1, delta, 1]
    return head + mid + tail


def layered_extremal(delta: int, k: int) -> Graph:
    """Build the layered triangle-free graph with minimum degree delta.

    Vertices are numbered layer by layer (layer 0 is vertex 0). For even k
    the graph is validated to have order 2*k*delta + 2, minimum degree delta,
    diameter 4k - 1 and radius 2k; odd k builds the same layer structure but
    only the structural claims are enforced.
    """
    if delta < 3:
        raise ConstructionError(f"layered family needs delta >= 3, got {delta}")
    if k < 2:
        raise ConstructionError(f"layered family needs k >= 2, got {k}")
    if k % 2:
        warnings.warn(
            f"layered family with odd k={k}: diameter/radius formulas assume even k "
            "and are not enforced",
            stacklevel=2,
        )
    g, _ = sequential_sum(layered_sizes(delta, k))
    name = f"layered(delta={delta}, k={k})"
    _claim(g.order == 2 * k * delta + 2, name, f"order {g.order} != {2 * k * delta + 2}")
    _claim(is_connected(g), name, "graph is not connected")
    _claim(min_degree(g) == delta, name, f"minimum degree {min_degree(g)} != {delta}")
    tri = forbidden.find_triangle(g)
    _claim(tri is None, name, f"triangle {tri.vertices if tri else None} found")
    if k % 2 == 0:
        report = invariant_report(g)
        _claim(report.diameter == 4 * k - 1, name, f"diameter {report.diameter} != {4 * k - 1}")
        _claim(report.radius == 2 * k, name, f"radius {report.radius} != {2 * k}")
    return g


def layered_extremal_padded(delta: int, k: int, n: int) -> Graph:
    """Layered family padded to order n with twins of a median's neighbor.

    New vertices are appended after the base graph's and are twins of w, the
    lowest-index neighbor of the lowest-index median vertex u. Padding leaves
    the diameter, the radius, and u's median status intact, which is
    validated here.
    """
    base = layered_extremal(delta, k)
    n0 = base.order
    if n < n0:
        raise ConstructionError(f"target order {n} is below the base order {n0}")
    base_report = invariant_report(base)
    u = base_report.median_vertices[0]
    w = base.neighbors(u)[0]
    g = add_twins(base, w, n - n0)
    name = f"layered-padded(delta={delta}, k={k}, n={n})"
    _claim(g.order == n, name, f"order {g.order} != {n}")
    _claim(min_degree(g) == delta, name, f"minimum degree {min_degree(g)} != {delta}")
    tri = forbidden.find_triangle(g)
    _claim(tri is None, name, f"triangle {tri.vertices if tri else None} found")
    if k % 2 == 0:
        report = invariant_report(g)
        _claim(report.diameter == base_report.diameter, name, "padding changed the diameter")
        _claim(report.radius == base_report.radius, name, "padding changed the radius")
        _claim(u in report.median_vertices, name, f"vertex {u} is no longer a median")
        expected = base_report.total_distance[u] + (n - n0)
        _claim(
            report.total_distance[u] == expected,
            name,
            f"sigma({u}) = {report.total_distance[u]} != {expected}",
        )
    return g


# ---------------------------------------------------------------------------
# Polarity-graph family over GF(q)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """A 1-dimensional subspace of GF(q)^3, normalized so the first nonzero
    coordinate is 1. Two triples span the same subspace iff their normal
    forms are equal."""

    coords: tuple[int, int, int]


def normalize_point(f: FieldSpec, coords: tuple[int, int, int]) -> ProjectivePoint:
    if all(c == 0 for c in coords):
        raise ValueError("the zero vector spans no projective point")
    lead = next(c for c in coords if c != 0)
    scale = f.inv(lead)
    return ProjectivePoint(tuple(f.mul(scale, c) for c in coords))  # type: ignore[arg-type]


def projective_points(f: FieldSpec) -> list[ProjectivePoint]:
    """All q^2 + q + 1 normalized points, sorted; list index = vertex id."""
    q = f.q
    pts = [ProjectivePoint((0, 0, 1))]
    pts += [ProjectivePoint((0, 1, z)) for z in range(q)]
    pts += [ProjectivePoint((1, y, z)) for y in range(q) for z in range(q)]
    return sorted(pts)


def is_isotropic(f: FieldSpec, pt: ProjectivePoint) -> bool:
    """A point is isotropic (self-orthogonal) iff it lies on its own polar line."""
    return f.dot3(pt.coords, pt.coords) == 0


def polarity_graph(f: FieldSpec) -> Graph:
    """Orthogonality graph on the projective points of GF(q)^3.

    Distinct points are adjacent iff their standard dot product vanishes.
    Validated: isotropic points (exactly q+1 of them) have degree q, all
    others degree q+1, and the graph contains no 4-cycle.
    """
    q = f.q
    pts = projective_points(f)
    n = len(pts)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        ci = pts[i].coords
        for j in range(i + 1, n):
            if f.dot3(ci, pts[j].coords) == 0:
                adj[i].append(j)
                adj[j].append(i)
    g = Graph([sorted(a) for a in adj], _trusted=True)
    name = f"polarity(q={q})"
    _claim(n == q * q + q + 1, name, f"point count {n} != {q * q + q + 1}")
    isotropic = {i for i in range(n) if is_isotropic(f, pts[i])}
    _claim(len(isotropic) == q + 1, name, f"{len(isotropic)} isotropic points, expected {q + 1}")
    for i in range(n):
        want = q if i in isotropic else q + 1
        _claim(g.degree(i) == want, name, f"vertex {i} has degree {g.degree(i)}, expected {want}")
    c4 = forbidden.find_c4(g)
    _claim(c4 is None, name, f"4-cycle {c4.vertices if c4 else None} found")
    return g


@dataclass(frozen=True)
class PuncturedPolarity:
    """The polarity graph with one isotropic vertex and one matching removed.

    ``graph`` is the punctured graph; ``u``/``v`` index its designated
    low-degree endpoints (used as chain attachment points). The removed
    vertex and matching are recorded in the numbering of the unpunctured
    polarity graph.
    """

    graph: Graph
    u: int
    v: int
    removed_vertex: int
    removed_vertex_point: ProjectivePoint
    removed_matching: tuple[tuple[int, int], ...]


def puncture(f: FieldSpec) -> PuncturedPolarity:
    """Remove an isotropic vertex z and the matching between its designated
    neighbors' neighborhoods.

    z is the lexicographically smallest isotropic point; u and v are the
    first (by index pair) non-isotropic, mutually non-adjacent neighbors of
    z. Validated for q >= 3: order q^2 + q, minimum degree q - 1, the
    removed edges formed a perfect matching, d(u, v) >= 4, and diameter
    exactly 4. q = 2 still builds but its claims are skipped (the punctured
    graph degenerates).
    """
    q = f.q
    name = f"puncture(q={q})"
    hq = polarity_graph(f)
    pts = projective_points(f)
    isotropic = [i for i in range(hq.order) if is_isotropic(f, pts[i])]
    _claim(bool(isotropic), name, "no isotropic point")
    z = min(isotropic)
    candidates = [w for w in hq.neighbors(z) if not is_isotropic(f, pts[w])]
    pair = None
    for a_pos in range(len(candidates)):
        for b_pos in range(a_pos + 1, len(candidates)):
            if not hq.has_edge(candidates[a_pos], candidates[b_pos]):
                pair = (candidates[a_pos], candidates[b_pos])
                break
        if pair:
            break
    _claim(pair is not None, name, "no non-adjacent pair of non-isotropic neighbors of z")
    u0, v0 = pair
    side_u = set(hq.neighbors(u0)) - {z}
    side_v = set(hq.neighbors(v0)) - {z}
    matching = tuple(
        sorted((a, b) for a in side_u for b in side_v if hq.has_edge(a, b))
    )
    touched_u = [a for a, _ in matching]
    touched_v = [b for _, b in matching]
    _claim(
        len(matching) == len(side_u) == len(side_v)
        and len(set(touched_u)) == len(matching)
        and len(set(touched_v)) == len(matching)
        and set(touched_u) == side_u
        and set(touched_v) == side_v,
        name,
        "edges between N(u)-z and N(v)-z do not form a perfect matching",
    )

    keep = [i for i in range(hq.order) if i != z]
    remap = {old: new for new, old in enumerate(keep)}
    # matching pairs are (u-side, v-side); normalize for the removal test
    dropped = {(a, b) if a < b else (b, a) for a, b in matching}
    adj: list[list[int]] = [[] for _ in keep]
    for old in keep:
        for w in hq.neighbors(old):
            if w == z:
                continue
            e = (old, w) if old < w else (w, old)
            if e in dropped:
                continue
            adj[remap[old]].append(remap[w])
    graph = Graph([sorted(a) for a in adj], _trusted=True)
    u, v = remap[u0], remap[v0]

    if q == 2:
        warnings.warn(
            "puncture(q=2) degenerates (minimum degree 1, graph may be disconnected); "
            "its claims are not enforced",
            stacklevel=2,
        )
    else:
        _claim(graph.order == q * q + q, name, f"order {graph.order} != {q * q + q}")
        _claim(is_connected(graph), name, "punctured graph is not connected")
        _claim(min_degree(graph) == q - 1, name, f"minimum degree {min_degree(graph)} != {q - 1}")
        report = invariant_report(graph)
        dists = bfs_distances(graph, u)
        _claim(dists[v] >= 4, name, f"d(u, v) = {dists[v]} < 4")
        _claim(report.diameter == 4, name, f"diameter {report.diameter} != 4")
        c4 = forbidden.find_c4(graph)
        _claim(c4 is None, name, f"4-cycle {c4.vertices if c4 else None} found")
    return PuncturedPolarity(
        graph=graph,
        u=u,
        v=v,
        removed_vertex=z,
        removed_vertex_point=pts[z],
        removed_matching=matching,
    )


def chain(f: FieldSpec, k: int) -> Graph:
    """Path of k punctured polarity graphs bridged at the designated endpoints.

    Copy i occupies vertices [i * (q^2+q), (i+1) * (q^2+q)); the bridge edges
    join copy i's v to copy i+1's u. Validated: order k*(q^2+q), minimum
    degree q-1, no 4-cycle; for even k, diameter 5k-1 and radius 5k/2.
    """
    if k < 2:
        raise ConstructionError(f"chain needs k >= 2, got {k}")
    q = f.q
    punct = puncture(f)
    parts = [punct.graph] * k
    links = [(i, punct.v, i + 1, punct.u) for i in range(k - 1)]
    g, _ = disjoint_union_with_links(parts, links)
    name = f"chain(q={q}, k={k})"
    _claim(g.order == k * (q * q + q), name, f"order {g.order} != {k * (q * q + q)}")
    _claim(is_connected(g), name, "chain is not connected")
    expected_delta = q - 1 if q >= 3 else min_degree(g)
    _claim(min_degree(g) == expected_delta, name, f"minimum degree {min_degree(g)} != {expected_delta}")
    c4 = forbidden.find_c4(g)
    _claim(c4 is None, name, f"4-cycle {c4.vertices if c4 else None} found")
    if k % 2 == 0 and q >= 3:
        report = invariant_report(g)
        _claim(report.diameter == 5 * k - 1, name, f"diameter {report.diameter} != {5 * k - 1}")
        _claim(report.radius == 5 * k // 2, name, f"radius {report.radius} != {5 * k // 2}")
    return g


# ---------------------------------------------------------------------------
# Family dispatch for the command-line surface
# ---------------------------------------------------------------------------

FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "layered": ("delta", "k"),
    "layered-padded": ("delta", "k", "n"),
    "polarity": ("q",),
    "puncture": ("q",),
    "chain": ("q", "k"),
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
}


def build_family(family: str, **params: int) -> tuple[Graph, list[str]]:
    """Build a named family member and return it with validation notes.

    Notes record the claims that were checked during construction, plus the
    closed-form reconciliation for the layered family (measured median and
    margin total distances against their quadratic closed forms).
    """
    wanted = FAMILY_PARAMS.get(family)
    if wanted is None:
        raise ConstructionError(f"unknown family {family!r}; expected one of {sorted(FAMILY_PARAMS)}")
    missing = [p for p in wanted if params.get(p) is None]
    if missing:
        raise ConstructionError(f"family {family!r} needs parameters {missing}")
    extra = [p for p, value in params.items() if value is not None and p not in wanted]
    if extra:
        raise ConstructionError(f"family {family!r} does not take parameters {extra}")

    notes: list[str] = []
    if family in ("path", "cycle", "complete"):
        g = basic_generator(family, params["n"])
        notes.append(f"{family} on {g.order} vertices, {g.edge_count} edges")
        return g, notes

    if family == "polarity":
        f = make_field(params["q"])
        g = polarity_graph(f)
        notes.append(f"validated: order q^2+q+1 = {g.order}, degree split q/q+1, C4-free")
        return g, notes

    if family == "puncture":
        f = make_field(params["q"])
        punct = puncture(f)
        g = punct.graph
        notes.append(
            f"validated: order q^2+q = {g.order}, min degree {min_degree(g)}, diameter 4, "
            f"C4-free; removed vertex {punct.removed_vertex} and a {len(punct.removed_matching)}-edge matching"
        )
        notes.append(f"designated endpoints u={punct.u}, v={punct.v}")
        return g, notes

    if family == "chain":
        f = make_field(params["q"])
        k = params["k"]
        g = chain(f, k)
        notes.append(f"validated: order k(q^2+q) = {g.order}, min degree {min_degree(g)}, C4-free")
        if k % 2 == 0 and f.q >= 3:
            notes.append(f"validated: diameter {5 * k - 1}, radius {5 * k // 2}")
        return g, notes

    delta, k = params["delta"], params["k"]
    if family == "layered":
        g = layered_extremal(delta, k)
        padding = 0
    else:
        g = layered_extremal_padded(delta, k, params["n"])
        padding = g.order - (2 * k * delta + 2)
    notes.append(
        f"validated: order {g.order}, min degree {delta}, triangle-free"
        + (f", diameter {4 * k - 1}, radius {2 * k}" if k % 2 == 0 else "")
    )
    notes.extend(_layered_closed_form_notes(g, delta, k, padding))
    return g, notes


def _layered_closed_form_notes(g: Graph, delta: int, k: int, padding: int) -> list[str]:
    report = invariant_report(g)
    measured_median = min(report.total_distance)
    median_formula = 2 * delta * k * k + 4 * k - 3 + padding
    notes = [
        f"median total distance {measured_median} "
        f"(closed form {median_formula}, discrepancy {measured_median - median_formula})"
    ]
    if padding == 0:
        measured_margin = max(report.total_distance)
        margin_formula = Fraction(2 * delta * k + 2) * Fraction(4 * k - 1, 2)
        notes.append(
            f"margin total distance {measured_margin} "
            f"(closed form {margin_formula}, discrepancy {Fraction(measured_margin) - margin_formula})"
        )
    return notes

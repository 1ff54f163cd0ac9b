"""graph6 and edge-list serialization.

graph6 packs the upper triangle of the adjacency matrix in column-major pair
order (0,1),(0,2),(1,2),(0,3),... at 6 bits per printable byte, offset by 63.
Orders up to 62 use a single size byte; 63..258047 use '~' plus three bytes.
The triple-extended size form is not supported here.

Multi-graph files hold one graph per line; lines starting with '#' are
comments. Edge-list text is a 'n m' header followed by m 'u v' lines.
"""

from __future__ import annotations

import os
from typing import Iterator

from .graph import Graph, from_edge_list

_OFFSET = 63
_MAX_SHORT = 62
_MAX_LONG = 258047


class Graph6Error(ValueError):
    """Raised for malformed graph6 input."""


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (order, bytes consumed by the size prefix)."""
    if not data:
        raise Graph6Error("empty graph6 line")
    first = data[0]
    if first != 126:  # '~'
        return first - _OFFSET, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error("triple-extended graph6 sizes (orders above 258047) are not supported")
    if len(data) < 4:
        raise Graph6Error("truncated long-form graph6 size")
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - _OFFSET)
    return n, 4


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line into a Graph."""
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    for pos, byte in enumerate(data):
        if not _OFFSET <= byte <= 126:
            raise Graph6Error(f"byte {byte} at position {pos} outside the graph6 range [63, 126]")
    n, consumed = _decode_size(data)
    if n < 1:
        raise Graph6Error(f"decoded order {n} is not a valid graph order")
    nbits = n * (n - 1) // 2
    body = data[consumed:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"graph6 body for order {n} needs {expected} bytes, got {len(body)}"
        )
    bits = 0
    for byte in body:
        bits = (bits << 6) | (byte - _OFFSET)
    pad = 6 * expected - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits in graph6 body")
    bits >>= pad
    edges = []
    index = nbits
    for col in range(1, n):
        for row in range(col):
            index -= 1
            if bits >> index & 1:
                edges.append((row, col))
    return from_edge_list(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (no trailing newline)."""
    n = g.order
    if n > _MAX_LONG:
        raise Graph6Error(f"order {n} exceeds the supported graph6 maximum {_MAX_LONG}")
    if n <= _MAX_SHORT:
        prefix = [n + _OFFSET]
    else:
        prefix = [126, (n >> 12 & 63) + _OFFSET, (n >> 6 & 63) + _OFFSET, (n & 63) + _OFFSET]
    nbits = n * (n - 1) // 2
    bits = 0
    for col in range(1, n):
        row_bits = g.neighbors(col)
        nbrs = set(row_bits)
        for row in range(col):
            bits = (bits << 1) | (1 if row in nbrs else 0)
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    body = [(bits >> (6 * (nbytes - 1 - i))) & 63 for i in range(nbytes)]
    return bytes(prefix + [b + _OFFSET for b in body]).decode("ascii")


def iter_graph6_file(path: str | os.PathLike) -> Iterator[Graph]:
    """Yield graphs from a one-per-line graph6 file, skipping comments and blanks."""
    with open(path, "r", encoding="ascii") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield parse_graph6(line)


def write_graph6_file(path: str | os.PathLike, graphs) -> int:
    """Write graphs one per line; returns the number written."""
    count = 0
    with open(path, "w", encoding="ascii") as handle:
        for g in graphs:
            handle.write(emit_graph6(g) + "\n")
            count += 1
    return count


def parse_edge_list_text(text: str) -> Graph:
    """Parse 'n m' header plus m 'u v' lines (comments and blanks ignored)."""
    tokens: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    if len(tokens) < 2:
        raise Graph6Error("edge-list text needs an 'n m' header")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise Graph6Error(f"edge-list text contains a non-integer token: {exc}") from None
    n, m = values[0], values[1]
    if len(values) != 2 + 2 * m:
        raise Graph6Error(f"edge-list header promises {m} edges but {len(values) - 2} values follow")
    pairs = [(values[2 + 2 * i], values[3 + 2 * i]) for i in range(m)]
    return from_edge_list(n, pairs)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_graphs(path: str | os.PathLike) -> list[Graph]:
    """Read a graph file, sniffing the format.

    ASCII digits fall below the graph6 byte range [63, 126], so a first
    content line made of two integers can only be an edge-list header; the
    sniff is unambiguous.
    """
    with open(path, "r", encoding="ascii") as handle:
        text = handle.read()
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return [parse_edge_list_text(text)]
    graphs = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        graphs.append(parse_graph6(line))
    return graphs

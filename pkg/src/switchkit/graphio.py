"""graph6 and edge-list text I/O.

graph6 per the standard format description: optional ">>graph6<<" header,
N(n) in 1 byte for n <= 62 or 4 bytes (126 prefix) up to 258047, then the
upper triangle packed column by column into 6-bit groups offset by 63.
"""

from __future__ import annotations

from .errors import MalformedGraph6
from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def _upper_triangle_pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = chr(126) + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    else:
        raise MalformedGraph6(f"n={n} beyond graph6 small-format range")
    bits = []
    for i, j in _upper_triangle_pairs(n):
        bits.append(g.has_edge(i, j))
    out = [prefix]
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [False] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | int(b)
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :].strip()
    if not s:
        raise MalformedGraph6("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise MalformedGraph6("characters outside graph6 alphabet")
    if data[0] == 63:
        if len(data) < 4:
            raise MalformedGraph6("truncated extended vertex count")
        if data[1] == 63:
            raise MalformedGraph6("graph6 large-format (>258047 vertices) unsupported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise MalformedGraph6(f"n={n} beyond supported maximum {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"body length {len(body)} does not match n={n} (want {(nbits + 5) // 6})"
        )
    bits = []
    for d in body:
        for shift in range(5, -1, -1):
            bits.append(d >> shift & 1)
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    rows = [0] * n
    for (i, j), b in zip(_upper_triangle_pairs(n), bits):
        if b:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("edge list needs a 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    nums = tokens[2:]
    if len(nums) != 2 * m:
        raise ValueError(f"expected {2 * m} endpoints, got {len(nums)}")
    edges = [(int(nums[2 * k]), int(nums[2 * k + 1])) for k in range(m)]
    return Graph.from_edges(n, edges)

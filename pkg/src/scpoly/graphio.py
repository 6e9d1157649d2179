"""graph6 and edge-list encodings.

graph6 (orders up to 62): one byte ``n + 63``, then the upper triangle read
column by column, ``(0,1), (0,2), (1,2), (0,3), ...``, zero-padded to a
multiple of six bits, each 6-bit group (MSB first) written as ``group + 63``.

Edge lists: ``"n; u v; u v; ..."`` with 0-based labels; semicolons and any
whitespace are interchangeable separators.
"""
from __future__ import annotations

import re

from .errors import GraphFormatError
from .graph import Graph

HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise GraphFormatError(f"graph6 encoder supports order <= 62, got {n}")
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise GraphFormatError(f"graph6 token {s[0]!r}: orders above 62 are not supported")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise GraphFormatError(f"graph6 {s!r}: expected {nbytes} data bytes for order {n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[npairs:]):
        raise GraphFormatError(f"graph6 {s!r}: nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "; ".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])


def from_edge_list(text: str) -> Graph:
    tokens = [t for t in re.split(r"[\s;]+", text.strip()) if t]
    if not tokens:
        raise GraphFormatError("empty edge list")
    nums = []
    for t in tokens:
        if not t.isdigit():
            raise GraphFormatError(f"edge list token {t!r} is not a nonnegative integer")
        nums.append(int(t))
    n, rest = nums[0], nums[1:]
    if len(rest) % 2:
        raise GraphFormatError(f"edge list has a dangling endpoint {tokens[-1]!r}")
    edges = []
    for k in range(0, len(rest), 2):
        u, v = rest[k], rest[k + 1]
        if u >= n or v >= n:
            bad = tokens[1 + k] if u >= n else tokens[2 + k]
            raise GraphFormatError(f"edge list label {bad!r} out of range for order {n}")
        if u == v:
            raise GraphFormatError(f"edge list token {tokens[1 + k]!r}: loops are not allowed")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse either format; edge lists start with a digit, graph6 never does."""
    s = text.strip()
    if not s:
        raise GraphFormatError("no graph given")
    if s[0].isdigit():
        return from_edge_list(s)
    return from_graph6(s.split()[0])

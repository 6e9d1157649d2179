"""Simple undirected graphs stored as adjacency-row bitsets.

Vertices are the labels ``0..n-1``; ``adj[v]`` has bit ``u`` set iff ``u`` and
``v`` are adjacent.  Every operation returns a new graph; removing vertices
relabels the survivors in ascending order of their old labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidSubsetError, LabelError


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError(f"negative order {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise LabelError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    def check(self) -> None:
        """Raise ``ValueError`` if the adjacency rows are not a simple graph."""
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond order")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge ({v}, {u})")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v]) if u < v]

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_complete(self) -> bool:
        full = self.vertex_mask
        return all(row | (1 << v) == full for v, row in enumerate(self.adj))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << pos[u]
            rows.append(row)
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_label(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise LabelError(f"vertex {v} out of range for order {g.n}")


def induced_subgraph(g: Graph, subset: int) -> Graph:
    """``G[X]`` for the bitmask ``subset``, relabeled in ascending order."""
    if subset < 0 or subset >> g.n:
        raise InvalidSubsetError(f"subset {subset:#b} has bits at or above order {g.n}")
    verts = list(_bits(subset))
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in _bits(g.adj[v] & subset):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(verts), tuple(rows))


def count_components(adj: Sequence[int], mask: int) -> int:
    """Components of the subgraph induced by ``mask`` on adjacency rows ``adj``."""
    count = 0
    while mask:
        seen = mask & -mask
        frontier = seen
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= adj[low.bit_length() - 1]
                f ^= low
            frontier = reach & mask & ~seen
            seen |= frontier
        mask &= ~seen
        count += 1
    return count


def component_masks(g: Graph) -> list[int]:
    out = []
    mask = g.vertex_mask
    adj = g.adj
    while mask:
        seen = mask & -mask
        frontier = seen
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= adj[v]
            frontier = reach & mask & ~seen
            seen |= frontier
        mask &= ~seen
        out.append(seen)
    return out


def component_count(g: Graph) -> int:
    return count_components(g.adj, g.vertex_mask)


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_label(g, v)
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


def extract_closed_neighborhood(g: Graph, v: int) -> Graph:
    """``G - N[v]``."""
    _check_label(g, v)
    return induced_subgraph(g, g.vertex_mask & ~(g.adj[v] | 1 << v))


def contract_vertex(g: Graph, v: int) -> Graph:
    """``G / v``: drop ``v`` and make its neighbourhood a clique."""
    _check_label(g, v)
    nbhd = g.adj[v]
    rows = list(g.adj)
    for u in _bits(nbhd):
        rows[u] |= nbhd & ~(1 << u)
    return induced_subgraph(Graph(g.n, tuple(rows)), g.vertex_mask & ~(1 << v))


def degree_profile(g: Graph) -> tuple[int, int, list[int]]:
    """(min degree, max degree, degree sequence sorted descending); (0, 0, []) on order 0."""
    if g.n == 0:
        return 0, 0, []
    seq = sorted((row.bit_count() for row in g.adj), reverse=True)
    return seq[-1], seq[0], seq


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in _bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def connectivity_direct(g: Graph) -> int:
    """Vertex connectivity by brute force over separating sets of increasing size.

    ``n - 1`` for complete graphs (including K_1), 0 for disconnected or
    empty graphs.  Intended for order <= 16.
    """
    n = g.n
    if n == 0:
        return 0
    if g.is_complete():
        return n - 1
    full = g.vertex_mask
    if count_components(g.adj, full) != 1:
        return 0
    for s in range(1, n - 1):
        for sep in combinations(range(n), s):
            if count_components(g.adj, full & ~mask_of(sep)) >= 2:
                return s
    raise AssertionError("non-complete connected graph without a separating set")


# -- canonical labelling ------------------------------------------------------

def _refine(adj: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # split every cell by neighbour counts into every cell until stable
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[tuple[int, ...]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                out.extend(tuple(groups[k]) for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _encode(adj: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _orbit(v: int, gens: list[tuple[int, ...]]) -> set[int]:
    orbit = {v}
    stack = [v]
    while stack:
        w = stack.pop()
        for g in gens:
            u = g[w]
            if u not in orbit:
                orbit.add(u)
                stack.append(u)
    return orbit


def canonical_order(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return (code, order) where ``order`` relabels ``g`` to its canonical form.

    Individualisation/refinement search over equitable partitions, keeping the
    leaf with the smallest upper-triangle code.  Subtrees are skipped when a
    known automorphism fixing the current prefix maps the candidate onto an
    already explored vertex, or when the two vertices are twins.
    """
    n = g.n
    if n == 0:
        return 0, ()
    adj = g.adj
    best_code = -1
    best_order: tuple[int, ...] = ()
    autos: list[tuple[int, ...]] = []

    def search(cells: list[tuple[int, ...]], prefix: tuple[int, ...]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = tuple(c[0] for c in cells)
            code = _encode(adj, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            elif code == best_code and len(autos) < 64:
                perm = [0] * n
                for a, b in zip(best_order, order):
                    perm[a] = b
                autos.append(tuple(perm))
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            if tried:
                if any((adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)) for w in tried):
                    continue
                gens = [a for a in autos if all(a[p] == p for p in prefix)]
                if gens and not _orbit(v, gens).isdisjoint(tried):
                    continue
            rest = tuple(u for u in target if u != v)
            search(cells[:idx] + [(v,), rest] + cells[idx + 1:], prefix + (v,))
            tried.append(v)

    search([tuple(range(n))], ())
    return best_code, best_order


def canonical_key(g: Graph) -> bytes:
    """Exact isomorphism-class key: order byte followed by the minimal adjacency code."""
    code, _ = canonical_order(g)
    npairs = g.n * (g.n - 1) // 2
    return bytes([g.n]) + code.to_bytes((npairs + 7) // 8, "big")


def canonical_form(g: Graph) -> Graph:
    _, order = canonical_order(g)
    return g.relabel(order)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    if degree_profile(g)[2] != degree_profile(h)[2]:
        return False
    return canonical_key(g) == canonical_key(h)

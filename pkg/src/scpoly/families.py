"""Constructors for the named graph families, plus join and disjoint union.

Labelings are fixed so that encodings are byte-stable:

* ``path(n)``: 0-1-...-(n-1); ``cycle(n)`` adds (n-1)-0.
* ``star(n)``: centre 0, leaves 1..n.
* ``complete_bipartite(m, n)``: parts {0..m-1} and {m..m+n-1}.
* ``tadpole(m, n)``: cycle on 0..n-1, path n..n+m-1, bridge 0-n.
* ``friendship(n)``: hub 0, triangle i on {0, 2i+1, 2i+2}.
* ``book(n)``: spine 0-1, page i is the 4-cycle 0-(2i+2)-(2i+3)-1.
* ``hypercube(n)``: n-bit words, adjacent at Hamming distance 1.
* ``fan(n)``: hub 0 joined to the path 1-2-...-n.
* ``fan_plus(n)``: ``fan(n-1)`` plus vertex n adjacent to n-2 and n-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError
from .graph import Graph, are_isomorphic, canonical_key, contract_vertex, delete_vertex, \
    extract_closed_neighborhood


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def edgeless(n: int) -> Graph:
    _need(n >= 0, f"edgeless needs n >= 0, got {n}")
    return Graph.empty(n)


def complete(n: int) -> Graph:
    _need(n >= 0, f"complete needs n >= 0, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    _need(n >= 0, f"star needs n >= 0, got {n}")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    _need(m >= 1 and n >= 1, f"complete_bipartite needs m, n >= 1, got {m}, {n}")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def tadpole(m: int, n: int) -> Graph:
    """Cycle C_n with a pendant path P_m attached by a bridge."""
    _need(m >= 1 and n >= 3, f"tadpole needs m >= 1, n >= 3, got {m}, {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.append((0, n))
    edges += [(n + i, n + i + 1) for i in range(m - 1)]
    return Graph.from_edges(m + n, edges)


def friendship(n: int) -> Graph:
    _need(n >= 1, f"friendship needs n >= 1, got {n}")
    edges = []
    for i in range(n):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * n + 1, edges)


def book(n: int) -> Graph:
    _need(n >= 1, f"book needs n >= 1, got {n}")
    edges = [(0, 1)]
    for i in range(n):
        a, b = 2 * i + 2, 2 * i + 3
        edges += [(0, a), (a, b), (b, 1)]
    return Graph.from_edges(2 * n + 2, edges)


def hypercube(n: int) -> Graph:
    _need(n >= 0, f"hypercube needs n >= 0, got {n}")
    size = 1 << n
    return Graph.from_edges(size, [(v, v ^ (1 << b)) for v in range(size) for b in range(n) if v < v ^ (1 << b)])


def fan(n: int) -> Graph:
    _need(n >= 1, f"fan needs n >= 1, got {n}")
    return join(complete(1), path(n))


def fan_plus(n: int) -> Graph:
    """``fan(n-1)`` with a new vertex v_n joined to v_{n-2} and v_{n-1}."""
    _need(n >= 3, f"fan_plus needs n >= 3, got {n}")
    base = fan(n - 1)
    return Graph.from_edges(n + 1, base.edges() + [(n - 2, n), (n - 1, n)])


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


_BUILDERS = {
    "edgeless": (edgeless, 1),
    "complete": (complete, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "tadpole": (tadpole, 2),
    "friendship": (friendship, 1),
    "book": (book, 1),
    "hypercube": (hypercube, 1),
    "fan": (fan, 1),
    "fan_plus": (fan_plus, 1),
}

FAMILY_NAMES = tuple(_BUILDERS)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]


def make(spec: FamilySpec) -> Graph:
    if spec.name not in _BUILDERS:
        raise ParameterError(f"unknown family {spec.name!r}")
    fn, arity = _BUILDERS[spec.name]
    if len(spec.params) != arity:
        raise ParameterError(f"{spec.name} takes {arity} parameter(s), got {len(spec.params)}")
    return fn(*spec.params)


# -- the Q-equivalent pair built on F_4 ---------------------------------------

# F_4 is hub 0 with path 1-2-3-4; vertex 5 is the attached vertex u / v.
G1_EDGES = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (0, 5), (1, 5)]
G2_EDGES = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (2, 5), (3, 5)]


def fig4_pair() -> tuple[Graph, Graph]:
    return Graph.from_edges(6, G1_EDGES), Graph.from_edges(6, G2_EDGES)


def search_fig4_pair(attach_sizes: tuple[int, ...] = (2,)) -> list[Graph]:
    """All ways, up to isomorphism, to add a sixth vertex u to F_4 so that
    ``G-u = F_4``, ``G-N[u] = P_3`` and ``G/u = F_4`` (up to isomorphism).

    ``attach_sizes`` lists the neighbourhood sizes of u to try.
    """
    f4, p3 = fan(4), path(3)
    found: dict[bytes, Graph] = {}
    for k in attach_sizes:
        for nbrs in combinations(range(5), k):
            g = Graph.from_edges(6, f4.edges() + [(w, 5) for w in nbrs])
            if not are_isomorphic(delete_vertex(g, 5), f4):
                continue
            if not are_isomorphic(extract_closed_neighborhood(g, 5), p3):
                continue
            if not are_isomorphic(contract_vertex(g, 5), f4):
                continue
            found.setdefault(canonical_key(g), g)
    return [found[k] for k in sorted(found)]

"""The subgraph component polynomial Q(G; x, y).

Two independent routes:

* :func:`q_by_definition` sums ``x^|X| y^k(G[X])`` over all vertex subsets.
* :func:`q_by_recurrence` applies the vertex-elimination recurrence
  ``Q(G) = Q(G-v) + x(y-1) Q(G-N[v]) + x Q(G/v)``, factoring over connected
  components first and memoising on canonical keys.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .errors import ResourceLimitError
from .graph import (
    Graph,
    canonical_key,
    component_masks,
    contract_vertex,
    count_components,
    delete_vertex,
    extract_closed_neighborhood,
    induced_subgraph,
)
from .poly import ONE, BiPoly

DEFAULT_SUBSET_BOUND = 24
DEFAULT_MEMO_CAPACITY = 2_000_000
AUTO_THRESHOLD = 15

X_TIMES_Y_MINUS_1 = BiPoly({(1, 1): 1, (1, 0): -1})


@dataclass
class QResult:
    polynomial: BiPoly
    method: str
    stats: dict = field(default_factory=dict)


class MemoTable:
    """Canonical key -> Q.  Keys are exact canonical forms, never hashes of them."""

    def __init__(self, capacity: int = DEFAULT_MEMO_CAPACITY):
        self.capacity = capacity
        self._store: dict[bytes, BiPoly] = {}
        self.hits = 0
        self.misses = 0

    def get(self, key: bytes) -> BiPoly | None:
        val = self._store.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def put(self, key: bytes, value: BiPoly) -> None:
        if key not in self._store and len(self._store) >= self.capacity:
            raise ResourceLimitError(f"memo capacity {self.capacity} exhausted")
        self._store[key] = value

    def __len__(self) -> int:
        return len(self._store)

    def __contains__(self, key: bytes) -> bool:
        return key in self._store


def q_complete(n: int) -> BiPoly:
    """Closed form for K_n: every nonempty subset is connected."""
    return BiPoly({(0, 0): 1, **{(i, 1): comb(n, i) for i in range(1, n + 1)}})


def q_by_definition(g: Graph, subset_bound: int = DEFAULT_SUBSET_BOUND) -> QResult:
    if g.n > subset_bound:
        raise ResourceLimitError(
            f"definition route enumerates 2^{g.n} subsets; order bound is {subset_bound}")
    adj = g.adj
    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << g.n):
        key = (mask.bit_count(), count_components(adj, mask))
        counts[key] = counts.get(key, 0) + 1
    return QResult(BiPoly(counts), "definition", {"subsets": 1 << g.n})


def max_degree_pivot(g: Graph) -> int:
    return max(range(g.n), key=lambda v: (g.adj[v].bit_count(), -v))


def lowest_label_pivot(g: Graph) -> int:
    return 0


PIVOTS: dict[str, Callable[[Graph], int]] = {
    "max_degree": max_degree_pivot,
    "lowest_label": lowest_label_pivot,
}


def q_by_recurrence(g: Graph, memo: MemoTable | None = None, pivot: str = "max_degree") -> QResult:
    if memo is None:
        memo = MemoTable()
    choose = PIVOTS[pivot]
    hits0, misses0 = memo.hits, memo.misses
    max_depth = 0

    def connected_q(h: Graph, depth: int) -> BiPoly:
        nonlocal max_depth
        max_depth = max(max_depth, depth)
        if h.is_complete():
            return q_complete(h.n)
        key = canonical_key(h)
        cached = memo.get(key)
        if cached is not None:
            return cached
        v = choose(h)
        result = (q(delete_vertex(h, v), depth + 1)
                  + X_TIMES_Y_MINUS_1 * q(extract_closed_neighborhood(h, v), depth + 1)
                  + q(contract_vertex(h, v), depth + 1).shift(1, 0))
        memo.put(key, result)
        return result

    def q(h: Graph, depth: int) -> BiPoly:
        if h.n == 0:
            return ONE
        parts = component_masks(h)
        if len(parts) == 1:
            return connected_q(h, depth)
        out = ONE
        for part in parts:
            out = out * connected_q(induced_subgraph(h, part), depth)
        return out

    poly = q(g, 0)
    stats = {"memo_hits": memo.hits - hits0, "memo_misses": memo.misses - misses0,
             "memo_size": len(memo), "max_depth": max_depth}
    return QResult(poly, "recurrence", stats)


def compute_q(g: Graph, method: str = "auto", *, subset_bound: int = DEFAULT_SUBSET_BOUND,
              memo: MemoTable | None = None) -> QResult:
    if method == "auto":
        method = "definition" if g.n <= AUTO_THRESHOLD else "recurrence"
    if method == "definition":
        return q_by_definition(g, subset_bound)
    if method == "recurrence":
        return q_by_recurrence(g, memo)
    raise ValueError(f"unknown method {method!r}")


def q_poly(g: Graph, method: str = "auto") -> BiPoly:
    return compute_q(g, method).polynomial


def q_equivalent(g: Graph, h: Graph, method: str = "auto") -> bool:
    if g.n != h.n:
        return False
    return q_poly(g, method) == q_poly(h, method)

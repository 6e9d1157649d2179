"""Isomorph-free enumeration of small graphs and grouping by Q.

Graphs of order n are produced by extending every class representative of
order n-1 with a new vertex attached to each possible neighbour set, keeping
one canonical form per class.  The literal mask-filtering enumeration (keep a
labelled graph iff it is its own canonical form) is kept as an oracle for
small orders, and the number of classes is checked against Burnside counting.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial, gcd
from pathlib import Path
from typing import Iterator

from .errors import ResourceLimitError
from .graph import Graph, _encode, canonical_form, canonical_key, canonical_order
from .graphio import from_graph6, to_graph6
from .poly import BiPoly
from .qpoly import compute_q

log = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 7
HARD_MAX_ORDER = 8


def _check_order(n: int, max_order: int) -> None:
    if n < 0:
        raise ValueError(f"negative order {n}")
    if n > min(max_order, HARD_MAX_ORDER):
        raise ResourceLimitError(
            f"census order {n} exceeds the limit {min(max_order, HARD_MAX_ORDER)}"
            + (" (order 8 needs an explicit opt-in)" if n == HARD_MAX_ORDER else ""))


# -- counting oracle ------------------------------------------------------------------

def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def count_graphs_burnside(n: int) -> int:
    """Number of unlabelled graphs of order n, by averaging 2^(pair cycles) over S_n."""
    total = 0
    for part in _partitions(n):
        mult: dict[int, int] = defaultdict(int)
        for k in part:
            mult[k] += 1
        perms = factorial(n)
        for k, m in mult.items():
            perms //= k ** m * factorial(m)
        cycles = 0
        lengths = sorted(mult)
        for k in lengths:
            m = mult[k]
            cycles += m * (k // 2) + k * m * (m - 1) // 2
        for a, b in combinations(lengths, 2):
            cycles += mult[a] * mult[b] * gcd(a, b)
        total += perms * 2 ** cycles
    return total // factorial(n)


# -- enumeration ------------------------------------------------------------------------

def enumerate_graphs_bruteforce(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices that is its own canonical form.

    2^(n(n-1)/2) masks, so only practical up to order 6.
    """
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    identity = tuple(range(n))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = Graph(n, tuple(rows))
        if _encode(g.adj, identity) == canonical_order(g)[0]:
            yield g


def _extend(parents: list[tuple[int, ...]], n: int) -> dict[bytes, tuple[int, ...]]:
    out: dict[bytes, tuple[int, ...]] = {}
    new = n - 1
    for adj in parents:
        for nbrs in range(1 << new):
            rows = [row | ((nbrs >> v & 1) << new) for v, row in enumerate(adj)]
            rows.append(nbrs)
            g = Graph(n, tuple(rows))
            key = canonical_key(g)
            if key not in out:
                out[key] = canonical_form(g).adj
    return out


def _chunks(seq: list, parts: int) -> list[list]:
    size = max(1, -(-len(seq) // parts))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


@lru_cache(maxsize=None)
def _class_reps(n: int, workers: int = 1) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    parents = list(_class_reps(n - 1, workers))
    if workers > 1 and len(parents) > workers:
        merged: dict[bytes, tuple[int, ...]] = {}
        with ProcessPoolExecutor(workers) as pool:
            for part in pool.map(_extend, _chunks(parents, workers * 4), [n] * (workers * 4)):
                for k, v in part.items():
                    merged.setdefault(k, v)
    else:
        merged = _extend(parents, n)
    log.info("order %d: %d classes", n, len(merged))
    reps = [Graph(n, adj) for adj in merged.values()]
    reps.sort(key=lambda g: to_graph6(g).encode())
    return tuple(g.adj for g in reps)


def enumerate_graphs(n: int, max_order: int = DEFAULT_MAX_ORDER, workers: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, sorted by graph6 bytes."""
    _check_order(n, max_order)
    for adj in _class_reps(n, workers):
        yield Graph(n, adj)


# -- Q classes ----------------------------------------------------------------------------

@dataclass
class QClassTable:
    order: int
    classes: dict[str, list[str]] = field(default_factory=dict)
    polys: dict[str, BiPoly] = field(default_factory=dict)

    @property
    def graph_count(self) -> int:
        return sum(len(v) for v in self.classes.values())

    def class_of(self, graph6: str) -> list[str]:
        return self.classes[str(self.polys[graph6])]

    def non_singleton(self) -> list[list[str]]:
        return sorted(v for v in self.classes.values() if len(v) > 1)

    def summary(self) -> dict:
        sizes = [len(v) for v in self.classes.values()]
        return {
            "order": self.order,
            "graphs": self.graph_count,
            "classes": len(self.classes),
            "largest_class": max(sizes, default=0),
            "non_singleton_classes": self.non_singleton(),
        }

    def add(self, graph6: str, q: BiPoly) -> None:
        self.polys[graph6] = q
        self.classes.setdefault(str(q), []).append(graph6)

    def finalize(self) -> "QClassTable":
        for members in self.classes.values():
            members.sort(key=str.encode)
        return self


def _q_records(graph6s: list[str]) -> list[tuple[str, str]]:
    return [(s, compute_q(from_graph6(s), "definition").polynomial.to_json()) for s in graph6s]


@lru_cache(maxsize=None)
def _q_classes_cached(n: int, workers: int) -> QClassTable:
    reps = [to_graph6(g) for g in enumerate_graphs(n, HARD_MAX_ORDER, workers)]
    table = QClassTable(n)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = [r for part in pool.map(_q_records, _chunks(reps, workers * 4)) for r in part]
    else:
        records = _q_records(reps)
    for s, qjson in sorted(records, key=lambda r: r[0].encode()):
        table.add(s, BiPoly.from_json(qjson))
    return table.finalize()


def q_classes(n: int, max_order: int = DEFAULT_MAX_ORDER, workers: int = 1) -> QClassTable:
    _check_order(n, max_order)
    return _q_classes_cached(n, workers)


@dataclass
class UniquenessReport:
    graph6: str
    unique: bool
    class_size: int
    co_members: list[str]
    q: BiPoly

    def to_json_obj(self) -> dict:
        return {"graph6": self.graph6, "unique": self.unique, "class_size": self.class_size,
                "co_members": self.co_members, "Q": self.q.to_json_obj()}


def verify_q_unique(g: Graph, max_order: int = DEFAULT_MAX_ORDER, workers: int = 1) -> UniquenessReport:
    table = q_classes(g.n, max_order, workers)
    me = to_graph6(canonical_form(g))
    members = table.class_of(me)
    return UniquenessReport(me, len(members) == 1, len(members), [s for s in members if s != me], table.polys[me])


# -- census files -------------------------------------------------------------------------

def write_census(table: QClassTable, path: str | Path) -> None:
    lines = sorted(f"{s}\t{q.to_json()}" for s, q in table.polys.items())
    lines.sort(key=lambda line: line.split("\t", 1)[0].encode())
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def read_census(path: str | Path) -> QClassTable:
    table = None
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line:
            continue
        s, qjson = line.split("\t", 1)
        g = from_graph6(s)
        if table is None:
            table = QClassTable(g.n)
        table.add(s, BiPoly.from_json(qjson))
    if table is None:
        raise ValueError(f"empty census file {path}")
    return table.finalize()

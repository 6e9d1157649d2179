"""Characteristic, matching and Tutte polynomials over the integers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graph import Graph, _bits
from .poly import ONE, BiPoly, UniPoly, X, Y
from .qpoly import q_poly


# -- characteristic polynomial --------------------------------------------------

def berkowitz(matrix: list[list[int]]) -> list[int]:
    """Coefficients of det(tI - M), highest degree first, without division.

    Grows the leading principal submatrix one row/column at a time; each step
    multiplies by a lower-triangular Toeplitz matrix whose first column is
    ``1, -a, -R C, -R A C, -R A^2 C, ...``.
    """
    n = len(matrix)
    p = [1]
    for r in range(n):
        row = matrix[r][:r]
        col_vec = [matrix[i][r] for i in range(r)]
        toeplitz = [1, -matrix[r][r]]
        v = col_vec
        for _ in range(r):
            toeplitz.append(-sum(a * b for a, b in zip(row, v)))
            v = [sum(matrix[i][j] * v[j] for j in range(r)) for i in range(r)]
        p = [sum(toeplitz[i - j] * p[j] for j in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1))
             for i in range(r + 2)]
    return p


def adjacency_matrix(g: Graph) -> list[list[int]]:
    return [[g.adj[i] >> j & 1 for j in range(g.n)] for i in range(g.n)]


def characteristic_poly(g: Graph) -> UniPoly:
    return UniPoly.from_descending(berkowitz(adjacency_matrix(g)))


# -- matching polynomial -----------------------------------------------------------

def matching_counts(g: Graph) -> list[int]:
    """``m_i`` = number of i-edge matchings, for i = 0..n//2."""
    memo: dict[int, list[int]] = {}
    adj = g.adj

    def count(mask: int) -> list[int]:
        if mask in memo:
            return memo[mask]
        # lowest vertex that still has a neighbour in mask
        v = -1
        for w in _bits(mask):
            if adj[w] & mask:
                v = w
                break
        if v < 0:
            res = [1]
        else:
            rest = mask & ~(1 << v)
            res = list(count(rest))
            for u in _bits(adj[v] & rest):
                sub = count(rest & ~(1 << u))
                for i, c in enumerate(sub):
                    if i + 1 >= len(res):
                        res.append(0)
                    res[i + 1] += c
        memo[mask] = res
        return res

    out = count(g.vertex_mask)
    return out + [0] * (g.n // 2 + 1 - len(out))


def matching_poly(g: Graph) -> UniPoly:
    """sum_i (-1)^i m_i x^(n - 2i)."""
    coeffs = [0] * (g.n + 1)
    for i, m in enumerate(matching_counts(g)):
        coeffs[g.n - 2 * i] = (-1) ** i * m
    return UniPoly(coeffs)


# -- Tutte polynomial ------------------------------------------------------------------

@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: Mapping[tuple[int, int], int] = field(default_factory=dict)
    loops: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for (u, v), k in self.edges.items():
            if u == v:
                raise ValueError(f"loop ({u}, {v}) must be given in loops")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if k < 1:
                raise ValueError(f"multiplicity {k} on edge ({u}, {v})")

    @classmethod
    def from_graph(cls, g: Graph) -> "Multigraph":
        return cls(g.n, {e: 1 for e in g.edges()})


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _is_bridge(edges: dict[tuple[int, int], int], e: tuple[int, int]) -> bool:
    if edges[e] > 1:
        return False
    u, v = e
    nbrs: dict[int, list[int]] = {}
    for (a, b) in edges:
        if (a, b) != e:
            nbrs.setdefault(a, []).append(b)
            nbrs.setdefault(b, []).append(a)
    seen = {u}
    stack = [u]
    while stack:
        w = stack.pop()
        for z in nbrs.get(w, ()):
            if z == v:
                return False
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return True


def _contract(edges: dict[tuple[int, int], int], e: tuple[int, int]) -> dict[tuple[int, int], int]:
    u, v = e
    out: dict[tuple[int, int], int] = {}
    for (a, b), k in edges.items():
        if (a, b) == e:
            continue
        a = u if a == v else a
        b = u if b == v else b
        key = _norm(a, b)
        out[key] = out.get(key, 0) + k
    return out


def _y_series(start: int, stop: int) -> BiPoly:
    """y^start + ... + y^(stop-1)."""
    return BiPoly({(0, j): 1 for j in range(start, stop)})


def _memo_key(edges: dict[tuple[int, int], int]) -> tuple:
    verts = sorted({w for e in edges for w in e})
    pos = {w: i for i, w in enumerate(verts)}
    return tuple(sorted((pos[a], pos[b], k) for (a, b), k in edges.items()))


def _tutte(edges: dict[tuple[int, int], int], memo: dict | None) -> BiPoly:
    if not edges:
        return ONE
    if memo is not None:
        key = _memo_key(edges)
        if key in memo:
            return memo[key]
    order = sorted(edges)
    bridge = next((e for e in order if _is_bridge(edges, e)), None)
    if bridge is not None:
        result = X * _tutte(_contract(edges, bridge), memo)
    else:
        e = order[0]
        k = edges[e]
        deleted = {f: m for f, m in edges.items() if f != e}
        # deleting the whole bundle at once: T = T(G - bundle) + (1 + y + ... + y^(k-1)) T(G / bundle)
        if not _disconnects(edges, e):
            result = _tutte(deleted, memo) + _y_series(0, k) * _tutte(_contract(edges, e), memo)
        else:
            result = (X + _y_series(1, k)) * _tutte(_contract(edges, e), memo)
    if memo is not None:
        memo[key] = result
    return result


def _disconnects(edges: dict[tuple[int, int], int], e: tuple[int, int]) -> bool:
    """True if removing every copy of e separates its endpoints."""
    return _is_bridge({**edges, e: 1}, e)


def tutte_poly(mg: Multigraph | Graph, memo: bool = False) -> BiPoly:
    """Deletion-contraction.  Loops give factors of y, bridges factors of x."""
    if isinstance(mg, Graph):
        mg = Multigraph.from_graph(mg)
    nloops = sum(mg.loops.values())
    edges = {_norm(u, v): k for (u, v), k in mg.edges.items()}
    return _tutte(edges, {} if memo else None) * Y ** nloops


# -- comparisons ------------------------------------------------------------------------

POLY_NAMES = ("Q", "charpoly", "matching", "tutte")


@dataclass
class PowerComparison:
    polys: dict[str, tuple[object, object]]

    @property
    def equal(self) -> dict[str, bool]:
        return {name: a == b for name, (a, b) in self.polys.items()}

    def table(self) -> str:
        return "\n".join(f"{name}: {'equal' if eq else 'different'}" for name, eq in self.equal.items())

    def to_json_obj(self) -> dict:
        return {name: {"equal": a == b, "G": a.to_json_obj(), "H": b.to_json_obj()}
                for name, (a, b) in self.polys.items()}


def all_polys(g: Graph) -> dict[str, object]:
    return {
        "Q": q_poly(g),
        "charpoly": characteristic_poly(g),
        "matching": matching_poly(g),
        "tutte": tutte_poly(g),
    }


def compare_powers(g: Graph, h: Graph) -> PowerComparison:
    pg, ph = all_polys(g), all_polys(h)
    return PowerComparison({name: (pg[name], ph[name]) for name in POLY_NAMES})

"""Graph invariants read off Q(G; x, y), with direct oracles to check them."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from math import comb

from .errors import ConsistencyError, MalformedPolynomialError, PreconditionError
from .graph import (
    Graph,
    component_count,
    connectivity_direct,
    count_components,
    degree_profile,
    is_bipartite,
    mask_of,
)
from .poly import BiPoly
from .qpoly import compute_q


@dataclass(frozen=True)
class BasicInvariants:
    n: int
    m: int
    k: int
    alpha: int
    profile: tuple[int, ...]


@dataclass(frozen=True)
class FourVertexCounts:
    p: int
    c4: int
    claws: int


@dataclass
class InvariantReport:
    n: int
    m: int
    k: int
    alpha: int
    independent_set_profile: list[int]
    connectivity: int
    min_degree: int
    regular_degree: int | None = None
    bipartite: bool = False
    induced_p4: int | None = None
    induced_c4: int | None = None

    def to_json_obj(self) -> dict:
        return asdict(self)


def _check_shape(q: BiPoly) -> None:
    if q.coeff(0, 0) != 1:
        raise MalformedPolynomialError(f"constant term is {q.coeff(0, 0)}, expected 1")
    if any(c < 0 for _, c in q.terms()):
        raise MalformedPolynomialError("negative coefficient")


def extract_order(q: BiPoly) -> int:
    """deg_x Q, cross-checked against log2 Q(1,1) and [xy]Q."""
    _check_shape(q)
    n = q.degree("x")
    total = q.eval(1, 1)
    if total & (total - 1):
        raise MalformedPolynomialError(f"Q(1,1) = {total} is not a power of two")
    if total.bit_length() - 1 != n or q.coeff(1, 1) != n:
        raise MalformedPolynomialError(
            f"order formulas disagree: deg_x={n}, log2 Q(1,1)={total.bit_length() - 1}, [xy]={q.coeff(1, 1)}")
    return n


def extract_basic(q: BiPoly) -> BasicInvariants:
    n = extract_order(q)
    m = q.coeff(2, 1)
    top = q.x_slice(n)
    k = max(top) if top else 0
    alpha = q.degree("y")
    profile = tuple(q.coeff(i, i) for i in range(alpha + 1))
    return BasicInvariants(n, m, k, alpha, profile)


def extract_connectivity(q: BiPoly) -> int:
    """n minus the largest subset size that induces two or more components.

    Complete graphs have no such subset and get n - 1; disconnected graphs
    get 0 because the whole vertex set already qualifies.
    """
    n = extract_order(q)
    multi = [i for (i, j), _ in q.terms() if j >= 2]
    if not multi:
        return max(n - 1, 0)
    return n - max(multi)


def four_vertex_counts(q: BiPoly, n: int, k: int) -> FourVertexCounts:
    """Induced P4 and C4 counts of a k-regular bipartite graph of order n.

    Solves [x^4 y]Q = p + c + n C(k,3) together with
    (2k - 2) [x^3 y]Q = 2p + 8c.
    """
    if k < 1:
        raise PreconditionError(f"degree must be >= 1, got {k}")
    a3, a4 = q.coeff(3, 1), q.coeff(4, 1)
    claws = n * comb(k, 3)
    paths_and_cycles = a4 - claws
    six_c, rem = divmod((2 * k - 2) * a3 - 2 * paths_and_cycles, 6)
    p = paths_and_cycles - six_c
    if rem or six_c < 0 or p < 0:
        raise PreconditionError(
            f"no nonnegative integer solution (a3={a3}, a4={a4}, n={n}, k={k}); graph is not {k}-regular bipartite")
    return FourVertexCounts(p, six_c, claws)


def _classify4(g: Graph, quad: tuple[int, ...]) -> str:
    qmask = mask_of(quad)
    degs = sorted((g.adj[v] & qmask).bit_count() for v in quad)
    if count_components(g.adj, qmask) != 1:
        return "other"
    if degs == [1, 1, 2, 2]:
        return "p4"
    if degs == [2, 2, 2, 2]:
        return "c4"
    if degs == [1, 1, 1, 3]:
        return "claw"
    return "other"


def count_induced_four_vertex_direct(g: Graph) -> FourVertexCounts:
    tally = {"p4": 0, "c4": 0, "claw": 0, "other": 0}
    for quad in combinations(range(g.n), 4):
        tally[_classify4(g, quad)] += 1
    return FourVertexCounts(tally["p4"], tally["c4"], tally["claw"])


def independent_set_profile_direct(g: Graph) -> list[int]:
    counts = [0] * (g.n + 1)
    for mask in range(1 << g.n):
        if all(not (g.adj[v] & mask) for v in range(g.n) if mask >> v & 1):
            counts[mask.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def _agree(name: str, from_q, direct) -> None:
    if from_q != direct:
        raise ConsistencyError(f"{name}: extracted {from_q!r} but direct computation gives {direct!r}")


def full_report(g: Graph, method: str = "auto") -> InvariantReport:
    q = compute_q(g, method).polynomial
    basic = extract_basic(q)
    conn = extract_connectivity(q)

    mindeg, maxdeg, _ = degree_profile(g)
    profile = independent_set_profile_direct(g)
    _agree("order", basic.n, g.n)
    _agree("size", basic.m, g.size)
    _agree("components", basic.k, component_count(g))
    _agree("independence number", basic.alpha, len(profile) - 1)
    _agree("independent-set profile", list(basic.profile), profile)
    _agree("connectivity", conn, connectivity_direct(g))

    report = InvariantReport(
        n=basic.n, m=basic.m, k=basic.k, alpha=basic.alpha,
        independent_set_profile=list(basic.profile), connectivity=conn, min_degree=mindeg,
        bipartite=is_bipartite(g),
    )
    if g.n and mindeg == maxdeg:
        report.regular_degree = mindeg
        if report.bipartite and mindeg >= 1:
            counts = four_vertex_counts(q, g.n, mindeg)
            direct = count_induced_four_vertex_direct(g)
            _agree("induced four-vertex counts", counts, direct)
            report.induced_p4, report.induced_c4 = counts.p, counts.c4
    return report

import random
from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, random_graph, to_nx
from scpoly import families as fam
from scpoly.census import enumerate_graphs
from scpoly.errors import ResourceLimitError
from scpoly.graph import Graph, component_count, induced_subgraph
from scpoly.poly import BiPoly
from scpoly.qpoly import MemoTable, compute_q, q_by_definition, q_by_recurrence, q_complete, q_equivalent


def q_networkx(g):
    """Subset enumeration using networkx for the component counts."""
    h = to_nx(g)
    terms = {}
    for i in range(g.n + 1):
        for sub in combinations(range(g.n), i):
            k = nx.number_connected_components(h.subgraph(sub)) if sub else 0
            terms[(i, k)] = terms.get((i, k), 0) + 1
    return BiPoly(terms)


Q_P3 = BiPoly.parse("1 + 3*x*y + 2*x^2*y + x^2*y^2 + x^3*y")
Q_C4 = BiPoly.parse("1 + 4*x*y + 4*x^2*y + 2*x^2*y^2 + 4*x^3*y + x^4*y")
Q_K3 = BiPoly.parse("1 + 3*x*y + 3*x^2*y + x^3*y")


def test_hand_enumerated_values_agree_with_networkx_oracle():
    assert q_networkx(fam.path(3)) == Q_P3
    assert q_networkx(fam.cycle(4)) == Q_C4
    assert q_networkx(fam.complete(3)) == Q_K3


def test_definition_examples():
    assert q_by_definition(fam.complete(1)).polynomial == BiPoly.parse("1 + x*y")
    assert q_by_definition(fam.path(3)).polynomial == Q_P3
    assert q_by_definition(fam.cycle(4)).polynomial == Q_C4
    assert q_by_definition(Graph.empty(0)).polynomial == BiPoly.const(1)


def test_definition_bound():
    with pytest.raises(ResourceLimitError):
        q_by_definition(fam.path(10), subset_bound=9)


def test_recurrence_examples():
    # (1 + xy) + x(y - 1) * 1 + x(1 + xy)
    assert q_by_recurrence(fam.complete(2)).polynomial == BiPoly.parse("1 + 2*x*y + x^2*y")
    assert q_by_recurrence(fam.disjoint_union(fam.complete(3), fam.complete(3))).polynomial == Q_K3 * Q_K3
    assert q_by_recurrence(fam.path(4)).polynomial == q_networkx(fam.path(4))


def test_complete_closed_form():
    for n in range(8):
        assert q_complete(n) == q_by_definition(fam.complete(n)).polynomial


def test_recurrence_matches_definition_small_census():
    for n in range(6):
        for g in enumerate_graphs(n):
            assert q_by_recurrence(g).polynomial == q_by_definition(g).polynomial


def test_definition_matches_networkx_oracle():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, rng.randint(0, 7))
        assert q_by_definition(g).polynomial == q_networkx(g)


def test_pivot_independence():
    rng = random.Random(17)
    for _ in range(50):
        g = random_graph(rng, rng.randint(3, 10))
        a = q_by_recurrence(g, MemoTable(), pivot="lowest_label").polynomial
        b = q_by_recurrence(g, MemoTable(), pivot="max_degree").polynomial
        assert a == b


def test_multiplicativity():
    rng = random.Random(23)
    for _ in range(50):
        g, h = random_graph(rng, rng.randint(0, 5)), random_graph(rng, rng.randint(0, 5))
        union = q_by_definition(fam.disjoint_union(g, h)).polynomial
        assert union == q_by_definition(g).polynomial * q_by_definition(h).polynomial


@given(graphs(max_n=8))
def test_structural_identities(g):
    q = q_by_recurrence(g).polynomial
    assert q.eval(1, 1) == 2 ** g.n
    assert q.coeff(0, 0) == 1
    assert all(c > 0 for _, c in q.terms())
    if g.n:
        assert q.degree("x") == g.n
    assert q.x_slice(g.n) == {component_count(g): 1}
    for i in range(g.n + 1):
        assert sum(q.x_slice(i).values()) == comb(g.n, i)


def test_induced_subgraph_monotonicity():
    rng = random.Random(29)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 7))
        sub = rng.getrandbits(g.n)
        qg = q_by_definition(g).polynomial
        qh = q_by_definition(induced_subgraph(g, sub)).polynomial
        for (i, j), c in qh.terms():
            assert c <= qg.coeff(i, j)


def test_monotonicity_fails_for_spanning_subgraphs():
    # K_2 minus its edge gains an x^2 y^2 term, so the claim needs induced subgraphs
    assert q_by_definition(Graph.empty(2)).polynomial.coeff(2, 2) == 1
    assert q_by_definition(fam.complete(2)).polynomial.coeff(2, 2) == 0


def test_memo_capacity_error():
    with pytest.raises(ResourceLimitError, match="capacity 2"):
        q_by_recurrence(fam.cycle(9), MemoTable(capacity=2))


def test_memo_is_shared_and_reports_hits():
    memo = MemoTable()
    q_by_recurrence(fam.cycle(8), memo)
    res = q_by_recurrence(fam.cycle(8).relabel([3, 1, 4, 0, 5, 2, 7, 6]), memo)
    assert res.stats["memo_hits"] >= 1
    assert res.polynomial == q_by_definition(fam.cycle(8)).polynomial


def test_recurrence_beyond_definition_range():
    # 4x4 grid: order 16 still in reach of the definition route for cross-checking
    grid = Graph.from_edges(16, [(r * 4 + c, r * 4 + c + 1) for r in range(4) for c in range(3)]
                            + [(r * 4 + c, (r + 1) * 4 + c) for r in range(3) for c in range(4)])
    assert q_by_recurrence(grid).polynomial == q_by_definition(grid).polynomial


def test_auto_method():
    assert compute_q(fam.path(5)).method == "definition"
    assert compute_q(fam.path(16)).method == "recurrence"


def test_q_equivalent_examples():
    g1, g2 = fam.fig4_pair()
    assert q_equivalent(g1, g2)
    assert not q_equivalent(fam.path(4), fam.star(3))
    g = fam.tadpole(2, 4)
    assert q_equivalent(g, g.relabel([5, 3, 1, 0, 2, 4]))

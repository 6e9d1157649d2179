import random
from itertools import combinations

import networkx as nx
import pytest

from conftest import random_graph, to_nx
from scpoly import families as fam
from scpoly.errors import MalformedPolynomialError, PreconditionError
from scpoly.graph import Graph
from scpoly.invariants import (
    FourVertexCounts,
    count_induced_four_vertex_direct,
    extract_basic,
    extract_connectivity,
    four_vertex_counts,
    full_report,
    independent_set_profile_direct,
)
from scpoly.poly import BiPoly
from scpoly.qpoly import q_poly


def test_extract_basic_examples():
    b = extract_basic(q_poly(fam.path(3)))
    assert (b.n, b.m, b.k, b.alpha, b.profile) == (3, 2, 1, 2, (1, 3, 1))
    b = extract_basic(q_poly(Graph.empty(3)))
    assert (b.n, b.m, b.k, b.alpha, b.profile) == (3, 0, 3, 3, (1, 3, 3, 1))
    b = extract_basic(q_poly(fam.complete(4)))
    assert (b.n, b.m, b.k, b.alpha, b.profile) == (4, 6, 1, 1, (1, 4))
    b = extract_basic(q_poly(Graph.empty(0)))
    assert (b.n, b.k, b.alpha, b.profile) == (0, 0, 0, (1,))


@pytest.mark.parametrize("bad", [
    "2 + x*y",                       # constant term
    "1 + x*y + x^2*y",               # Q(1,1) = 3
    "1 + 2*x*y + x^3*y",             # deg_x 3 but [xy] = 2
    "1 - x*y + 2*x*y^2",             # negative coefficient
])
def test_extract_rejects_malformed(bad):
    with pytest.raises(MalformedPolynomialError):
        extract_basic(BiPoly.parse(bad))


def test_extract_connectivity_examples():
    assert extract_connectivity(q_poly(fam.path(3))) == 1
    assert extract_connectivity(q_poly(fam.complete(5))) == 4
    assert extract_connectivity(q_poly(fam.cycle(4))) == 2
    assert extract_connectivity(q_poly(fam.complete(2))) == 1
    assert extract_connectivity(q_poly(fam.complete(1))) == 0
    assert extract_connectivity(q_poly(Graph.empty(0))) == 0
    assert extract_connectivity(q_poly(Graph.empty(3))) == 0


def test_four_vertex_counts_examples():
    # C_4: a3 = 4, a4 = 1 -> c = (2*4 - 2*1)/6 = 1, p = 0
    q = q_poly(fam.cycle(4))
    assert (q.coeff(3, 1), q.coeff(4, 1)) == (4, 1)
    assert four_vertex_counts(q, 4, 2) == FourVertexCounts(0, 1, 0)
    # K_{3,3}: a3 = 18, a4 = 15 -> c = (4*18 - 2*(15 - 6))/6 = 9
    q = q_poly(fam.complete_bipartite(3, 3))
    assert (q.coeff(3, 1), q.coeff(4, 1)) == (18, 15)
    assert four_vertex_counts(q, 6, 3) == FourVertexCounts(0, 9, 6)
    assert four_vertex_counts(q_poly(fam.hypercube(3)), 8, 3).c4 == 6


def test_four_vertex_counts_precondition():
    # K_4 is 3-regular but not bipartite: the system has no integer solution
    with pytest.raises(PreconditionError):
        four_vertex_counts(q_poly(fam.complete(4)), 4, 3)
    with pytest.raises(PreconditionError):
        four_vertex_counts(q_poly(Graph.empty(4)), 4, 0)


def brute_four(g):
    h = to_nx(g)
    p = c4 = claws = 0
    for quad in combinations(range(g.n), 4):
        s = h.subgraph(quad)
        if not nx.is_connected(s):
            continue
        degs = sorted(d for _, d in s.degree())
        p += degs == [1, 1, 2, 2]
        c4 += degs == [2, 2, 2, 2]
        claws += degs == [1, 1, 1, 3]
    return FourVertexCounts(p, c4, claws)


def test_direct_four_vertex_examples():
    # six windows of four consecutive vertices
    assert count_induced_four_vertex_direct(fam.cycle(6)) == FourVertexCounts(6, 0, 0)
    assert brute_four(fam.cycle(6)) == FourVertexCounts(6, 0, 0)
    assert count_induced_four_vertex_direct(fam.complete_bipartite(3, 3)) == FourVertexCounts(0, 9, 6)
    assert count_induced_four_vertex_direct(fam.complete(4)) == FourVertexCounts(0, 0, 0)
    rng = random.Random(2)
    for _ in range(20):
        g = random_graph(rng, 7)
        assert count_induced_four_vertex_direct(g) == brute_four(g)


@pytest.mark.parametrize("g", [fam.cycle(4), fam.cycle(6), fam.cycle(8), fam.cycle(10), fam.cycle(12),
                               fam.complete_bipartite(2, 2), fam.complete_bipartite(3, 3),
                               fam.complete_bipartite(4, 4), fam.complete_bipartite(5, 5),
                               fam.complete_bipartite(6, 6), fam.hypercube(2), fam.hypercube(3)])
def test_four_vertex_from_q_matches_direct(g):
    k = g.degree(0)
    assert four_vertex_counts(q_poly(g), g.n, k) == count_induced_four_vertex_direct(g)


def test_independent_profile_direct_against_networkx():
    rng = random.Random(8)
    for _ in range(20):
        g = random_graph(rng, 7)
        comp = nx.complement(to_nx(g))
        counts = [0] * (g.n + 1)
        counts[0] = 1
        for clique in nx.enumerate_all_cliques(comp):
            counts[len(clique)] += 1
        while counts[-1] == 0:
            counts.pop()
        assert independent_set_profile_direct(g) == counts


def test_full_report_examples():
    r = full_report(fam.path(5))
    assert (r.n, r.m, r.k, r.alpha, r.connectivity) == (5, 4, 1, 3, 1)
    r = full_report(fam.friendship(2))
    assert (r.n, r.m, r.k, r.alpha, r.connectivity) == (5, 6, 1, 2, 1)
    r = full_report(fam.hypercube(3))
    assert (r.n, r.m, r.k, r.alpha, r.connectivity) == (8, 12, 1, 4, 3)
    assert (r.regular_degree, r.bipartite, r.induced_c4, r.induced_p4) == (3, True, 6, 24)


def test_full_report_json_field_names():
    obj = full_report(fam.cycle(6)).to_json_obj()
    assert list(obj) == ["n", "m", "k", "alpha", "independent_set_profile", "connectivity", "min_degree",
                         "regular_degree", "bipartite", "induced_p4", "induced_c4"]
    assert obj["induced_p4"] == 6 and obj["induced_c4"] == 0


def test_report_invariants():
    rng = random.Random(12)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 8))
        r = full_report(g)
        assert 0 <= r.connectivity <= r.n - 1
        assert r.alpha <= r.n and r.k >= 1
        assert r.independent_set_profile[:2] == [1, r.n]

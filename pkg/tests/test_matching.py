import itertools

import networkx as nx
import pytest

from twolift import (
    BOUND_KIND,
    BudgetExceededError,
    Graph,
    IntPoly,
    Settings,
    adjacency_matrix,
    char_poly,
    complete_bipartite,
    compare_root_to_bound,
    from_networkx,
    is_real_rooted,
    matching_counts,
    matching_counts_bruteforce,
    matching_polynomial,
    matching_root_bound,
    regular_bound,
)
from twolift._testing import corpus


def test_matching_counts_of_complete_bipartite():
    counts = matching_counts(complete_bipartite(3, 3))
    assert counts.counts == (1, 9, 18, 6)
    assert counts.total == 34
    assert counts[5] == 0


def test_matching_polynomials():
    assert matching_polynomial(complete_bipartite(3, 3)) == IntPoly(
        [-6, 0, 18, 0, -9, 0, 1]
    )
    assert matching_polynomial(from_networkx(nx.cycle_graph(4))) == IntPoly(
        [2, 0, -4, 0, 1]
    )
    assert matching_polynomial(from_networkx(nx.cycle_graph(3))) == IntPoly(
        [0, -3, 0, 1]
    )
    assert matching_polynomial(complete_bipartite(1, 1)) == IntPoly([-1, 0, 1])


def test_matching_polynomial_of_graphs_without_edges():
    assert matching_polynomial(Graph(vertex_count=3)) == IntPoly([0, 0, 0, 1])
    assert matching_counts(Graph()).counts == (1,)


def test_matching_polynomial_of_forest_is_characteristic_polynomial():
    tree = from_networkx(nx.balanced_tree(2, 3))
    assert matching_polynomial(tree) == char_poly(adjacency_matrix(tree))


def _disjoint_union(g, h):
    n = g.vertex_count
    edges = list(g.edges) + [(u + n, v + n) for u, v in h.edges]
    return Graph(vertex_count=n + h.vertex_count, edges=edges)


def test_matching_polynomial_of_disjoint_union():
    graphs = corpus(max_vertices=4)
    for g, h in itertools.combinations(graphs, 2):
        union = _disjoint_union(g, h)
        assert matching_polynomial(union) == (
            matching_polynomial(g) * matching_polynomial(h)
        )


def test_matching_polynomial_has_the_parity_of_the_vertex_count():
    for g in corpus():
        mu = matching_polynomial(g)
        assert mu.degree == g.vertex_count
        for k, c in enumerate(mu.coefficients):
            if (g.vertex_count - k) % 2:
                assert c == 0


def test_recurrence_matches_enumeration():
    for g in corpus(max_edges=12):
        assert matching_counts(g) == matching_counts_bruteforce(g)


def test_bruteforce_budget():
    with pytest.raises(BudgetExceededError, match="exceeds the budget"):
        matching_counts_bruteforce(complete_bipartite(5, 5))

    settings = Settings(bruteforce_max_edges=25)
    assert matching_counts_bruteforce(
        complete_bipartite(5, 5), settings=settings
    ) == matching_counts(complete_bipartite(5, 5))


def test_matching_roots_are_real_and_bounded():
    for g in corpus():
        mu = matching_polynomial(g)
        assert is_real_rooted(mu)
        d = g.max_degree
        if d >= 2:
            verdict = compare_root_to_bound(mu, regular_bound(d, warn=False))
            assert verdict.passed


def test_matching_root_bound():
    bound = matching_root_bound(complete_bipartite(3, 3))
    assert bound.kind is BOUND_KIND.MATCHING_ROOT
    assert bound.parameters == (3,)
    assert 2.50 < float(bound) < 2.52
    lo, hi = bound.interval
    assert 2.50 < lo <= hi < 2.52

    with pytest.raises(ValueError, match="no matching roots"):
        matching_root_bound(Graph())

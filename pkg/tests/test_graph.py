import random

import networkx as nx
import numpy as np
import pytest

from twolift import (
    SIDE,
    Graph,
    PartialSigning,
    Signing,
    adjacency_matrix,
    bipartition,
    biregular_degrees,
    char_poly,
    complete_bipartite,
    components,
    degree_profile,
    double_cover,
    from_networkx,
    is_regular,
    regular_degree,
    signed_adjacency,
    to_networkx,
    two_lift,
)

TRIANGLE = Graph(vertex_count=3, edges=[(0, 1), (1, 2), (0, 2)])


def test_complete_bipartite():
    g = complete_bipartite(3, 3)
    assert g.vertex_count == 6
    assert g.edge_count == 9
    assert g.degrees == (3,) * 6

    part = bipartition(g)
    assert part is not None
    assert part.left == (0, 1, 2)
    assert part.right == (3, 4, 5)


def test_complete_bipartite_rejects_empty_side():
    with pytest.raises(ValueError, match="at least one vertex"):
        complete_bipartite(0, 3)


def test_biregular_degrees():
    # four vertices of degree 3 on the left, three of degree 4 on the right
    g = complete_bipartite(4, 3)
    assert biregular_degrees(g) == (3, 4)
    assert regular_degree(g) is None
    assert degree_profile(g) == {3: 4, 4: 3}

    assert biregular_degrees(complete_bipartite(3, 3)) == (3, 3)
    assert biregular_degrees(TRIANGLE) is None


def test_bipartition_of_odd_cycle():
    assert bipartition(TRIANGLE) is None

    part = bipartition(from_networkx(nx.cycle_graph(6)))
    assert part is not None
    assert [side is SIDE.L for side in part.sides] == [True, False] * 3


def test_signed_adjacency_constant_signings():
    g = complete_bipartite(2, 3)
    plus = signed_adjacency(g, Signing.constant(g.edge_count, 1))
    minus = signed_adjacency(g, [-1] * g.edge_count)
    np.testing.assert_array_equal(plus, adjacency_matrix(g))
    np.testing.assert_array_equal(minus, -adjacency_matrix(g))
    np.testing.assert_array_equal(plus, plus.T)


def test_signed_adjacency_length_mismatch():
    with pytest.raises(ValueError, match="signing has 2 entries"):
        signed_adjacency(TRIANGLE, [1, -1])


def test_two_lift_spectrum_is_union():
    g = complete_bipartite(3, 3)
    signs = [1, -1, 1, -1, -1, 1, 1, 1, -1]
    lift = two_lift(g, signs)

    expected = char_poly(adjacency_matrix(g)) * char_poly(signed_adjacency(g, signs))
    assert char_poly(adjacency_matrix(lift)) == expected


def test_two_lift_spectrum_is_union_for_random_signings():
    rng = random.Random(3)
    for g in [TRIANGLE, complete_bipartite(2, 3), from_networkx(nx.petersen_graph())]:
        base = char_poly(adjacency_matrix(g))
        for _ in range(5):
            signs = [rng.choice((1, -1)) for _ in range(g.edge_count)]
            lift = two_lift(g, signs)
            expected = base * char_poly(signed_adjacency(g, signs))
            assert char_poly(adjacency_matrix(lift)) == expected


def test_two_lift_layout():
    lift = two_lift(TRIANGLE, [1, -1, 1])
    assert lift.vertex_count == 6
    assert lift.edges == ((0, 1), (3, 4), (1, 5), (2, 4), (0, 2), (3, 5))


def test_two_lift_doubles_degree_profile():
    g = complete_bipartite(4, 3)
    lift = two_lift(g, [(-1) ** i for i in range(g.edge_count)])
    assert lift.edge_count == 2 * g.edge_count
    assert degree_profile(lift) == {3: 8, 4: 6}
    assert bipartition(lift) is not None


def test_double_cover_of_petersen():
    petersen = from_networkx(nx.petersen_graph())
    cover = double_cover(petersen)
    assert cover.vertex_count == 20
    assert regular_degree(cover) == 3
    assert bipartition(cover) is not None
    assert len(components(cover)) == 1


def test_bipartite_signed_spectrum_is_symmetric():
    g = complete_bipartite(2, 3)
    for signs in ([1] * 6, [1, -1, -1, 1, 1, -1], [-1] * 6):
        f = char_poly(signed_adjacency(g, signs))
        assert f.parity() is not None
        assert f.reflect() == f


def test_components_of_disjoint_union():
    g = Graph(vertex_count=5, edges=[(3, 4), (0, 1)])
    assert components(g) == [[0, 1], [2], [3, 4]]
    assert not is_regular(g)


def test_networkx_round_trip():
    g = complete_bipartite(3, 3)
    graph = to_networkx(g)
    assert graph.number_of_nodes() == 6
    again = from_networkx(graph)
    assert set(again.edges) == set(g.edges)


def test_from_networkx_relabels():
    graph = nx.Graph([("b", "c"), ("a", "b")])
    g = from_networkx(graph)
    assert g.vertex_count == 3
    assert set(g.edges) == {(0, 1), (1, 2)}


def test_partial_signing():
    partial = PartialSigning.unset(3).fix(1, -1)
    assert partial.assignments == (0, -1, 0)
    assert partial.unfixed_edges == (0, 2)
    assert partial.fixed_count == 1
    assert not partial.is_complete

    with pytest.raises(ValueError, match="not fixed"):
        partial.to_signing()

    with pytest.raises(ValueError, match="sign must be"):
        partial.fix(0, 0)

    complete = partial.fix(0, 1).fix(2, 1)
    assert complete.to_signing() == Signing(signs=[1, -1, 1])

from fractions import Fraction

import numpy as np
import pytest
from traitlets import TraitError

from twolift import (
    SIDE,
    Bipartition,
    EdgeProbabilities,
    Graph,
    PartialSigning,
    Settings,
    Signing,
)


def test_edge_list_normalizes_pairs():
    g = Graph(vertex_count=3, edges=[(1, 0), [2, 1]])
    assert g.edges == ((0, 1), (1, 2))


def test_edge_list_accepts_numpy_array():
    g = Graph(vertex_count=3, edges=np.array([[0, 1], [1, 2]]))
    assert g.edges == ((0, 1), (1, 2))

    with pytest.raises(TraitError, match=r"an edge array of shape \(m, 2\)"):
        Graph(vertex_count=3, edges=np.array([0, 1, 2]))


def test_edge_list_validation():
    with pytest.raises(TraitError, match="no self-loops"):
        Graph(vertex_count=2, edges=[(1, 1)])

    with pytest.raises(TraitError, match="no duplicate edges"):
        Graph(vertex_count=2, edges=[(0, 1), (1, 0)])

    with pytest.raises(TraitError, match="pairs of exactly two vertices"):
        Graph(vertex_count=3, edges=[(0, 1, 2)])

    with pytest.raises(TraitError, match="integer vertex indices"):
        Graph(vertex_count=3, edges=[(0, 1.5)])

    with pytest.raises(TraitError, match="has an endpoint outside"):
        Graph(vertex_count=2, edges=[(0, 2)])


def test_sign_vector_validation():
    with pytest.raises(TraitError, match=r"entries \+1 or -1"):
        Signing(signs=[1, 0, -1])

    with pytest.raises(TraitError, match=r"entries \+1 or -1"):
        Signing(signs=[2])

    assert Signing(signs=np.array([1, -1])).signs == (1, -1)
    assert PartialSigning(assignments=[1, None, 0, -1]).assignments == (1, 0, 0, -1)


def test_side_vector_is_a_tuple():
    part = Bipartition(sides=["L", SIDE.R, "R"])
    assert part.sides == (SIDE.L, SIDE.R, SIDE.R)
    assert part.left == (0,)

    with pytest.raises(TraitError, match='entries "L" or "R"'):
        Bipartition(sides=["L", "X"])

    with pytest.raises(AttributeError, match="immutable"):
        part.sides = ()


def test_probability_vector_rejects_floats():
    with pytest.raises(TraitError, match="not floats"):
        EdgeProbabilities(p=[0.5])

    with pytest.raises(TraitError, match="between 0 and 1"):
        EdgeProbabilities(p=["3/2"])

    p = EdgeProbabilities(p=[1, "1/3", Fraction(2, 7)])
    assert p.p == (Fraction(1), Fraction(1, 3), Fraction(2, 7))


def test_models_fail_with_unexpected_argument():
    with pytest.raises(TypeError, match="unexpected keyword argument"):
        Graph(vertex_count=2, unknown_keyword="foo")

    with pytest.raises(TypeError, match="unexpected keyword argument"):
        Settings(max_edge=10)


def test_models_are_immutable():
    g = Graph(vertex_count=2, edges=[(0, 1)])
    with pytest.raises(AttributeError, match="immutable"):
        g.vertex_count = 3


def test_settings_validation():
    settings = Settings(precision="1/1024", shuffle_seed=3)
    assert settings.precision == Fraction(1, 1024)
    assert settings.shuffle_seed == 3

    with pytest.raises(TraitError, match="a positive rational"):
        Settings(precision=0)

    with pytest.raises(TraitError):
        Settings(precision=0.5)

    with pytest.raises(TraitError):
        Settings(exhaustive_max_edges=31)


def test_settings_replace():
    settings = Settings(max_edges=10)
    changed = settings.replace(oracle=True)
    assert changed.oracle
    assert changed.max_edges == 10
    assert not settings.oracle

"""Graph corpora for property tests
"""
from typing import Dict, List

import networkx as nx

from twolift._graph import Graph, complete_bipartite, from_networkx


def named_graphs() -> Dict[str, Graph]:
    """`K_{3,3}`, the 4-cycle and the Petersen graph minus one edge."""
    petersen = nx.petersen_graph()
    petersen.remove_edge(0, 1)
    return {
        "K_3_3": complete_bipartite(3, 3),
        "C_4": from_networkx(nx.cycle_graph(4)),
        "petersen_minus_edge": from_networkx(petersen),
    }


def small_connected_graphs(max_vertices: int = 6) -> List[Graph]:
    """Every connected graph on 1 to `max_vertices` vertices, up to isomorphism,
    from the networkx graph atlas."""
    if not 1 <= max_vertices <= 7:
        raise ValueError("the graph atlas covers graphs on at most 7 vertices")
    return [
        from_networkx(graph)
        for graph in nx.graph_atlas_g()
        if 1 <= graph.number_of_nodes() <= max_vertices and nx.is_connected(graph)
    ]


def corpus(max_vertices: int = 6, max_edges: int = 30) -> List[Graph]:
    """The small connected graphs followed by the named graphs, keeping those with
    at most `max_edges` edges."""
    graphs = small_connected_graphs(max_vertices) + list(named_graphs().values())
    return [g for g in graphs if g.edge_count <= max_edges]

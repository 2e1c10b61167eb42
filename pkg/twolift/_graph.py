from __future__ import annotations

from collections import Counter
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
import traitlets
from numpy.typing import NDArray

from twolift._base import BaseModel
from twolift._constants import SIDE
from twolift.traits import EdgeListTrait, SideVectorTrait, SignVectorTrait


class Graph(BaseModel):
    """A simple undirected graph with an ordered edge list.

    The order of `edges` is the canonical order in which signings assign signs, so
    it is kept exactly as given (each pair normalized to `(min, max)`).

    **Example:**

    ```py
    from twolift import Graph, two_lift

    triangle = Graph(vertex_count=3, edges=[(0, 1), (1, 2), (0, 2)])
    hexagon = two_lift(triangle, [-1, -1, -1])
    ```
    """

    vertex_count = traitlets.Int(0, min=0)
    """
    Number of vertices; vertices are `0, ..., vertex_count - 1`.

    - Type: `int`
    - Default: `0`
    """

    edges = EdgeListTrait()
    """
    The edges as vertex pairs.

    - Type: `tuple` of `(int, int)`. Accepts any sequence of pairs or an integer numpy
      array of shape `(m, 2)`.
        - Self-loops and duplicate edges are rejected.
        - Every endpoint must be smaller than `vertex_count`.
    - Default: `()`
    """

    @traitlets.validate("edges")
    def _validate_endpoints(self, proposal):
        for u, v in proposal["value"]:
            if v >= self.vertex_count:
                raise traitlets.TraitError(
                    f"edge ({u}, {v}) has an endpoint outside of the "
                    f"{self.vertex_count} vertices"
                )

        return proposal["value"]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _neighbors(self) -> Tuple[Tuple[int, ...], ...]:
        adjacency: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        """Neighbours of `vertex`, ascending."""
        return self._neighbors[vertex]

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self._neighbors)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertex_count, self.edges) == (other.vertex_count, other.edges)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"


class Signing(BaseModel):
    """A `+1`/`-1` sign for every edge of a graph, in edge-list order."""

    signs = SignVectorTrait()
    """
    - Type: `tuple` of `int`, entries `+1` or `-1`.
    - Default: `()`
    """

    @classmethod
    def constant(cls, edge_count: int, sign: int = 1) -> Signing:
        return cls(signs=[sign] * edge_count)

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.signs)

    def __getitem__(self, index: int) -> int:
        return self.signs[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Signing):
            return NotImplemented
        return self.signs == other.signs

    def __hash__(self) -> int:
        return hash(self.signs)

    def __repr__(self) -> str:
        return "Signing(" + " ".join("+" if s > 0 else "-" for s in self.signs) + ")"


class PartialSigning(BaseModel):
    """A signing in which some edges are not fixed yet.

    Any subset of the edges may be fixed; unfixed entries are stored as `0`.
    """

    assignments = SignVectorTrait(allow_unset=True)
    """
    - Type: `tuple` of `int`, entries `+1`, `-1` or `0` (unset). `None` is accepted
      for unset on input.
    - Default: `()`
    """

    @classmethod
    def unset(cls, edge_count: int) -> PartialSigning:
        return cls(assignments=[0] * edge_count)

    @classmethod
    def from_signing(cls, signing: Signing) -> PartialSigning:
        return cls(assignments=signing.signs)

    def __len__(self) -> int:
        return len(self.assignments)

    def fix(self, edge: int, sign: int) -> PartialSigning:
        """A copy with edge index `edge` fixed to `sign`."""
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        assignments = list(self.assignments)
        assignments[edge] = sign
        return PartialSigning(assignments=assignments)

    @property
    def unfixed_edges(self) -> Tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.assignments) if s == 0)

    @property
    def fixed_count(self) -> int:
        return sum(1 for s in self.assignments if s != 0)

    @property
    def is_complete(self) -> bool:
        return all(s != 0 for s in self.assignments)

    def to_signing(self) -> Signing:
        if not self.is_complete:
            raise ValueError(
                f"edges {list(self.unfixed_edges)} are not fixed; cannot make a Signing"
            )
        return Signing(signs=self.assignments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialSigning):
            return NotImplemented
        return self.assignments == other.assignments

    def __hash__(self) -> int:
        return hash(self.assignments)


class Bipartition(BaseModel):
    """A two-colouring of the vertices of a bipartite graph."""

    sides = SideVectorTrait()
    """
    The side of every vertex.

    - Type: `tuple` of [SIDE][twolift.SIDE]; `"L"` and `"R"` are accepted.
    - Default: `()`
    """

    @property
    def left(self) -> Tuple[int, ...]:
        return tuple(v for v, side in enumerate(self.sides) if side is SIDE.L)

    @property
    def right(self) -> Tuple[int, ...]:
        return tuple(v for v, side in enumerate(self.sides) if side is SIDE.R)

    def is_valid_for(self, g: Graph) -> bool:
        """Whether every edge of `g` joins the two sides."""
        if len(self.sides) != g.vertex_count:
            return False
        return all(self.sides[u] is not self.sides[v] for u, v in g.edges)


SigningLike = Union[Signing, Sequence[int], NDArray[np.integer]]


def as_signing(g: Graph, s: SigningLike) -> Signing:
    """Coerce `s` to a [Signing][twolift.Signing] and check it fits `g`."""
    if not isinstance(s, Signing):
        s = Signing(signs=s)
    if len(s) != g.edge_count:
        raise ValueError(
            f"signing has {len(s)} entries but the graph has {g.edge_count} edges"
        )
    return s


def complete_bipartite(p: int, q: int) -> Graph:
    """The complete bipartite graph with sides of size `p` and `q`.

    Vertices `0, ..., p - 1` form the left side and have degree `q`; vertices
    `p, ..., p + q - 1` form the right side and have degree `p`. A `(c, d)`-biregular
    graph with left degree `c` is therefore `complete_bipartite(d, c)`.

    Raises:
        ValueError: if a side is empty.
    """
    if p < 1 or q < 1:
        raise ValueError(f"both sides need at least one vertex, got sizes ({p}, {q})")
    edges = [(i, p + j) for i in range(p) for j in range(q)]
    return Graph(vertex_count=p + q, edges=edges)


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.vertex_count))
    graph.add_edges_from(g.edges)
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph, relabelling nodes `0, ..., n - 1` in sorted order
    (insertion order when the labels cannot be sorted).

    Edge order follows `graph.edges`.
    """
    try:
        relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    except TypeError:
        relabelled = nx.convert_node_labels_to_integers(graph)
    if nx.number_of_selfloops(relabelled):
        raise ValueError("graphs with self-loops are not supported")
    return Graph(
        vertex_count=relabelled.number_of_nodes(),
        edges=[(u, v) for u, v in relabelled.edges()],
    )


def components(g: Graph) -> List[List[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    parts = [sorted(c) for c in nx.connected_components(to_networkx(g))]
    return sorted(parts, key=lambda part: part[0])


def bipartition(g: Graph) -> Optional[Bipartition]:
    """A two-colouring of `g`, or `None` if `g` has an odd cycle.

    In every connected component the lowest-indexed vertex is put on the left.
    """
    graph = to_networkx(g)
    sides: Dict[int, SIDE] = {}
    for part in components(g):
        root = part[0]
        sides[root] = SIDE.L
        for parent, child in nx.bfs_edges(graph, root, sort_neighbors=sorted):
            sides[child] = SIDE.R if sides[parent] is SIDE.L else SIDE.L

    result = Bipartition(sides=[sides[v] for v in range(g.vertex_count)])
    return result if result.is_valid_for(g) else None


def adjacency_matrix(g: Graph) -> NDArray[np.int64]:
    return signed_adjacency(g, Signing.constant(g.edge_count))


def signed_adjacency(g: Graph, s: SigningLike) -> NDArray[np.int64]:
    """The signed adjacency matrix: entry `s(u, v)` at `(u, v)` and `(v, u)` for every
    edge, zero elsewhere.

    Raises:
        ValueError: if the signing length does not match the edge count.
    """
    s = as_signing(g, s)
    matrix = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    for (u, v), sign in zip(g.edges, s):
        matrix[u, v] = sign
        matrix[v, u] = sign
    return matrix


def two_lift(g: Graph, s: SigningLike) -> Graph:
    """The 2-lift of `g` selected by the signing `s`.

    Vertex `v` becomes the fibre `{v, v + n}`. An edge `(u, v)` with sign `+1`
    becomes `(u, v), (u + n, v + n)`; with sign `-1` it becomes
    `(u, v + n), (u + n, v)`. Edges are emitted in the input edge order.

    The spectrum of the lift is the union, with multiplicity, of the spectra of the
    adjacency matrix and the signed adjacency matrix.
    """
    s = as_signing(g, s)
    n = g.vertex_count
    edges = []
    for (u, v), sign in zip(g.edges, s):
        if sign > 0:
            edges.extend([(u, v), (u + n, v + n)])
        else:
            edges.extend([(u, v + n), (u + n, v)])
    return Graph(vertex_count=2 * n, edges=edges)


def double_cover(g: Graph) -> Graph:
    """The bipartite double cover, i.e. the 2-lift with every edge signed `-1`."""
    return two_lift(g, Signing.constant(g.edge_count, -1))


def degree_profile(g: Graph) -> Dict[int, int]:
    """How many vertices have each degree, keyed by ascending degree."""
    counts = Counter(g.degrees)
    return {degree: counts[degree] for degree in sorted(counts)}


def regular_degree(g: Graph) -> Optional[int]:
    """`d` if every vertex has degree `d`, else `None` (also for the empty graph)."""
    degrees = set(g.degrees)
    return degrees.pop() if len(degrees) == 1 else None


def is_regular(g: Graph) -> bool:
    return regular_degree(g) is not None


def biregular_degrees(g: Graph) -> Optional[Tuple[int, int]]:
    """`(c, d)` if `g` is bipartite with left degree `c` and right degree `d`.

    Each connected component is coloured separately, so a component may have its
    sides swapped relative to the first one; it still counts as long as its degree
    pair is `{c, d}`. Regular bipartite graphs give `(d, d)`. Graphs with isolated
    vertices are not biregular.
    """
    part = bipartition(g)
    if part is None or g.vertex_count == 0:
        return None

    degrees = g.degrees
    result: Optional[Tuple[int, int]] = None
    for component in components(g):
        left = {degrees[v] for v in component if part.sides[v] is SIDE.L}
        right = {degrees[v] for v in component if part.sides[v] is SIDE.R}
        if len(left) != 1 or len(right) != 1:
            return None
        pair = (left.pop(), right.pop())
        if result is None:
            result = pair
        elif pair != result and pair[::-1] != result:
            return None
    return result

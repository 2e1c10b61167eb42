"""Godsil's path tree of a rooted graph
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

from twolift._bounds import RootBound, compare_root_to_bound, cover_bound
from twolift._config import DEFAULT_SETTINGS, Settings
from twolift._constants import BOUND_KIND, BOUND_PRECISION, VERDICT
from twolift._errors import BudgetExceededError
from twolift._graph import Graph, biregular_degrees, regular_degree
from twolift._matching import matching_polynomial
from twolift._poly import IntPoly, largest_root

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathTree:
    """The tree of simple paths of a graph starting at one vertex.

    Tree vertex `i` stands for the path `labels[i]`; two tree vertices are adjacent
    when one path extends the other by a single vertex. Vertex `0` is the root, the
    one-vertex path `(source,)`, and vertices are numbered in depth-first preorder
    with paths extended by neighbours in ascending order.
    """

    tree: Graph
    labels: Tuple[Tuple[int, ...], ...]
    source: int
    root: int = 0

    def __len__(self) -> int:
        return self.tree.vertex_count

    @property
    def children(self) -> Tuple[Tuple[int, ...], ...]:
        children: List[List[int]] = [[] for _ in self.labels]
        # preorder numbering: every tree edge is (parent, child) with parent < child
        for parent, child in self.tree.edges:
            children[parent].append(child)
        return tuple(tuple(c) for c in children)


def build_path_tree(
    g: Graph, u: int, *, settings: Settings = DEFAULT_SETTINGS
) -> PathTree:
    """Build the path tree `P(g, u)`.

    Its size is the number of simple paths of `g` starting at `u`, which grows very
    quickly on dense graphs.

    Raises:
        ValueError: if `u` is not a vertex of `g`.
        BudgetExceededError: if the tree would exceed `settings.path_tree_cap`
            vertices.
    """
    if not 0 <= u < g.vertex_count:
        raise ValueError(f"vertex {u} is not in a graph with {g.vertex_count} vertices")

    cap = settings.path_tree_cap
    labels: List[Tuple[int, ...]] = [(u,)]
    edges: List[Tuple[int, int]] = []

    def extend(index: int, path: Tuple[int, ...], visited: int) -> None:
        for w in g.neighbors(path[-1]):
            if visited >> w & 1:
                continue
            if len(labels) >= cap:
                raise BudgetExceededError(
                    f"path tree of vertex {u} has more than {cap} vertices"
                )
            child = len(labels)
            labels.append(path + (w,))
            edges.append((index, child))
            extend(child, path + (w,), visited | 1 << w)

    extend(0, (u,), 1 << u)
    logger.debug("path tree of %r at %d has %d vertices", g, u, len(labels))
    return PathTree(
        tree=Graph(vertex_count=len(labels), edges=edges),
        labels=tuple(labels),
        source=u,
    )


def tree_characteristic_polynomial(t: PathTree) -> IntPoly:
    """Characteristic polynomial of the tree's adjacency matrix.

    For a forest the characteristic and matching polynomials agree, so this runs the
    matching recurrence bottom-up. With `P_v` the polynomial of the subtree at `v`
    and `F_v` the product of `P_c` over the children `c` of `v`:
    `P_v = x * F_v - sum_c F_c * F_v / P_c`.
    """
    x = IntPoly([0, 1])
    children = t.children
    subtree: List[IntPoly] = [IntPoly([1])] * len(t.labels)
    # prod of the children's subtree polynomials, i.e. the forest below v
    below: List[IntPoly] = [IntPoly([1])] * len(t.labels)

    for v in reversed(range(len(t.labels))):
        product = IntPoly([1])
        for c in children[v]:
            product = product * subtree[c]
        below[v] = product

        total = x * product
        for c in children[v]:
            others = IntPoly([1])
            for c2 in children[v]:
                if c2 != c:
                    others = others * subtree[c2]
            total = total - others * below[c]
        subtree[v] = total

    return subtree[t.root]


def divisibility_check(
    g: Graph, u: int, *, settings: Settings = DEFAULT_SETTINGS
) -> bool:
    """Whether the matching polynomial of `g` divides the characteristic polynomial
    of `P(g, u)`. Godsil's theorem says it always does.

    Raises:
        BudgetExceededError: if the path tree exceeds `settings.path_tree_cap`.
    """
    t = build_path_tree(g, u, settings=settings)
    return matching_polynomial(g).divides(tree_characteristic_polynomial(t))


def tree_spectral_radius(t: PathTree) -> RootBound:
    """Largest eigenvalue of the path tree, as a matching-root
    [RootBound][twolift.RootBound]."""
    poly = tree_characteristic_polynomial(t)
    root = largest_root(poly, BOUND_PRECISION)
    return RootBound(poly, root, BOUND_KIND.MATCHING_ROOT, (t.tree.max_degree,))


def path_tree_bound_verdict(
    g: Graph, u: int, *, settings: Settings = DEFAULT_SETTINGS
) -> VERDICT:
    """Classify the spectral radius of `P(g, u)` against the universal cover bound of
    a regular or biregular bipartite `g`.

    A path tree is a finite subtree of the universal cover, so the verdict is never
    `EXCEEDS`.

    Raises:
        ValueError: if `g` is neither regular nor biregular bipartite.
    """
    if regular_degree(g) is None and biregular_degrees(g) is None:
        raise ValueError(f"{g!r} is neither regular nor biregular bipartite")
    t = build_path_tree(g, u, settings=settings)
    return compare_root_to_bound(tree_characteristic_polynomial(t), cover_bound(g))

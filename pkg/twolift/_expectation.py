"""Expected characteristic polynomials of random signings
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
import sympy
from networkx.utils import reverse_cuthill_mckee_ordering
from sympy import QQ, Poly

from twolift._base import BaseModel
from twolift._config import DEFAULT_SETTINGS, Settings
from twolift._errors import BudgetExceededError, CertificationError
from twolift._graph import Graph, PartialSigning, signed_adjacency, to_networkx
from twolift._poly import X, IntPoly, char_poly, is_real_rooted
from twolift._utils import to_sympy_rational
from twolift.traits import ProbabilityVectorTrait, _as_rational

logger = logging.getLogger(__name__)

Vector = Union[Sequence[int], np.ndarray]


class EdgeProbabilities(BaseModel):
    """For every edge, the probability that a random signing gives it sign `+1`."""

    p = ProbabilityVectorTrait()
    """
    - Type: `tuple` of `Fraction`, each between 0 and 1.
    - Default: `()`
    """

    @classmethod
    def uniform(cls, edge_count: int, value=Fraction(1, 2)) -> EdgeProbabilities:
        return cls(p=[value] * edge_count)

    def __len__(self) -> int:
        return len(self.p)


def _as_probabilities(g: Graph, p) -> EdgeProbabilities:
    if not isinstance(p, EdgeProbabilities):
        p = EdgeProbabilities(p=p)
    if len(p) != g.edge_count:
        raise ValueError(
            f"got {len(p)} probabilities but the graph has {g.edge_count} edges"
        )
    return p


def _as_partial(g: Graph, partial) -> PartialSigning:
    if partial is None:
        partial = PartialSigning.unset(g.edge_count)
    elif not isinstance(partial, PartialSigning):
        partial = PartialSigning(assignments=partial)
    if len(partial) != g.edge_count:
        raise ValueError(
            f"partial signing has {len(partial)} entries but the graph has "
            f"{g.edge_count} edges"
        )
    return partial


def _check_enumeration_budget(count: int, settings: Settings) -> None:
    if count > settings.bruteforce_max_edges:
        raise BudgetExceededError(
            f"enumerating 2**{count} sign patterns exceeds the budget of "
            f"2**{settings.bruteforce_max_edges}"
        )


def expected_charpoly_bruteforce(
    g: Graph,
    p: Union[EdgeProbabilities, Sequence],
    *,
    settings: Settings = DEFAULT_SETTINGS,
) -> Poly:
    """The expected characteristic polynomial of the signed adjacency matrix when
    every edge independently gets sign `+1` with probability `p[i]`.

    Evaluated by enumerating all `2**m` signings. With every `p[i] = 1/2` this is
    the matching polynomial of `g`.

    Returns:
        A sympy `Poly` in `x` over `QQ`.

    Raises:
        BudgetExceededError: if `g` has more than `settings.bruteforce_max_edges`
            edges.
    """
    p = _as_probabilities(g, p)
    _check_enumeration_budget(g.edge_count, settings)

    total = Poly(0, X, domain=QQ)
    for signs in itertools.product((1, -1), repeat=g.edge_count):
        weight = Fraction(1)
        for sign, prob in zip(signs, p.p):
            weight *= prob if sign > 0 else 1 - prob
        if weight == 0:
            continue
        f = char_poly(signed_adjacency(g, signs))
        total += f.to_rational() * to_sympy_rational(weight)
    return total


def _sum_over_completions(g: Graph, partial: PartialSigning) -> IntPoly:
    unfixed = partial.unfixed_edges
    total = Poly(0, X, domain=QQ)
    for choice in itertools.product((1, -1), repeat=len(unfixed)):
        signs = list(partial.assignments)
        for edge, sign in zip(unfixed, choice):
            signs[edge] = sign
        total += char_poly(signed_adjacency(g, signs)).to_rational()
    return IntPoly.from_sympy(total)


_FREE = 0
_DONE = 1


def _add_scaled(
    states: Dict[Tuple[int, ...], List[int]],
    key: Tuple[int, ...],
    poly: List[int],
    factor: int = 1,
) -> None:
    target = states.get(key)
    if target is None:
        states[key] = [factor * c for c in poly]
        return
    if len(target) < len(poly):
        target.extend([0] * (len(poly) - len(target)))
    for i, c in enumerate(poly):
        target[i] += factor * c


class _SignedSubgraphSum:
    """Sum over completions of a partial signing, by elementary subgraphs.

    `det(xI - A_s)` expands over spanning subgraphs whose components are single edges
    and cycles: a single edge contributes `-1`, a cycle `-2` times the product of its
    signs, and every uncovered vertex a factor `x`. Averaged over uniform signs on the
    unfixed edges, a cycle through an unfixed edge cancels, so unfixed edges only
    appear as single edges.

    The sum is accumulated edge by edge along a reverse Cuthill-McKee vertex order.
    A state records, for every vertex on the frontier, whether it is free, covered, or
    the open end of a path of fixed edges together with the vertex at its other end.
    Each state carries its partial sum as integer coefficients in ascending degree.
    """

    def __init__(self, g: Graph, partial: PartialSigning):
        self.g = g
        self.signs = partial.assignments
        self.unfixed = len(partial.unfixed_edges)
        graph = to_networkx(g)
        self.order = list(reverse_cuthill_mckee_ordering(graph))
        self.position = {v: i for i, v in enumerate(self.order)}
        self.edge_index = {edge: i for i, edge in enumerate(g.edges)}
        self.neighbours = [sorted(graph[v], key=self.position.get) for v in self.order]
        self.last = [
            max([self.position[v]] + [self.position[w] for w in graph[v]])
            for v in self.order
        ]
        self.peak = 0

    def _sign(self, u: int, v: int) -> int:
        return self.signs[self.edge_index[(min(u, v), max(u, v))]]

    def _add_edge(
        self,
        states: Dict[Tuple[int, ...], List[int]],
        frontier: List[int],
        u: int,
        v: int,
    ) -> Dict[Tuple[int, ...], List[int]]:
        sign = self._sign(u, v)
        iu, iv = frontier.index(u), frontier.index(v)
        result: Dict[Tuple[int, ...], List[int]] = {}
        for state, poly in states.items():
            _add_scaled(result, state, poly)
            cu, cv = state[iu], state[iv]
            if cu == _FREE and cv == _FREE:
                single = list(state)
                single[iu] = single[iv] = _DONE
                _add_scaled(result, tuple(single), poly, -1)
            if sign == 0 or _DONE in (cu, cv):
                continue

            path = list(state)
            if cu == _FREE and cv == _FREE:
                path[iu], path[iv] = v + 2, u + 2
                _add_scaled(result, tuple(path), poly, sign)
            elif cu == _FREE or cv == _FREE:
                # extend the path ending at the covered one of u and v
                new, end = (u, v) if cu == _FREE else (v, u)
                inew, iend = frontier.index(new), frontier.index(end)
                other = state[iend] - 2
                path[inew] = other + 2
                path[iend] = _DONE
                path[frontier.index(other)] = new + 2
                _add_scaled(result, tuple(path), poly, sign)
            elif cu - 2 == v:
                path[iu] = path[iv] = _DONE
                _add_scaled(result, tuple(path), poly, -2 * sign)
            else:
                a, b = cu - 2, cv - 2
                path[iu] = path[iv] = _DONE
                path[frontier.index(a)] = b + 2
                path[frontier.index(b)] = a + 2
                _add_scaled(result, tuple(path), poly, sign)
        return result

    @staticmethod
    def _forget(
        states: Dict[Tuple[int, ...], List[int]], index: int
    ) -> Dict[Tuple[int, ...], List[int]]:
        result: Dict[Tuple[int, ...], List[int]] = {}
        for state, poly in states.items():
            code = state[index]
            if code > _DONE:
                continue
            key = state[:index] + state[index + 1 :]
            _add_scaled(result, key, [0] + poly if code == _FREE else poly)
        return result

    def coefficients(self) -> List[int]:
        states: Dict[Tuple[int, ...], List[int]] = {(): [1]}
        frontier: List[int] = []
        for i, v in enumerate(self.order):
            frontier.append(v)
            states = {state + (_FREE,): poly for state, poly in states.items()}
            for w in self.neighbours[i]:
                if self.position[w] < i:
                    states = self._add_edge(states, frontier, w, v)
            self.peak = max(self.peak, len(states))
            for w in [w for w in frontier if self.last[self.position[w]] == i]:
                states = self._forget(states, frontier.index(w))
                frontier.remove(w)

        (coefficients,) = states.values()
        return coefficients

    def total(self) -> IntPoly:
        coefficients = self.coefficients()
        logger.debug(
            "signed subgraph sum of %r peaked at %d frontier states",
            self.g,
            self.peak,
        )
        return IntPoly([c << self.unfixed for c in coefficients])


def conditional_expectation(
    g: Graph,
    partial: Union[PartialSigning, Sequence, None] = None,
    *,
    settings: Settings = DEFAULT_SETTINGS,
) -> IntPoly:
    """The sum of `det(xI - A_s)` over every signing `s` that agrees with `partial`
    on its fixed edges.

    This is `2**u` times the conditional expectation for uniformly random signs on
    the `u` unfixed edges; the scaling keeps the coefficients integral and leaves the
    roots alone. With nothing fixed it is `2**m` times the matching polynomial.

    Args:
        g: The graph.
        partial: Fixed signs; `0` or `None` entries are unfixed. By default nothing
            is fixed.

    Keyword Args:
        settings: With `settings.oracle` the completions are enumerated one by one.

    Raises:
        BudgetExceededError: if `g` is larger than `settings.max_vertices` or
            `settings.max_edges`, or, for the enumeration, has more unfixed edges than
            `settings.bruteforce_max_edges`.
    """
    partial = _as_partial(g, partial)
    if settings.oracle:
        _check_enumeration_budget(len(partial.unfixed_edges), settings)
        return _sum_over_completions(g, partial)

    if g.vertex_count > settings.max_vertices or g.edge_count > settings.max_edges:
        raise BudgetExceededError(
            f"{g!r} exceeds the budget of {settings.max_vertices} vertices and "
            f"{settings.max_edges} edges"
        )
    return _SignedSubgraphSum(g, partial).total()


def conditional_expectation_bruteforce(
    g: Graph,
    partial: Union[PartialSigning, Sequence, None] = None,
    *,
    settings: Settings = DEFAULT_SETTINGS,
) -> IntPoly:
    """[conditional_expectation][twolift.conditional_expectation] by enumerating the
    completions."""
    return conditional_expectation(
        g, partial, settings=settings.replace(oracle=True)
    )


def _integer_vectors(vectors: Sequence[Vector], n: int, name: str) -> List[List[int]]:
    result = []
    for i, vector in enumerate(vectors):
        entries = np.asarray(vector).tolist()
        if len(entries) != n:
            raise ValueError(
                f"{name}[{i}] has dimension {len(entries)}, expected {n}"
            )
        result.append([int(e) for e in entries])
    return result


def mixed_charpoly(
    a_vectors: Sequence[Vector],
    b_vectors: Sequence[Vector],
    p: Union[EdgeProbabilities, Sequence],
    diagonal: Sequence[int],
    *,
    check: bool = True,
    settings: Settings = DEFAULT_SETTINGS,
) -> Poly:
    """The mixed characteristic polynomial

    `sum over S of prod(p[i] for i in S) * prod(1 - p[i] for i not in S) *
    det(xI + D + sum(a_i a_i^T for i in S) + sum(b_i b_i^T for i not in S))`

    evaluated by enumerating all subsets `S`.

    Args:
        a_vectors: Integer vectors `a_i`.
        b_vectors: Integer vectors `b_i`, as many as `a_vectors`.
        p: Probabilities `p_i` of choosing `a_i`.
        diagonal: The non-negative diagonal of `D`; its length fixes the dimension.

    Keyword Args:
        check: Raise `CertificationError` if the result is not real-rooted.

    Returns:
        A sympy `Poly` in `x` over `QQ`.

    Raises:
        ValueError: on mismatched lengths or dimensions, or a negative diagonal.
        BudgetExceededError: if there are more than `settings.bruteforce_max_edges`
            vector pairs.
    """
    if isinstance(p, EdgeProbabilities):
        p = p.p
    p = EdgeProbabilities(p=p).p
    m = len(a_vectors)
    if len(b_vectors) != m or len(p) != m:
        raise ValueError(
            f"got {m} a-vectors, {len(b_vectors)} b-vectors and {len(p)} probabilities"
        )
    _check_enumeration_budget(m, settings)

    diagonal = [int(d) for d in diagonal]
    if any(d < 0 for d in diagonal):
        raise ValueError(f"diagonal entries must be non-negative, got {diagonal}")
    n = len(diagonal)
    a_vectors = _integer_vectors(a_vectors, n, "a_vectors")
    b_vectors = _integer_vectors(b_vectors, n, "b_vectors")
    outer_a = [np.outer(a, a) for a in a_vectors]
    outer_b = [np.outer(b, b) for b in b_vectors]

    total = Poly(0, X, domain=QQ)
    for chosen in itertools.product((True, False), repeat=m):
        weight = Fraction(1)
        matrix = np.diag(np.array(diagonal, dtype=object))
        for i, use_a in enumerate(chosen):
            weight *= p[i] if use_a else 1 - p[i]
            matrix = matrix + (outer_a[i] if use_a else outer_b[i])
        if weight == 0:
            continue
        # det(xI + M) is the characteristic polynomial of -M
        total += char_poly(-matrix).to_rational() * to_sympy_rational(weight)

    if check and not total.is_zero:
        if not is_real_rooted(IntPoly.clear_denominators(total)[1]):
            raise CertificationError(
                f"mixed characteristic polynomial {total} is not real-rooted"
            )
    return total


@dataclass(frozen=True)
class MixedInstance:
    """Vectors and diagonal that express a graph's expected characteristic polynomial
    as a mixed characteristic polynomial, up to the shift `x -> x - shift`."""

    a_vectors: Tuple[Tuple[int, ...], ...]
    b_vectors: Tuple[Tuple[int, ...], ...]
    diagonal: Tuple[int, ...]
    shift: int


def graph_mixed_instance(g: Graph) -> MixedInstance:
    """`a = e_u - e_v` and `b = e_u + e_v` for every edge `(u, v)`, and
    `D = d*I - diag(degrees)` with `d` the maximum degree.

    With these, `mixed_charpoly(a, b, p, D)` evaluated at `x - d` equals
    `expected_charpoly_bruteforce(g, p)`: choosing `a_i` gives edge `i` sign `+1`.
    """
    n = g.vertex_count
    a_vectors, b_vectors = [], []
    for u, v in g.edges:
        a = [0] * n
        b = [0] * n
        a[u], a[v] = 1, -1
        b[u], b[v] = 1, 1
        a_vectors.append(tuple(a))
        b_vectors.append(tuple(b))
    d = g.max_degree
    return MixedInstance(
        a_vectors=tuple(a_vectors),
        b_vectors=tuple(b_vectors),
        diagonal=tuple(d - degree for degree in g.degrees),
        shift=d,
    )


def _rational_matrix(rows) -> sympy.Matrix:
    return sympy.Matrix([[_exact(entry) for entry in row] for row in rows])


def _exact(value) -> sympy.Rational:
    rational = _as_rational(value)
    if rational is None:
        raise ValueError(f"expected an exact rational, got {value!r}")
    return to_sympy_rational(rational)


def det_operator_identity_check(A, a: Vector, b: Vector, p) -> bool:
    """Check the averaged matrix determinant lemma in exact rational arithmetic:

    `det(A) * (1 + p * a^T A^-1 a + (1 - p) * b^T A^-1 b)
    == p * det(A + a a^T) + (1 - p) * det(A + b b^T)`.

    Args:
        A: Invertible square matrix of exact rationals.
        a: Vector of exact rationals.
        b: Vector of exact rationals.
        p: Exact rational weight.

    Raises:
        ValueError: if `A` is not square or is singular, or a dimension does not
            match.
    """
    matrix = _rational_matrix(np.asarray(A, dtype=object).tolist())
    if not matrix.is_square:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
    n = matrix.rows
    a_col = sympy.Matrix([_exact(entry) for entry in a])
    b_col = sympy.Matrix([_exact(entry) for entry in b])
    if a_col.rows != n or b_col.rows != n:
        raise ValueError(f"vectors must have dimension {n}")
    weight = _exact(p)

    det = matrix.det(method="bareiss")
    if det == 0:
        raise ValueError("matrix is singular")
    inverse = matrix.inv()
    quad_a = (a_col.T * inverse * a_col)[0, 0]
    quad_b = (b_col.T * inverse * b_col)[0, 0]

    lhs = det * (1 + weight * quad_a + (1 - weight) * quad_b)
    rhs = weight * (matrix + a_col * a_col.T).det(method="bareiss") + (1 - weight) * (
        matrix + b_col * b_col.T
    ).det(method="bareiss")
    return lhs == rhs

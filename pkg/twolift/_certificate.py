"""Machine-checkable records of spectral claims
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from twolift._bounds import RootBound
from twolift._constants import COMPARISON, METHOD, VERDICT
from twolift._graph import Graph, Signing, bipartition, components, degree_profile
from twolift._poly import IsolatedRoot
from twolift._utils import format_rational


@dataclass(frozen=True)
class GraphSummary:
    vertex_count: int
    edge_count: int
    degrees: Dict[int, int]
    """Number of vertices of each degree."""

    bipartite: bool
    component_count: int

    @classmethod
    def of(cls, g: Graph) -> GraphSummary:
        return cls(
            vertex_count=g.vertex_count,
            edge_count=g.edge_count,
            degrees=degree_profile(g),
            bipartite=bipartition(g) is not None,
            component_count=len(components(g)),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.vertex_count,
            "m": self.edge_count,
            "degrees": {str(d): count for d, count in self.degrees.items()},
            "bipartite": self.bipartite,
            "components": self.component_count,
        }


@dataclass(frozen=True)
class EigenvalueInterval:
    """A certified interval holding exactly one distinct eigenvalue."""

    lo: Fraction
    hi: Fraction
    multiplicity: int
    trivial: bool = False

    @classmethod
    def from_root(
        cls, root: IsolatedRoot, multiplicity: int, trivial: bool = False
    ) -> EigenvalueInterval:
        return cls(root.lo, root.hi, multiplicity, trivial)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lo": format_rational(self.lo),
            "hi": format_rational(self.hi),
            "multiplicity": self.multiplicity,
            "trivial": self.trivial,
        }


@dataclass(frozen=True)
class TrailStep:
    """One step of the greedy descent."""

    edge: int
    """Index of the edge in the graph's edge list."""

    endpoints: Tuple[int, int]
    choice: int
    comparison: COMPARISON
    """Largest root of the `+1` branch compared with the `-1` branch."""

    descent: COMPARISON
    """Largest root of the chosen branch compared with its parent. Never `GREATER`."""

    interlacing: Optional[bool] = None
    """Whether the two branches have a common interlacing, if it was checked."""

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "edge": self.edge,
            "endpoints": list(self.endpoints),
            "choice": self.choice,
            "comparison": self.comparison.value,
            "descent": self.descent.value,
        }
        if self.interlacing is not None:
            result["interlacing"] = self.interlacing
        return result


def bound_to_dict(bound: RootBound) -> Dict[str, Any]:
    return {
        "kind": bound.kind.value,
        "parameters": list(bound.parameters),
        "minimal_poly": list(bound.minimal_poly.coefficients),
        "interval": [format_rational(bound.root.lo), format_rational(bound.root.hi)],
        "degenerate": bound.degenerate,
    }


@dataclass(frozen=True)
class BoundCheck:
    """A further bound the same spectrum was classified against."""

    name: str
    bound: RootBound
    verdict: VERDICT

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "bound": bound_to_dict(self.bound),
            "verdict": self.verdict.value,
        }


@dataclass(frozen=True)
class Certificate:
    """A graph, an algebraic bound, and the certified spectrum that was compared
    against it.

    For signings the spectrum is that of the signed adjacency matrix and `verdict`
    classifies its largest eigenvalue. For Ramanujan certification it is the full
    adjacency spectrum and `verdict` classifies the largest absolute value of a
    non-trivial eigenvalue.
    """

    graph: GraphSummary
    bound: RootBound
    eigenvalues: Tuple[EigenvalueInterval, ...]
    verdict: VERDICT
    method: METHOD
    trail: Tuple[TrailStep, ...] = ()
    checks: Tuple[BoundCheck, ...] = ()
    signing: Optional[Signing] = None
    two_sided: Optional[bool] = None
    """Whether the smallest eigenvalue is also at least `-bound`. Reported only."""

    approx: Optional[float] = None
    """Floating-point largest eigenvalue from numpy, as a cross-check. Never used for
    the verdict."""

    notes: Tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.verdict.passed

    def to_dict(self) -> Dict[str, Any]:
        """The JSON-ready form; every rational is a `"num/den"` string."""
        result: Dict[str, Any] = {
            "graph": self.graph.to_dict(),
            "bound": bound_to_dict(self.bound),
            "eigenvalues": [e.to_dict() for e in self.eigenvalues],
            "verdict": self.verdict.value,
            "method": self.method.value,
            "trail": [step.to_dict() for step in self.trail],
        }
        if self.checks:
            result["checks"] = [check.to_dict() for check in self.checks]
        if self.signing is not None:
            result["signing"] = list(self.signing.signs)
        if self.two_sided is not None:
            result["two_sided"] = self.two_sided
        if self.approx is not None:
            result["approx"] = self.approx
        if self.notes:
            result["notes"] = list(self.notes)
        return result

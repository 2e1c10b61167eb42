"""Towers of bipartite Ramanujan graphs built by repeated 2-lifts
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from twolift._bounds import RootBound, cover_bound
from twolift._certificate import Certificate
from twolift._config import DEFAULT_SETTINGS, Settings
from twolift._errors import BudgetExceededError, CertificationError
from twolift._graph import (
    Graph,
    Signing,
    biregular_degrees,
    complete_bipartite,
    degree_profile,
    two_lift,
)
from twolift._search import certify_ramanujan, find_good_signing
from twolift._serialization import (
    write_certificate,
    write_edge_list,
    write_family_summary,
    write_signing,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyBase:
    """The first graph of a family and the name it is reported under."""

    graph: Graph
    name: str

    @classmethod
    def regular(cls, d: int) -> FamilyBase:
        """The complete bipartite graph `K_{d,d}`."""
        if d < 1:
            raise ValueError(f"degree must be at least 1, got {d}")
        return cls(complete_bipartite(d, d), f"regular({d})")

    @classmethod
    def biregular(cls, c: int, d: int) -> FamilyBase:
        """The complete bipartite graph with `d` vertices of degree `c` on the left
        and `c` vertices of degree `d` on the right."""
        if c < 1 or d < 1:
            raise ValueError(f"degrees must be at least 1, got ({c}, {d})")
        return cls(complete_bipartite(d, c), f"biregular({c}, {d})")

    @classmethod
    def from_graph(cls, g: Graph, name: str = "custom") -> FamilyBase:
        """Any regular or biregular bipartite graph.

        Raises:
            ValueError: if `g` is not bipartite with a closed-form cover bound.
        """
        if g.edge_count == 0 or biregular_degrees(g) is None:
            raise ValueError(
                f"{g!r} is not a regular or biregular bipartite graph with edges"
            )
        return cls(g, name)


@dataclass(frozen=True)
class FamilyStep:
    index: int
    graph: Graph
    certificate: Certificate
    """Certification of `graph` against the base graph's cover bound."""

    signing: Optional[Signing] = None
    """The signing that lifts `graph` to the next step. `None` on the last step."""

    signing_certificate: Optional[Certificate] = None
    paths: Dict[str, Path] = field(default_factory=dict)
    """Files written for this step, keyed by artifact kind."""


@dataclass(frozen=True)
class FamilyRun:
    base: FamilyBase
    bound: RootBound
    steps: Tuple[FamilyStep, ...]
    out_dir: Optional[Path] = None

    @property
    def passed(self) -> bool:
        return all(step.certificate.passed for step in self.steps)

    @property
    def graphs(self) -> Tuple[Graph, ...]:
        return tuple(step.graph for step in self.steps)


def _as_base(base: Union[FamilyBase, Graph]) -> FamilyBase:
    if isinstance(base, FamilyBase):
        return base
    return FamilyBase.from_graph(base)


def _check_lift(g: Graph, lift: Graph) -> None:
    doubled = {degree: 2 * count for degree, count in degree_profile(g).items()}
    if (
        lift.vertex_count != 2 * g.vertex_count
        or lift.edge_count != 2 * g.edge_count
        or degree_profile(lift) != doubled
    ):
        raise CertificationError(f"the 2-lift {lift!r} of {g!r} is malformed")


def _write_step(step: FamilyStep, out_dir: Path) -> Dict[str, Path]:
    k = step.index
    paths = {
        "graph": out_dir / f"graph_{k}.el",
        "certificate": out_dir / f"certificate_{k}.json",
    }
    write_edge_list(step.graph, paths["graph"])
    write_certificate(step.certificate, paths["certificate"])
    if step.signing is not None:
        paths["signing"] = out_dir / f"signing_{k}.sign"
        write_signing(step.signing, paths["signing"])
    if step.signing_certificate is not None:
        paths["descent"] = out_dir / f"descent_{k}.json"
        write_certificate(step.signing_certificate, paths["descent"])
    return paths


def run_family(
    base: Union[FamilyBase, Graph],
    steps: int,
    out_dir: Union[str, Path, None] = None,
    *,
    settings: Settings = DEFAULT_SETTINGS,
) -> FamilyRun:
    """Build a tower of `steps` successive 2-lifts of a bipartite Ramanujan graph.

    Every graph in the tower is certified against the cover bound of `base`, which
    all of its lifts share. Each graph except the last is signed with
    [find_good_signing][twolift.find_good_signing] and lifted with that signing.

    **Example:**

    ```py
    from twolift import FamilyBase, run_family

    run = run_family(FamilyBase.regular(3), 2, "runs/d3")
    assert [g.vertex_count for g in run.graphs] == [6, 12, 24]
    ```

    Args:
        base: A [FamilyBase][twolift.FamilyBase], or a regular or biregular bipartite
            graph.
        steps: Number of lifts.
        out_dir: When given, the directory receives `graph_{k}.el`,
            `certificate_{k}.json`, `signing_{k}.sign` and `descent_{k}.json` for
            every step `k`, and a `summary.parquet` table. It is created if needed.

    Keyword Args:
        settings: Budgets and switches; `settings.max_family_steps` caps `steps`.

    Raises:
        BudgetExceededError: if `steps` exceeds `settings.max_family_steps` or a graph
            outgrows the search budget.
        CertificationError: if a graph of the tower fails its certificate. The
            exception carries the failing certificate.
    """
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    if steps > settings.max_family_steps:
        raise BudgetExceededError(
            f"{steps} lift steps exceed the budget of {settings.max_family_steps}"
        )

    base = _as_base(base)
    bound = cover_bound(base.graph)
    directory = None
    if out_dir is not None:
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)

    records = []
    g = base.graph
    for k in range(steps + 1):
        certificate = certify_ramanujan(g, bound, settings=settings)
        logger.info(
            "%s step %d: %d vertices, %d edges, %s",
            base.name,
            k,
            g.vertex_count,
            g.edge_count,
            certificate.verdict.value,
        )
        if not certificate.passed:
            raise CertificationError(
                f"step {k} of the {base.name} family is not Ramanujan: {g!r}",
                certificate,
            )

        signing = signing_certificate = lift = None
        if k < steps:
            signing, signing_certificate = find_good_signing(g, settings=settings)
            lift = two_lift(g, signing)
            _check_lift(g, lift)

        step = FamilyStep(k, g, certificate, signing, signing_certificate)
        if directory is not None:
            step.paths.update(_write_step(step, directory))
        records.append(step)
        if lift is not None:
            g = lift

    run = FamilyRun(base, bound, tuple(records), directory)
    if directory is not None:
        write_family_summary(run, directory / "summary.parquet")

    logger.info("%s family certified up to %r", base.name, g)
    return run

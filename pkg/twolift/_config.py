from __future__ import annotations

import traitlets

from twolift._base import BaseModel
from twolift._constants import DEFAULT_PRECISION
from twolift.traits import RationalTrait


class Settings(BaseModel):
    """Budgets and switches shared by the search, expectation and family modules.

    **Example:**

    ```py
    from twolift import Settings, find_good_signing

    settings = Settings(max_edges=60, check_interlacing=True)
    signing, certificate = find_good_signing(graph, settings=settings)
    ```
    """

    precision = RationalTrait(DEFAULT_PRECISION, positive=True)
    """
    Width of the certified eigenvalue intervals written into certificates.

    - Type: `Fraction`
    - Default: `2**-32`
    """

    max_vertices = traitlets.Int(24, min=1)
    """
    Largest vertex count the greedy descent accepts.

    - Type: `int`
    - Default: `24`
    """

    max_edges = traitlets.Int(40, min=0)
    """
    Largest edge count the greedy descent accepts.

    - Type: `int`
    - Default: `40`
    """

    bruteforce_max_edges = traitlets.Int(20, min=0, max=30)
    """
    Largest edge count for operations that enumerate all `2**m` signings or subsets.

    - Type: `int`
    - Default: `20`
    """

    exhaustive_max_edges = traitlets.Int(16, min=0, max=30)
    """
    Largest edge count for `exhaustive_best_signing`.

    - Type: `int`
    - Default: `16`
    """

    path_tree_cap = traitlets.Int(50_000, min=1)
    """
    Largest path tree (in vertices) that `build_path_tree` will construct.

    - Type: `int`
    - Default: `50000`
    """

    check_interlacing = traitlets.Bool(False)
    """
    When `True`, every greedy step also decides whether the two sibling polynomials
    have a common interlacing and records the answer in the trail.

    - Type: `bool`
    - Default: `False`
    """

    shuffle_seed = traitlets.Int(None, allow_none=True)
    """
    Seed for a random edge processing order in the greedy descent. `None` keeps the
    canonical edge-list order.

    - Type: `int`, optional
    - Default: `None`
    """

    oracle = traitlets.Bool(False)
    """
    Force brute-force enumeration wherever a faster algorithm exists.

    - Type: `bool`
    - Default: `False`
    """

    max_family_steps = traitlets.Int(2, min=0)
    """
    Number of lift steps `run_family` performs before refusing.

    - Type: `int`
    - Default: `2`
    """

    def replace(self, **changes) -> "Settings":
        """Return a copy with some values changed."""
        values = {name: getattr(self, name) for name in self.trait_names()}
        values.update(changes)
        return Settings(**values)


DEFAULT_SETTINGS = Settings()

from __future__ import annotations

from typing import List, Sequence, Union

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from twolift._poly.intpoly import IntPoly, _to_int

IntMatrix = Union[np.ndarray, Sequence[Sequence[int]]]


def _square_rows(matrix: IntMatrix) -> List[List[int]]:
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
        matrix = matrix.tolist()

    rows = [list(row) for row in matrix]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(
                f"expected a square matrix, row {i} has {len(row)} entries not {n}"
            )
    return [[_to_int(entry) for entry in row] for row in rows]


def char_poly(matrix: IntMatrix) -> IntPoly:
    """The characteristic polynomial `det(x*I - M)` of a square integer matrix.

    Computed exactly over the integers by sympy's division-free Berkowitz algorithm
    on a `DomainMatrix`; a `0 x 0` matrix has characteristic polynomial `1`.

    Args:
        matrix: Square integer matrix, as a numpy array or nested sequences.

    Raises:
        ValueError: if the matrix is not square.
    """
    rows = _square_rows(matrix)
    n = len(rows)
    if n == 0:
        return IntPoly([1])
    dm = DomainMatrix([[ZZ(entry) for entry in row] for row in rows], (n, n), ZZ)
    descending = dm.charpoly()
    return IntPoly(int(c) for c in reversed(descending))

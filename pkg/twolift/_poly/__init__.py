"""Exact polynomial arithmetic and real-root certification
"""

from .charpoly import char_poly
from .interlacing import (
    common_interlacing,
    convex_combination,
    convex_combination_check,
    interlaces,
)
from .intpoly import X, IntPoly
from .roots import (
    IsolatedRoot,
    RootIsolation,
    compare_largest_roots,
    is_real_rooted,
    isolate_roots,
    largest_root,
    order_roots,
    smallest_root,
)
from .sturm import SturmChain, sturm_chain

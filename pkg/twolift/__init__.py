from . import traits
from ._bounds import (
    RootBound,
    biregular_bound,
    compare_absolute_roots_to_bound,
    compare_root_to_bound,
    cover_bound,
    custom_bound,
    regular_bound,
)
from ._certificate import Certificate, EigenvalueInterval, GraphSummary, TrailStep
from ._config import DEFAULT_SETTINGS, Settings
from ._constants import BOUND_KIND, COMPARISON, METHOD, SIDE, VERDICT
from ._errors import (
    BudgetExceededError,
    CertificationError,
    FormatError,
    NotRealRootedError,
    TwoliftError,
)
from ._expectation import (
    EdgeProbabilities,
    MixedInstance,
    conditional_expectation,
    conditional_expectation_bruteforce,
    det_operator_identity_check,
    expected_charpoly_bruteforce,
    graph_mixed_instance,
    mixed_charpoly,
)
from ._family import FamilyBase, FamilyRun, FamilyStep, run_family
from ._graph import (
    Bipartition,
    Graph,
    PartialSigning,
    Signing,
    adjacency_matrix,
    bipartition,
    biregular_degrees,
    complete_bipartite,
    components,
    degree_profile,
    double_cover,
    from_networkx,
    is_regular,
    regular_degree,
    signed_adjacency,
    to_networkx,
    two_lift,
)
from ._matching import (
    MatchingCounts,
    matching_counts,
    matching_counts_bruteforce,
    matching_polynomial,
    matching_root_bound,
)
from ._path_tree import (
    PathTree,
    build_path_tree,
    divisibility_check,
    path_tree_bound_verdict,
    tree_characteristic_polynomial,
    tree_spectral_radius,
)
from ._poly import (
    IntPoly,
    IsolatedRoot,
    RootIsolation,
    SturmChain,
    char_poly,
    common_interlacing,
    compare_largest_roots,
    convex_combination,
    convex_combination_check,
    interlaces,
    is_real_rooted,
    isolate_roots,
    largest_root,
    smallest_root,
)
from ._search import certify_ramanujan, exhaustive_best_signing, find_good_signing
from ._serialization import (
    family_summary_table,
    format_edge_list,
    format_polynomial,
    format_signing,
    parse_edge_list,
    parse_polynomial,
    parse_signing,
    read_edge_list,
    read_polynomial,
    read_signing,
    write_certificate,
    write_edge_list,
    write_family_summary,
    write_signing,
)
from ._version import __version__

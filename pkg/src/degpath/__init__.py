"""Equal-degree path-of-length-ell extremal problem at desk scale:
detection, exhaustive non-isomorphic enumeration, certificate checking of
the counting identities and lemma inequalities, and the degree-sum
maximization for the even-order dichotomy."""

from .graphs import (
    Graph,
    GraphError,
    Graph6Error,
    build_graph,
    complement,
    block_counts,
    degree_sequence,
    complete_bipartite,
    half_graph,
    graph6_encode,
    graph6_decode,
    bitmask,
    bits,
)
from .detect import (
    Witness,
    find_equal_degree_path3,
    find_equal_degree_path,
    path3_exists_between,
    verify_witness,
    is_property_free,
)
from .certify import (
    CertificateError,
    Violation,
    equal_degree_pairs,
    repeated_degree_max,
    PairPartition,
    SecondLevelPartition,
    CertificateReport,
    CheckRecord,
    pair_partition,
    check_graph,
    check_zero_blocks,
    check_complement_identity,
    check_c_lemma,
    check_global_lemmas,
    second_level_partition,
)
from .lambdaopt import (
    LambdaInstance,
    lambda_closed,
    lambda_bruteforce,
    lambda_naive,
    appendix_split,
    domain_grid,
)
from .canon import (
    CanonicalForm,
    canonical_form,
    are_isomorphic,
    enumerate_graphs,
    set_workers,
)
from .search import (
    SearchResult,
    ExtremalTable,
    compute_extremal,
    verify_theorem,
    certificate_sweep,
    build_table,
    sharpness_exceptions,
    property_free_graphs,
)

__version__ = "0.1.0"

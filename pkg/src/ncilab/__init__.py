"""Exact toolkit for squarefree monomial ideals viewed as minimal hypergraphs.

Decide complete-intersection and nearly-complete-intersection status by
independent routes, manipulate hypergraphs and their weighted-graph
collapses, and compute or decompose graded Betti tables exactly.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    DegreeTooLow,
    Disconnected,
    EmptyIdeal,
    EmptyTable,
    NcilabError,
    NotAHyperedge,
    NotJoinable,
    NotNci,
    NotSquarefree,
    ParseError,
    SchemaError,
    TooSmall,
    UnitIdeal,
    UnknownVertex,
)
from .hypergraph import (
    Hypergraph,
    enlarge_edges,
    induced_sub,
    invert,
    min_reduce,
    skeleton,
    two_neighbors,
    weak_induced_sub,
)
from .ideals import (
    MonomialIdeal,
    parse_ideal,
    render_ideal,
    substitute_one,
    to_hypergraph,
    to_ideal,
)
from .weighted import (
    JoinabilityReport,
    WeightedGraph,
    check_joinable,
    is_ci_weighted,
    is_nci_weighted,
    join_all,
    join_at,
    splay,
    weighted_isomorphic,
)
from .nci import (
    NciVerdict,
    enumerate_small,
    is_ci,
    is_nci_definitional,
    is_nci_graph_miller_stone,
    is_nci_structural,
)
from .homology import SimplicialComplex
from .betti import (
    IDEAL,
    QUOTIENT,
    BettiTable,
    betti_table,
    koszul_table,
    pdim,
    principal_table,
    reg,
    render_betti,
    shift_by_degree,
)
from .splittings import (
    DecompositionReport,
    SplittingFunction,
    canonical_splitting_function,
    decompose_nci,
    intersect_ideals,
    intersect_principal,
    pdim_splitting_bound,
    verify_betti_splitting,
    verify_splitting,
)
from .matchings import gn_family, ind_match, matching_number, min_match

__all__ = [name for name in dir() if not name.startswith("_")]

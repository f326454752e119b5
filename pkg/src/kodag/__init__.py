"""Cobweb posets as orderable DAGs: construction, dim-2 realizers and
brute-force cross-checks."""
from .cobweb import (
    CobwebTruncation,
    LevelSequence,
    Vertex,
    build_truncation,
    chain_x,
    chain_y,
    cobweb_edges,
    delete_arcs,
    di_biclique,
    poset_leq,
    poset_matrix,
    realizer,
    sequence_parse,
)
from .digraph import (
    Chain,
    Digraph,
    FailureReason,
    OdagResult,
    ReachMatrix,
    Relation,
    chain_intersection,
    conjugate_chain,
    enumerate_linear_extensions,
    hasse_from_relation,
    is_admissible,
    is_dag,
    is_linear_extension,
    is_odag,
    is_regular,
    reachability,
    transitive_reduction,
)
from .errors import KodagError

__version__ = "0.1.0"

"""Exact zero forcing numbers, corona and lexicographic products, and claim checking."""

from .errors import BudgetError, DomainError, FormatError, InputError, LoopError, ZeroForceError
from .families import (
    FamilySpec,
    complete,
    cycle,
    empty,
    fan,
    graph_from_spec,
    labeled_trees,
    parse_family_spec,
    path,
    single_edge,
    star,
    tree_from_pruefer,
    tree_shapes,
    wheel,
)
from .forcing import (
    ForceTrace,
    ZfsResult,
    closure,
    is_zero_forcing_set,
    verify_trace,
    zero_forcing_number_exact,
    zero_forcing_number_restricted,
)
from .graph import (
    Atom,
    CoronaNode,
    Graph,
    PairNode,
    Tagged,
    connected_components,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    from_edge_list,
    join,
    parse_edge_list,
    parse_graph6,
)
from .products import (
    CoronaGraph,
    LexGraph,
    corona,
    corona_copy,
    iterated_corona,
    lex_column,
    lex_layer,
    lexicographic,
    project,
)
from .trees import (
    TreeMetrics,
    compute_tree_metrics,
    metric_dimension_bruteforce,
    metric_dimension_tree,
    zt_hypothesis,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

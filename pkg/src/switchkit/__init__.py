"""Seidel switching toolkit.

Graph switching and its algebra, switching-class enumeration, recognizers
for lower switching classes, polynomial algorithms for upper switching
classes (checked against brute-force oracles), and the NAE-SAT hardness
constructions targeting induced P10/C7.
"""

from .canonical import (
    CanonicalForm,
    SwitchingClass,
    are_isomorphic,
    are_switching_equivalent,
    canonical_form,
    canonical_graph,
    switching_class,
)
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    MalformedGraph6,
    NotVariableOnly,
    SizeMismatch,
    SwitchkitError,
    TooLarge,
)
from .graph import Graph, VertexSet, complement, disjoint_union, induced, is_module, switch
from .graphio import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .lower import (
    LowerClassId,
    is_block_lower,
    is_c0_member,
    is_line_lower,
    is_lower_outerplanar,
    lower_family,
    recognize_lower,
)
from .minors import has_minor
from .nae import Assignment, NaeFormula, format_nae, nae_eval, pad_nae, parse_nae
from .oracle import oracle_lower, oracle_upper, oracle_upper_all
from .patterns import pattern, pattern_names
from .profiles import (
    Profile,
    concrete_profile,
    match_profile_family,
    matches_profile_family,
    profile_graph,
)
from .reductions import (
    ReductionInstance,
    assignment_to_switching_set,
    build_c7_instance,
    build_p10_instance,
    switching_set_to_assignment,
    verify_instance,
)
from .search import (
    PatternFamily,
    contains_induced,
    expand_switch_family,
    find_induced_cycle,
    find_induced_path,
    is_family_free,
)
from .split import (
    PqSplitPartition,
    PseudoSplitPartition,
    SplitPartition,
    is_pseudo_split,
    is_split,
    pq_split_partitions,
    pseudo_split_partition,
    split_partitions,
)
from .upper import (
    enumerate_upper_pseudo_split,
    enumerate_upper_split,
    is_bipartite_chain,
    upper_bipartite,
    upper_bipartite_chain,
    upper_complete_multipartite,
    upper_paw_free,
    upper_pseudo_split,
    upper_split,
    upper_star_costar,
    upper_triangle_free,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""Exact kernel vectors of graph Seidel matrices.

The Seidel matrix of a graph is ``S = J - I - 2A``.  When it is singular
its kernel is spanned by a unique primitive integer vector ``phi``.  This
package computes ``phi`` exactly, checks the congruences it must obey,
builds graph families with large kernel entries, and scans free trees
for singular Seidel matrices.
"""
from .analysis import (
    CongruenceReport,
    FilterVerdict,
    PhiVector,
    Verdict,
    check_edge_bounds,
    check_kernel_balance,
    check_leaf_odd_count,
    check_odd_entries,
    check_pair_congruences,
    check_tree_residues,
    invariant_violations,
    phi,
    pm_one_from_regular,
    prefilter_singularity,
    regular_switch_witness,
)
from .errors import (
    Graph6Error,
    NoWitness,
    NotApplicable,
    NullityError,
    OrderError,
    SeidelError,
)
from .families import (
    FamilySpec,
    family_cycle_leaves,
    family_G,
    family_H,
    family_p4_union,
)
from .graph import (
    Graph,
    VertexSet,
    complement,
    complete,
    cycle,
    degrees,
    disjoint_union,
    empty,
    even_representative,
    is_even_graph,
    is_regular,
    odd_vertices,
    path,
    switch,
)
from .graph6 import encode_graph6, parse_graph6
from .linalg import (
    DEFAULT_PRIME,
    IntMatrix,
    PrimitiveVector,
    kernel_primitive,
    rank_exact,
    rank_lower_bound_mod_p,
    seidel_matrix,
)
from .search import ScanReport, StageConfig, enumerate_trees, random_regular, scan

__version__ = "0.1.0"

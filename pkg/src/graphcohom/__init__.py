"""Exact bigraded cohomology of finite multigraphs over the integers.

The graded Euler characteristic of these groups is the chromatic polynomial
evaluated at 1 + q; everything is computed with exact integer arithmetic.
"""

from .graphs import (
    ComponentPartition,
    Graph,
    LoopContractionError,
    ParseError,
    SimplifyResult,
    components,
    contract_edge,
    cycle_graph,
    delete_edge,
    disjoint_union,
    null_graph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    permute_edge_order,
    simplify,
)
from .matrices import SparseIntMatrix, matmul
from .intlinalg import (
    SmithForm,
    divisibility_chain,
    integral_column_span_contains,
    integral_kernel_basis,
    rank_over_rationals,
    smith_normal_form,
)
from .poly import IntPoly, TwoVarPoly, format_poly, format_two_var_poly
from .states import (
    DEFAULT_EDGE_BUDGET,
    BasisIndex,
    CapacityError,
    EnhancedState,
    apply_edge,
    cube_sign_crosscheck,
    differential,
    dump_differentials,
    enumerate_basis,
    verify_d_squared,
)
from .homology import (
    AbelianGroup,
    TRIVIAL_GROUP,
    BigradedGroups,
    chain_level_euler,
    cohomology,
    direct_sum,
    graded_dimension,
    graded_euler_characteristic,
    group_from_cyclic_orders,
    poincare_polynomial,
)
from .chromatic import (
    chromatic_deletion_contraction,
    chromatic_state_sum,
    substitute_one_plus_q,
)
from .oracles import (
    check_chain_ses,
    check_kunneth,
    check_les_rank_consistency,
    check_pendant_shift,
    cycle_cohomology,
    kunneth_compose,
    null_cohomology,
    tensor_group,
    tor_group,
    tree_cohomology,
)

__version__ = "0.1.0"

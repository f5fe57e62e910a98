"""Closed-form cohomology for graph families and exact-sequence checks.

These are the structural facts the computed groups must reproduce: the
formulas for edgeless graphs, trees and polygons, the Kunneth composition
over disjoint unions, the pendant-edge degree shift, and the short exact
sequence of complexes attached to deleting/contracting one edge.  Each
``check_*`` returns a plain bool; the ``*_report`` variants additionally
name the first failing position for CLI output.
"""

from __future__ import annotations

from math import comb, gcd

from .graphs import (
    Graph,
    contract_edge,
    delete_edge,
    disjoint_union,
    permute_edge_order,
)
from .homology import (
    AbelianGroup,
    BigradedGroups,
    cohomology,
    group_from_cyclic_orders,
)
from .intlinalg import (
    integral_column_span_contains,
    integral_kernel_basis,
    smith_normal_form,
)
from .matrices import SparseIntMatrix, matmul
from .states import BasisIndex, EnhancedState, differential, enumerate_basis

__all__ = [
    "tensor_group",
    "tor_group",
    "kunneth_compose",
    "null_cohomology",
    "tree_cohomology",
    "cycle_cohomology",
    "check_pendant_shift",
    "check_chain_ses",
    "check_les_rank_consistency",
    "pendant_report",
    "ses_report",
    "les_report",
    "kunneth_report",
]


def tensor_group(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    """Tensor product over Z of two finitely generated abelian groups."""
    orders = []
    for d in a.torsion:
        orders.extend([d] * b.free_rank)
    for e in b.torsion:
        orders.extend([e] * a.free_rank)
    for d in a.torsion:
        for e in b.torsion:
            orders.append(gcd(d, e))
    return group_from_cyclic_orders(a.free_rank * b.free_rank, orders)


def tor_group(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    """Tor over Z: free parts contribute nothing, cyclic pairs give gcds."""
    orders = [gcd(d, e) for d in a.torsion for e in b.torsion]
    return group_from_cyclic_orders(0, orders)


def kunneth_compose(h1: BigradedGroups, h2: BigradedGroups) -> BigradedGroups:
    """Predicted cohomology of a disjoint union from the two factors.

    Tensor terms land at the sum of the bidegrees; Tor terms drop the height
    by one: H^{i,j} collects tensor parts with p+q = i and Tor parts with
    p+q = i+1, both with s+t = j.
    """
    orders: dict[tuple[int, int], list[int]] = {}
    free: dict[tuple[int, int], int] = {}

    def add(key: tuple[int, int], grp: AbelianGroup) -> None:
        if grp.is_trivial():
            return
        free[key] = free.get(key, 0) + grp.free_rank
        orders.setdefault(key, []).extend(grp.torsion)

    for (p, s), g1 in h1.items():
        for (q, t), g2 in h2.items():
            add((p + q, s + t), tensor_group(g1, g2))
            add((p + q - 1, s + t), tor_group(g1, g2))
    keys = set(free) | set(orders)
    return BigradedGroups({
        key: group_from_cyclic_orders(free.get(key, 0), orders.get(key, ()))
        for key in keys
    })


def null_cohomology(vertex_count: int) -> BigradedGroups:
    """The edgeless graph: everything sits at height 0 with binomial ranks."""
    if vertex_count < 0:
        raise ValueError("vertex count must be non-negative")
    return BigradedGroups({
        (0, j): AbelianGroup(comb(vertex_count, j))
        for j in range(vertex_count + 1)
    })


def tree_cohomology(edge_count: int) -> BigradedGroups:
    """Any tree with n edges: one Z in degree n and one in degree n+1."""
    if edge_count < 0:
        raise ValueError("edge count must be non-negative")
    return BigradedGroups({
        (0, edge_count): AbelianGroup(1),
        (0, edge_count + 1): AbelianGroup(1),
    })


def cycle_cohomology(edge_count: int) -> BigradedGroups:
    """The polygon with n >= 1 edges.

    Height 0 carries Z in degree n, plus Z in degree n-1 when n is even;
    height i >= 1 with r = n - i >= 2 carries Z_2 in degree r plus Z in
    degree r-1 when r is even, and Z in degree r when r is odd.  The
    one-edge polygon (a loop) is entirely trivial.
    """
    n = edge_count
    if n < 1:
        raise ValueError("a polygon needs at least one edge")
    groups: dict[tuple[int, int], AbelianGroup] = {}
    if n == 1:
        return BigradedGroups({})
    if n % 2 == 0:
        groups[(0, n)] = AbelianGroup(1)
        groups[(0, n - 1)] = AbelianGroup(1)
    else:
        groups[(0, n)] = AbelianGroup(1)
    for i in range(1, n):
        r = n - i
        if r < 2:
            continue
        if r % 2 == 0:
            groups[(i, r)] = AbelianGroup(0, (2,))
            groups[(i, r - 1)] = AbelianGroup(1)
        else:
            groups[(i, r)] = AbelianGroup(1)
    return BigradedGroups(groups)


def _first_mismatch(actual: BigradedGroups, expected: BigradedGroups):
    keys = sorted(set(dict(actual.items())) | set(dict(expected.items())))
    for key in keys:
        if actual.group(*key) != expected.group(*key):
            return {
                "i": key[0],
                "j": key[1],
                "actual": str(actual.group(*key)),
                "expected": str(expected.group(*key)),
            }
    return None


def pendant_report(g: Graph, e: int, budget: int | None = None):
    """Check H(g) == H(g/e) with degrees shifted up by one.

    e must be a pendant edge: not a loop, with at least one endpoint of
    degree 1.  Returns None on success, else the first failing bidegree.
    """
    a, b = g.edges[e]
    deg = g.degrees()
    if a == b or (deg[a] != 1 and deg[b] != 1):
        raise ValueError(f"edge {e} is not a pendant edge")
    actual = cohomology(g, budget)
    expected = cohomology(contract_edge(g, e), budget).degree_shifted(1)
    return _first_mismatch(actual, expected)


def check_pendant_shift(g: Graph, e: int, budget: int | None = None) -> bool:
    return pendant_report(g, e, budget) is None


def _move_edge_last(g: Graph, e: int) -> Graph:
    n = g.edge_count
    sigma = [k if k < e else k - 1 for k in range(n)]
    sigma[e] = n - 1
    return permute_edge_order(g, sigma)


def _alpha_block(g_last: Graph, gc: Graph, bg: BasisIndex, bc: BasisIndex,
                 hi: int, i: int, j: int) -> SparseIntMatrix:
    """Inclusion C^{i-1,j}(G/e) -> C^{i,j}(G), with e ordered last in G.

    A state of G/e maps to the same edge subset plus e; its coloring is
    carried through the component correspondence induced by contraction
    (G/e keeps the smaller endpoint, vertices above ``hi`` shift down).
    """
    n = g_last.edge_count
    sources = bc.states(i - 1, j) if i >= 1 else []
    entries = []
    for col, (mask, coloring) in enumerate(sources):
        big_mask = mask | 1 << (n - 1)
        part_c = bc.partitions[mask]
        part_g = bg.partitions[big_mask]
        id_map = [-1] * part_c.count
        for w in range(len(part_c.component_of)):
            old = part_c.component_of[w]
            if id_map[old] < 0:
                id_map[old] = part_g.component_of[w if w < hi else w + 1]
        new_coloring = 0
        m = coloring
        while m:
            low = m & -m
            new_coloring |= 1 << id_map[low.bit_length() - 1]
            m ^= low
        row = bg.position[EnhancedState(big_mask, new_coloring)]
        entries.append((row, col, 1))
    return SparseIntMatrix(bg.size(i, j), len(sources), tuple(entries))


def _beta_block(bg: BasisIndex, bd: BasisIndex, n: int, i: int, j: int) -> SparseIntMatrix:
    """Projection C^{i,j}(G) -> C^{i,j}(G-e): kill states containing e,
    keep the rest verbatim (e is last, so masks and colorings carry over)."""
    sources = bg.states(i, j)
    entries = []
    for col, (mask, coloring) in enumerate(sources):
        if mask >> (n - 1) & 1:
            continue
        row = bd.position[EnhancedState(mask, coloring)]
        entries.append((row, col, 1))
    return SparseIntMatrix(bd.size(i, j), len(sources), tuple(entries))


def ses_report(g: Graph, e: int, budget: int | None = None):
    """Verify the short exact sequence of complexes for one non-loop edge:

        0 -> C^{i-1,j}(G/e) --alpha--> C^{i,j}(G) --beta--> C^{i,j}(G-e) -> 0

    with e reordered last.  In every bidegree this checks that alpha and
    beta commute with the differentials, alpha is injective, beta is
    surjective over Z, beta o alpha = 0, ranks add up, and every integral
    kernel generator of beta lies in the integral column span of alpha.
    Returns None on success, else the first failure.
    """
    from .states import DEFAULT_EDGE_BUDGET

    budget = DEFAULT_EDGE_BUDGET if budget is None else budget
    a, b = g.edges[e]
    if a == b:
        raise ValueError(f"edge {e} is a loop; the sequence needs a non-loop edge")
    g_last = _move_edge_last(g, e)
    n = g_last.edge_count
    gd = delete_edge(g_last, n - 1)
    gc = contract_edge(g_last, n - 1)
    hi = max(g_last.edges[n - 1])
    bg = enumerate_basis(g_last, budget)
    bd = enumerate_basis(gd, budget)
    bc = enumerate_basis(gc, budget)

    heights = range(n + 1)
    degrees = range(g.vertex_count + 1)
    for i in heights:
        for j in degrees:
            if not (bg.size(i, j) or bc.size(i - 1, j) or bd.size(i, j)):
                continue

            def fail(reason: str):
                return {"i": i, "j": j, "reason": reason}

            alpha = _alpha_block(g_last, gc, bg, bc, hi, i, j)
            beta = _beta_block(bg, bd, n, i, j)
            if not matmul(beta, alpha).is_zero():
                return fail("beta o alpha is nonzero")
            rank_alpha = smith_normal_form(alpha).rank
            if rank_alpha != alpha.cols:
                return fail("alpha is not injective")
            beta_smith = smith_normal_form(beta)
            if beta_smith.rank != beta.rows or any(d != 1 for d in beta_smith.invariant_factors):
                return fail("beta is not surjective over Z")
            if rank_alpha + beta_smith.rank != bg.size(i, j):
                return fail("ranks of alpha and beta do not fill the middle term")
            kernel = integral_kernel_basis(beta)
            if not integral_column_span_contains(alpha, kernel):
                return fail("kernel of beta is not contained in the image of alpha")
            # the squares with the differentials
            if i < n:
                d_g = differential(g_last, bg, i, j)
                if i >= 1:
                    lhs = matmul(d_g, alpha)
                    rhs = matmul(
                        _alpha_block(g_last, gc, bg, bc, hi, i + 1, j),
                        differential(gc, bc, i - 1, j),
                    )
                    if lhs != rhs:
                        return fail("alpha does not commute with the differentials")
                if i <= n - 1:
                    lhs = matmul(differential(gd, bd, i, j), beta)
                    rhs = matmul(_beta_block(bg, bd, n, i + 1, j), d_g)
                    if lhs != rhs:
                        return fail("beta does not commute with the differentials")
    return None


def check_chain_ses(g: Graph, e: int, budget: int | None = None) -> bool:
    return ses_report(g, e, budget) is None


def les_report(g: Graph, e: int, budget: int | None = None):
    """Rank bookkeeping forced by the long exact sequence.

    For each degree j, the alternating sum over i of
    rank H^{i,j}(G) - rank H^{i,j}(G-e) + rank H^{i,j}(G/e) must vanish.
    Returns None, or the first degree j where it does not.
    """
    a, b = g.edges[e]
    if a == b:
        raise ValueError(f"edge {e} is a loop; the sequence needs a non-loop edge")
    h_g = cohomology(g, budget)
    h_d = cohomology(delete_edge(g, e), budget)
    h_c = cohomology(contract_edge(g, e), budget)
    degrees = {j for _, j in dict(h_g.items())}
    degrees |= {j for _, j in dict(h_d.items())}
    degrees |= {j for _, j in dict(h_c.items())}
    for j in sorted(degrees):
        total = 0
        for i in range(g.edge_count + 1):
            total += (-1) ** i * (
                h_g.group(i, j).free_rank
                - h_d.group(i, j).free_rank
                + h_c.group(i, j).free_rank
            )
        if total:
            return {"j": j, "alternating_sum": total}
    return None


def check_les_rank_consistency(g: Graph, e: int, budget: int | None = None) -> bool:
    return les_report(g, e, budget) is None


def kunneth_report(g1: Graph, g2: Graph, budget: int | None = None):
    """Compare H(g1 + g2) with the Kunneth composition of the factors."""
    actual = cohomology(disjoint_union(g1, g2), budget)
    expected = kunneth_compose(cohomology(g1, budget), cohomology(g2, budget))
    return _first_mismatch(actual, expected)


def check_kunneth(g1: Graph, g2: Graph, budget: int | None = None) -> bool:
    return kunneth_report(g1, g2, budget) is None

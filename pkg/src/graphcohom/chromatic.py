"""The chromatic polynomial, by two independent routes.

``chromatic_deletion_contraction`` recurses on P(G) = P(G-e) - P(G/e) with
memoisation; ``chromatic_state_sum`` expands the inclusion-exclusion sum
over edge subsets.  Both return a polynomial in the color-count variable;
``substitute_one_plus_q`` re-expands it at 1 + q, which must match the
graded Euler characteristic of the cohomology.
"""

from __future__ import annotations

from .graphs import Graph, contract_edge, delete_edge, simplify
from .poly import IntPoly
from .states import DEFAULT_EDGE_BUDGET, CapacityError

__all__ = [
    "chromatic_deletion_contraction",
    "chromatic_state_sum",
    "substitute_one_plus_q",
]

# Shared memo table keyed by canonical simple form; dict insertion is atomic
# under CPython so concurrent readers/writers at worst duplicate work.
_MEMO: dict[tuple, IntPoly] = {}


def _canonical_key(g: Graph) -> tuple:
    return (g.vertex_count, tuple(sorted(g.canonical_edges())))


def chromatic_deletion_contraction(g: Graph) -> IntPoly:
    """P(g) via deletion-contraction on the lowest-indexed edge.

    Graphs with a loop have no proper colorings and return 0; parallel
    duplicates are dropped before recursing, so the memo table only ever
    holds simple loop-free graphs.
    """
    sg, has_loop = simplify(g)
    if has_loop:
        return IntPoly.zero()
    key = _canonical_key(sg)
    known = _MEMO.get(key)
    if known is not None:
        return known
    if not sg.edges:
        result = IntPoly.monomial(sg.vertex_count)
    else:
        result = (
            chromatic_deletion_contraction(delete_edge(sg, 0))
            - chromatic_deletion_contraction(contract_edge(sg, 0))
        )
    _MEMO[key] = result
    return result


def chromatic_state_sum(g: Graph, budget: int | None = None) -> IntPoly:
    """P(g) as the alternating sum of lambda^(components) over edge subsets."""
    from .graphs import components

    budget = DEFAULT_EDGE_BUDGET if budget is None else budget
    n = g.edge_count
    if n > budget:
        raise CapacityError(
            f"graph has {n} edges, over the budget of {budget}; "
            f"the state sum has 2^{n} terms"
        )
    coeffs: dict[int, int] = {}
    for mask in range(1 << n):
        k = components(g, mask).count
        sign = -1 if mask.bit_count() & 1 else 1
        coeffs[k] = coeffs.get(k, 0) + sign
    return IntPoly(coeffs)


def substitute_one_plus_q(p: IntPoly) -> IntPoly:
    """Expand p(1 + q) as a polynomial in q."""
    result = IntPoly.zero()
    one_plus_q = IntPoly({0: 1, 1: 1})
    powers: dict[int, IntPoly] = {0: IntPoly.one()}
    for exp, coeff in p.pairs():
        while exp not in powers:
            top = max(powers)
            powers[top + 1] = powers[top] * one_plus_q
        result = result + coeff * powers[exp]
    return result

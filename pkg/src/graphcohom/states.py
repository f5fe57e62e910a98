"""Enhanced-state bases and the exact differential of the cochain complex.

An enhanced state of a graph G with ordered edges e_0..e_{n-1} is a pair
(s, c): an edge subset s (a bitmask, bit k <-> edge k) together with a
coloring c that assigns 1 or x to every component of the spanning subgraph
[G:s].  Colorings are bitmasks over the canonical component ids from
``components``: bit l set means component l is colored x, clear means 1.

The bigrading is i = |s| (number of edges used) and j = number of components
colored x.  The differential adds one absent edge e at a time:

  * the colorings of the two merged components multiply, with
    1*1 = 1, 1*x = x*1 = x, and x*x = 0 (the state is dropped);
  * adding an edge inside one component keeps the coloring unchanged;
  * the summand carries sign (-1)^(number of edges of s ordered before e).

Per-bidegree matrices stay small, so each (i, j) block is materialised
separately and never stitched into one giant matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .graphs import ComponentPartition, Graph, components
from .matrices import SparseIntMatrix

__all__ = [
    "DEFAULT_EDGE_BUDGET",
    "CapacityError",
    "EnhancedState",
    "BasisIndex",
    "enumerate_basis",
    "apply_edge",
    "differential",
    "verify_d_squared",
    "cube_sign_crosscheck",
    "dump_differentials",
]

DEFAULT_EDGE_BUDGET = 20


class CapacityError(RuntimeError):
    """The requested state space is too large to enumerate."""


class EnhancedState(NamedTuple):
    """An edge subset together with a component coloring, both as bitmasks."""

    state: int
    coloring: int

    @property
    def height(self) -> int:
        """i-degree: number of edges in the subset."""
        return self.state.bit_count()

    @property
    def degree(self) -> int:
        """j-degree: number of components colored x."""
        return self.coloring.bit_count()


@dataclass
class BasisIndex:
    """Ordered enhanced-state bases of every (i, j) bidegree of one graph.

    Within a bidegree, states are ordered by ascending subset mask and then
    ascending coloring mask; ``position`` gives each state's index inside its
    own bidegree list.  ``partitions`` caches the component partition of
    every edge subset, keyed by mask.
    """

    graph: Graph
    buckets: dict[tuple[int, int], list[EnhancedState]]
    position: dict[EnhancedState, int]
    partitions: dict[int, ComponentPartition]
    _merge_info: dict = field(default_factory=dict, repr=False)
    _blocks: dict = field(default_factory=dict, repr=False)

    def size(self, i: int, j: int) -> int:
        return len(self.buckets.get((i, j), ()))

    def states(self, i: int, j: int) -> list[EnhancedState]:
        return self.buckets.get((i, j), [])

    @property
    def total_size(self) -> int:
        return sum(len(b) for b in self.buckets.values())

    def sizes_by_height(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (i, j), states in sorted(self.buckets.items()):
            out.setdefault(i, {})[j] = len(states)
        return out


def enumerate_basis(g: Graph, budget: int = DEFAULT_EDGE_BUDGET) -> BasisIndex:
    """Enumerate every enhanced state of g, bucketed by bidegree.

    Refuses graphs with more than ``budget`` edges: the basis has at least
    2^n elements, and thrashing is worse than a clean error.
    """
    n = g.edge_count
    if n > budget:
        raise CapacityError(
            f"graph has {n} edges, over the budget of {budget}; "
            f"its basis would hold at least 2^{n} enhanced states"
        )
    buckets: dict[tuple[int, int], list[EnhancedState]] = {}
    position: dict[EnhancedState, int] = {}
    partitions: dict[int, ComponentPartition] = {}
    for mask in range(1 << n):
        part = components(g, mask)
        partitions[mask] = part
        i = mask.bit_count()
        for coloring in range(1 << part.count):
            state = EnhancedState(mask, coloring)
            bucket = buckets.setdefault((i, coloring.bit_count()), [])
            position[state] = len(bucket)
            bucket.append(state)
    return BasisIndex(g, buckets, position, partitions)


def _merge_data(g: Graph, part_old: ComponentPartition, part_new: ComponentPartition,
                e: int) -> tuple[tuple[int, ...], tuple[int, int] | None]:
    """How component ids move when edge e joins the subgraph.

    Returns (id_map, merged) where id_map sends each old component id to its
    new id and merged is the pair of old ids that collided, or None when the
    edge closed up inside a single component.
    """
    id_map = [-1] * part_old.count
    for v in range(len(part_old.component_of)):
        old = part_old.component_of[v]
        if id_map[old] < 0:
            id_map[old] = part_new.component_of[v]
    if part_new.count == part_old.count:
        return tuple(id_map), None
    a, b = part_old.component_of[g.edges[e][0]], part_old.component_of[g.edges[e][1]]
    if a > b:
        a, b = b, a
    return tuple(id_map), (a, b)


def _transfer_coloring(coloring: int, id_map: tuple[int, ...],
                       merged: tuple[int, int] | None) -> int | None:
    """Push a coloring through a component merge; None encodes x*x = 0."""
    if merged is not None:
        a, b = merged
        if coloring >> a & 1 and coloring >> b & 1:
            return None
    new_coloring = 0
    m = coloring
    while m:
        low = m & -m
        new_coloring |= 1 << id_map[low.bit_length() - 1]
        m ^= low
    return new_coloring


def apply_edge(g: Graph, state: EnhancedState, e: int) -> EnhancedState | None:
    """The single-edge summand of the differential, without its sign.

    e must be absent from the state's subset.  Returns the image state, or
    None when the two merged components were both colored x.
    """
    if not 0 <= e < g.edge_count:
        raise IndexError(f"edge index {e} out of range 0..{g.edge_count - 1}")
    if state.state >> e & 1:
        raise ValueError(f"edge {e} is already in the state")
    old_part = components(g, state.state)
    new_mask = state.state | 1 << e
    new_part = components(g, new_mask)
    id_map, merged = _merge_data(g, old_part, new_part, e)
    new_coloring = _transfer_coloring(state.coloring, id_map, merged)
    if new_coloring is None:
        return None
    return EnhancedState(new_mask, new_coloring)


def _merge_info_cached(g: Graph, basis: BasisIndex, mask: int, e: int):
    key = (mask, e)
    info = basis._merge_info.get(key)
    if info is None:
        info = _merge_data(g, basis.partitions[mask], basis.partitions[mask | 1 << e], e)
        basis._merge_info[key] = info
    return info


def differential(g: Graph, basis: BasisIndex, i: int, j: int) -> SparseIntMatrix:
    """The exact matrix of d: C^{i,j} -> C^{i+1,j} in the basis order.

    Entries are the signs (-1)^(edges of s before e); each column has at most
    edge_count - i nonzero entries.
    """
    n = g.edge_count
    if not 0 <= i <= n:
        raise ValueError(f"height {i} out of range 0..{n}")
    cached = basis._blocks.get((i, j))
    if cached is not None:
        return cached
    sources = basis.states(i, j)
    targets = basis.size(i + 1, j)
    entries = []
    for col, (mask, coloring) in enumerate(sources):
        for e in range(n):
            if mask >> e & 1:
                continue
            id_map, merged = _merge_info_cached(g, basis, mask, e)
            new_coloring = _transfer_coloring(coloring, id_map, merged)
            if new_coloring is None:
                continue
            row = basis.position[EnhancedState(mask | 1 << e, new_coloring)]
            sign = -1 if (mask & (1 << e) - 1).bit_count() & 1 else 1
            entries.append((row, col, sign))
    block = SparseIntMatrix(targets, len(sources), tuple(entries))
    basis._blocks[(i, j)] = block
    return block


def verify_d_squared(g: Graph, budget: int = DEFAULT_EDGE_BUDGET) -> bool:
    """Check d o d = 0 in every bidegree of g's complex."""
    from .matrices import matmul

    basis = enumerate_basis(g, budget)
    degrees = sorted({key for key in basis.buckets})
    for (i, j) in degrees:
        first = differential(g, basis, i, j)
        if i + 1 > g.edge_count:
            continue
        second = differential(g, basis, i + 1, j)
        if not matmul(second, first).is_zero():
            return False
    return True


def cube_sign_crosscheck(g: Graph, budget: int = DEFAULT_EDGE_BUDGET) -> bool:
    """Rebuild every differential from the edge-cube description and compare.

    The complex can also be read off a cube with one axis per edge: each
    vertex of the cube holds one tensor power of the rank-two module, each
    cube edge adds one graph edge and acts by identity (no merge) or by the
    multiplication map on the two affected tensor factors, and carries sign
    -1 exactly when an odd number of already-present edges precede the added
    one.  This constructs those per-edge maps directly on tensor factors,
    assembles the (i, j) blocks, and compares with ``differential``.
    """
    basis = enumerate_basis(g, budget)
    n = g.edge_count
    blocks: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
    for mask in range(1 << n):
        part = basis.partitions[mask]
        i = mask.bit_count()
        for e in range(n):
            if mask >> e & 1:
                continue
            new_mask = mask | 1 << e
            new_part = basis.partitions[new_mask]
            # targets gather the source factors landing on them
            sources_of: list[list[int]] = [[] for _ in range(new_part.count)]
            seen = [False] * part.count
            for v in range(g.vertex_count):
                old = part.component_of[v]
                if not seen[old]:
                    seen[old] = True
                    sources_of[new_part.component_of[v]].append(old)
            sign = -1 if (mask & (1 << e) - 1).bit_count() & 1 else 1
            for coloring in range(1 << part.count):
                image = 0
                dead = False
                for target, srcs in enumerate(sources_of):
                    x_factors = sum(coloring >> l & 1 for l in srcs)
                    if x_factors >= 2:
                        dead = True  # x*x = 0 kills the whole tensor word
                        break
                    if x_factors == 1:
                        image |= 1 << target
                if dead:
                    continue
                src_state = EnhancedState(mask, coloring)
                dst_state = EnhancedState(new_mask, image)
                key = (i, coloring.bit_count())
                cell = (basis.position[dst_state], basis.position[src_state])
                block = blocks.setdefault(key, {})
                block[cell] = block.get(cell, 0) + sign
    for (i, j) in sorted(basis.buckets):
        expected = differential(g, basis, i, j)
        rebuilt = SparseIntMatrix.from_dict(
            basis.size(i + 1, j), basis.size(i, j), blocks.get((i, j), {})
        )
        if rebuilt != expected:
            return False
    return True


def dump_differentials(g: Graph, basis: BasisIndex, stream) -> None:
    """Write every nonzero entry as one 'i j row col value' line."""
    for (i, j) in sorted(basis.buckets):
        block = differential(g, basis, i, j)
        for row, col, value in block.entries:
            stream.write(f"{i} {j} {row} {col} {value}\n")

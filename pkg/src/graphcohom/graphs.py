"""Ordered-edge multigraphs and the operations the cohomology pipeline needs.

Edge order is significant: the signs in the cochain differential depend on the
position of each edge, so a Graph value carries its edges as an ordered tuple
and every operation documents what it does to that order.  Loops and parallel
edges are allowed.  Graphs are immutable; operations return new values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, TextIO, Union

__all__ = [
    "Graph",
    "ComponentPartition",
    "ParseError",
    "LoopContractionError",
    "SimplifyResult",
    "components",
    "parse_edge_list",
    "parse_graph6",
    "delete_edge",
    "contract_edge",
    "simplify",
    "disjoint_union",
    "permute_edge_order",
    "null_graph",
    "path_graph",
    "cycle_graph",
]


class ParseError(ValueError):
    """Malformed graph input.  Carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class LoopContractionError(ValueError):
    """Contracting a loop is not defined here and is always refused."""


@dataclass(frozen=True)
class Graph:
    """A finite multigraph with ordered edges.

    Vertices are 0..vertex_count-1.  Each edge is an endpoint pair (a, b); a
    loop has a == b.  The position of an edge in ``edges`` is its index, which
    downstream sign conventions depend on, so two graphs with the same edges
    in different order are different values.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError(f"vertex_count must be non-negative, got {self.vertex_count}")
        for k, (a, b) in enumerate(edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(
                    f"edge {k} = ({a}, {b}) has an endpoint outside 0..{self.vertex_count - 1}"
                )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def canonical_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges with endpoints normalised to (min, max); order preserved."""
        return tuple((a, b) if a <= b else (b, a) for a, b in self.edges)

    def has_loop(self) -> bool:
        return any(a == b for a, b in self.edges)

    def has_parallel_edges(self) -> bool:
        seen = set()
        for key in self.canonical_edges():
            if key in seen:
                return True
            seen.add(key)
        return False

    def degrees(self) -> list[int]:
        """Vertex degrees; a loop contributes 2 to its vertex."""
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg


@dataclass(frozen=True)
class ComponentPartition:
    """Canonical component labelling of a spanning subgraph.

    ``component_of[v]`` is the component id of vertex v.  Ids are contiguous,
    0..count-1, assigned in increasing order of each component's smallest
    vertex, so the labelling is deterministic given the subgraph.
    """

    component_of: tuple[int, ...]
    count: int


def components(g: Graph, edge_mask: int) -> ComponentPartition:
    """Components of the spanning subgraph keeping edges whose bit is set.

    Bit k of ``edge_mask`` selects edge k.  All vertices are present whether
    or not any selected edge touches them.
    """
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, (a, b) in enumerate(g.edges):
        if edge_mask >> k & 1:
            ra, rb = find(a), find(b)
            if ra != rb:
                # keep the smaller root so ids come out ordered by min vertex
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
    ids: dict[int, int] = {}
    labels = []
    for v in range(g.vertex_count):
        root = find(v)
        if root not in ids:
            ids[root] = len(ids)
        labels.append(ids[root])
    return ComponentPartition(tuple(labels), len(ids))


TextSource = Union[str, bytes, TextIO]


def _as_text(source: TextSource) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    return source


def parse_edge_list(source: TextSource) -> Graph:
    """Parse the line-oriented edge-list format.

    The first significant line is ``v <vertex_count>``; every following line
    is ``e <a> <b>`` and appends one edge, so file order is edge order.
    Lines starting with ``#`` and blank lines are ignored.  Malformed lines
    and out-of-range endpoints raise ParseError with the offending line
    number.
    """
    text = _as_text(source)
    vertex_count = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if vertex_count is None:
            if parts[0] != "v" or len(parts) != 2:
                raise ParseError(line_no, "expected 'v <vertex_count>'")
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise ParseError(line_no, f"vertex count {parts[1]!r} is not an integer") from None
            if vertex_count < 0:
                raise ParseError(line_no, "vertex count must be non-negative")
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError(line_no, "expected 'e <a> <b>'")
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(line_no, "edge endpoints must be integers") from None
        if not (0 <= a < vertex_count and 0 <= b < vertex_count):
            raise ParseError(line_no, f"endpoint out of range 0..{vertex_count - 1}")
        edges.append((a, b))
    if vertex_count is None:
        raise ParseError(1, "missing 'v <vertex_count>' line")
    return Graph(vertex_count, tuple(edges))


def parse_graph6(source: TextSource) -> Graph:
    """Decode one graph6-encoded simple graph.

    Accepts the optional ``>>graph6<<`` header, the size field (including the
    multi-byte forms), and the 6-bit packed upper triangle of the adjacency
    matrix.  graph6 carries no edge order, so edges are emitted in
    lexicographic (min, max) order; that fixed convention makes decoding
    deterministic.
    """
    text = _as_text(source).strip()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError(1, "empty graph6 input")
    if len(lines) > 1:
        raise ParseError(2, "expected exactly one graph6 line")
    data = lines[0]
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise ParseError(1, "empty graph6 line")
    vals = []
    for ch in data:
        o = ord(ch) - 63
        if not 0 <= o <= 63:
            raise ParseError(1, f"invalid graph6 byte {ch!r}")
        vals.append(o)
    if vals[0] <= 62:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] <= 62:
        n, body = (vals[1] << 12) | (vals[2] << 6) | vals[3], vals[4:]
    elif len(vals) >= 8:
        n = 0
        for o in vals[2:8]:
            n = n << 6 | o
        body = vals[8:]
    else:
        raise ParseError(1, "truncated graph6 size field")
    bit_count = n * (n - 1) // 2
    expected_bytes = (bit_count + 5) // 6
    if len(body) != expected_bytes:
        raise ParseError(
            1, f"graph6 body has {len(body)} bytes, expected {expected_bytes} for {n} vertices"
        )
    edges = []
    t = 0
    for j in range(1, n):
        for i in range(j):
            if body[t // 6] >> (5 - t % 6) & 1:
                edges.append((i, j))
            t += 1
    edges.sort()
    return Graph(n, tuple(edges))


def _check_edge_index(g: Graph, e: int) -> None:
    if not 0 <= e < g.edge_count:
        raise IndexError(f"edge index {e} out of range 0..{g.edge_count - 1}")


def delete_edge(g: Graph, e: int) -> Graph:
    """Remove edge e.  The remaining edges keep their relative order."""
    _check_edge_index(g, e)
    return Graph(g.vertex_count, g.edges[:e] + g.edges[e + 1:])


def contract_edge(g: Graph, e: int) -> Graph:
    """Contract the non-loop edge e.

    The two endpoints merge into the smaller index; vertex indices above the
    larger endpoint shift down by one.  Edge e disappears, every other edge
    keeps its relative order with remapped endpoints, and copies parallel to
    e become loops.  Contracting a loop raises LoopContractionError.
    """
    _check_edge_index(g, e)
    a, b = g.edges[e]
    if a == b:
        raise LoopContractionError(f"edge {e} is a loop at vertex {a}")
    hi, lo = (a, b) if a > b else (b, a)

    def remap(v: int) -> int:
        if v == hi:
            return lo
        return v if v < hi else v - 1

    edges = tuple(
        (remap(x), remap(y)) for k, (x, y) in enumerate(g.edges) if k != e
    )
    return Graph(g.vertex_count - 1, edges)


class SimplifyResult(NamedTuple):
    graph: Graph
    has_loop: bool


def simplify(g: Graph) -> SimplifyResult:
    """Drop all but the earliest copy of each parallel class; flag loops.

    Two edges are parallel when they join the same unordered vertex pair
    (two loops at the same vertex count as parallel).  Loops themselves are
    retained; the flag just reports whether any loop is present.
    """
    seen: set[tuple[int, int]] = set()
    kept = []
    has_loop = False
    for a, b in g.edges:
        if a == b:
            has_loop = True
        key = (a, b) if a <= b else (b, a)
        if key in seen:
            continue
        seen.add(key)
        kept.append((a, b))
    return SimplifyResult(Graph(g.vertex_count, tuple(kept)), has_loop)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union: g2's vertices and edges are shifted after g1's.

    Edge order is g1's edges followed by g2's edges.
    """
    shift = g1.vertex_count
    edges = g1.edges + tuple((a + shift, b + shift) for a, b in g2.edges)
    return Graph(g1.vertex_count + g2.vertex_count, edges)


def permute_edge_order(g: Graph, sigma: Sequence[int]) -> Graph:
    """Reorder edges: edge k of g lands at position sigma[k] of the result."""
    sigma = tuple(sigma)
    n = g.edge_count
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise ValueError(f"sigma must be a permutation of 0..{n - 1}")
    new_edges: list[tuple[int, int]] = [(-1, -1)] * n
    for k, pos in enumerate(sigma):
        new_edges[pos] = g.edges[k]
    return Graph(g.vertex_count, tuple(new_edges))


def null_graph(v: int) -> Graph:
    """v isolated vertices, no edges."""
    return Graph(v)


def path_graph(n: int) -> Graph:
    """The path tree with n edges on n+1 vertices, edges (i, i+1) in order."""
    if n < 0:
        raise ValueError("edge count must be non-negative")
    return Graph(n + 1, tuple((i, i + 1) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    """The polygon with n edges: a single loop for n=1, a doubled edge for
    n=2, and the n-cycle (i, i+1 mod n) otherwise."""
    if n < 1:
        raise ValueError("a polygon needs at least one edge")
    if n == 1:
        return Graph(1, ((0, 0),))
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))

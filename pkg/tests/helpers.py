"""Shared test utilities: independent oracles and seeded graph generators.

Everything here is deliberately written with different algorithms than the
package under test (breadth-first search instead of union-find, exhaustive
coloring enumeration instead of deletion-contraction) so that agreement
between the two is meaningful evidence.
"""

from __future__ import annotations

import heapq
import random
from itertools import combinations, permutations, product

from graphcohom import Graph, components


def bfs_component_count(g: Graph, edge_mask: int) -> int:
    """Connected components of the spanning subgraph, by breadth-first search."""
    adjacency: dict[int, list[int]] = {}
    for k, (a, b) in enumerate(g.edges):
        if edge_mask >> k & 1:
            adjacency.setdefault(a, []).append(b)
            adjacency.setdefault(b, []).append(a)
    seen: set[int] = set()
    count = 0
    for start in range(g.vertex_count):
        if start in seen:
            continue
        count += 1
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop()
            for w in adjacency.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return count


def count_proper_colorings(g: Graph, colors: int) -> int:
    """Brute-force count of proper colorings with the given palette size."""
    if g.vertex_count == 0:
        return 1
    total = 0
    for assignment in product(range(colors), repeat=g.vertex_count):
        if all(assignment[a] != assignment[b] for a, b in g.edges):
            total += 1
    return total


def random_multigraph(rng: random.Random, max_vertices: int = 6,
                      max_edges: int = 8, allow_loops: bool = True) -> Graph:
    v = rng.randint(1, max_vertices)
    n = rng.randint(0, max_edges)
    edges = []
    for _ in range(n):
        a = rng.randrange(v)
        b = rng.randrange(v)
        if not allow_loops:
            if v == 1:
                continue
            while b == a:
                b = rng.randrange(v)
        edges.append((a, b))
    return Graph(v, tuple(edges))


def random_tree(rng: random.Random, edge_count: int) -> Graph:
    """Uniform random labeled tree from a Pruefer sequence, edges shuffled."""
    v = edge_count + 1
    if v == 1:
        return Graph(1, ())
    if v == 2:
        return Graph(2, ((0, 1),))
    sequence = [rng.randrange(v) for _ in range(v - 2)]
    degree = [1] * v
    for x in sequence:
        degree[x] += 1
    leaves = [i for i in range(v) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    rng.shuffle(edges)
    return Graph(v, tuple(edges))


def attach_pendant(rng: random.Random, g: Graph) -> tuple[Graph, int]:
    """Add a fresh degree-1 vertex; returns the new graph and its edge index."""
    anchor = rng.randrange(g.vertex_count)
    new_vertex = g.vertex_count
    position = rng.randint(0, g.edge_count)
    edges = list(g.edges)
    edges.insert(position, (anchor, new_vertex))
    return Graph(g.vertex_count + 1, tuple(edges)), position


def connected_simple_graph_classes(max_vertices: int) -> list[Graph]:
    """One representative per isomorphism class of connected simple graphs.

    Deduplicates labeled graphs by the lexicographically smallest relabeled
    edge set.  Feasible up to 5 vertices (1024 edge subsets x 120
    relabelings).
    """
    out = []
    for v in range(1, max_vertices + 1):
        pairs = list(combinations(range(v), 2))
        seen: set[tuple] = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
            canon = min(
                tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
                for perm in permutations(range(v))
            )
            if canon in seen:
                continue
            seen.add(canon)
            g = Graph(v, tuple(sorted(edges)))
            if components(g, (1 << g.edge_count) - 1).count == 1:
                out.append(g)
    return out


TRIANGLE = Graph(3, ((0, 1), (1, 2), (0, 2)))

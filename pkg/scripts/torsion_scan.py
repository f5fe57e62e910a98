#!/usr/bin/env python3
"""Scan random multigraphs for torsion and tabulate what shows up where.

Small polygons only ever produce Z_2; this scan asks whether random graphs
within the edge budget ever produce anything else, and in which bidegrees
torsion concentrates.
"""

import argparse
import random
import sys
from collections import Counter
from dataclasses import dataclass

from graphcohom import Graph, cohomology


@dataclass(frozen=True)
class ScanConfig:
    samples: int = 300
    max_vertices: int = 6
    max_edges: int = 8
    seed: int = 0


def random_graph(rng: random.Random, cfg: ScanConfig) -> Graph:
    v = rng.randint(2, cfg.max_vertices)
    edges = tuple(
        (rng.randrange(v), rng.randrange(v))
        for _ in range(rng.randint(0, cfg.max_edges))
    )
    return Graph(v, edges)


def scan(cfg: ScanConfig) -> int:
    rng = random.Random(cfg.seed)
    orders: Counter[int] = Counter()
    positions: Counter[tuple[int, int]] = Counter()
    graphs_with_torsion = 0
    examples_beyond_z2 = []
    for _ in range(cfg.samples):
        g = random_graph(rng, cfg)
        if g.has_loop():
            continue  # trivial groups, nothing to tabulate
        found = False
        for (i, j), grp in cohomology(g).items():
            for t in grp.torsion:
                orders[t] += 1
                positions[(i, j)] += 1
                found = True
                if t != 2:
                    examples_beyond_z2.append((g, (i, j), t))
        graphs_with_torsion += found
    print(f"samples: {cfg.samples} (seed {cfg.seed}), "
          f"graphs with torsion: {graphs_with_torsion}")
    print("torsion orders:", dict(sorted(orders.items())) or "none")
    print("hot bidegrees:", positions.most_common(6) or "none")
    if examples_beyond_z2:
        print("orders beyond 2:")
        for g, pos, t in examples_beyond_z2[:10]:
            print(f"  Z_{t} at {pos} in {g}")
    else:
        print("orders beyond 2: none found")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=300)
    parser.add_argument("--max-vertices", type=int, default=6)
    parser.add_argument("--max-edges", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    return scan(ScanConfig(args.samples, args.max_vertices, args.max_edges, args.seed))


if __name__ == "__main__":
    sys.exit(main())

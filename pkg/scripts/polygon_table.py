#!/usr/bin/env python3
"""Print the bigraded cohomology table of polygons, one row per height.

Every row is also checked against the closed-form expectation, so running
this doubles as a quick regression sweep:

    python3 scripts/polygon_table.py --max-edges 9
"""

import argparse
import sys
import time

from graphcohom import cohomology, cycle_cohomology, cycle_graph


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-edges", type=int, default=8)
    args = parser.parse_args(argv)

    all_ok = True
    for n in range(1, args.max_edges + 1):
        started = time.perf_counter()
        h = cohomology(cycle_graph(n))
        elapsed = time.perf_counter() - started
        ok = h == cycle_cohomology(n)
        all_ok = all_ok and ok
        flag = "" if ok else "  << MISMATCH with closed form"
        print(f"polygon n={n}  ({elapsed * 1000:.0f} ms){flag}")
        if h.is_trivial():
            print("  H^*: 0")
        for i in h.heights():
            print(f"  H^{i}: {h.row_notation(i)}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""Self-dual tree counts computed three independent ways.

For each n: trees with t* = t, dissections fixed by the edge-midpoint
reflection, and self-dual ternary trees with n - 1 internal vertices.

    python3 scripts/self_dual_table.py --max 9
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from catmirror import DihedralElement, gen_ncts, gen_self_dual_ternary
from catmirror.enumeration import fixed_points, s_aligned, s_printed, show
from catmirror.symmetry import nct_star


@dataclass
class TableConfig:
    n_max: int = 9


def row(n: int) -> tuple[int, int, int]:
    trees = sum(1 for t in gen_ncts(n) if nct_star(t) == t)
    dissections = fixed_points(DihedralElement.r(2 * n), n)[0]
    ternary = len(gen_self_dual_ternary(n - 1))
    return trees, dissections, ternary


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=TableConfig.n_max, dest="n_max")
    cfg = TableConfig(**vars(ap.parse_args()))
    print(f"{'n':>3} {'trees':>7} {'dissect':>8} {'ternary':>8} {'formula(n)':>11} {'formula(n-1)':>13}")
    for n in range(1, cfg.n_max + 1):
        start = time.perf_counter()
        a, b, c = row(n)
        print(f"{n:>3} {a:>7} {b:>8} {c:>8} {show(s_printed(n)):>11} {s_aligned(n):>13}"
              f"   {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()

"""Compare every closed form with exhaustive counts and write a table.

    python3 scripts/formula_audit.py --max 8 --json audit.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from catmirror.enumeration import STATS, closed_form, count_self_dual, oracle, s_printed, show


@dataclass
class AuditConfig:
    n_max: int = 8
    json_path: str | None = None


def audit(cfg: AuditConfig) -> dict:
    table = {}
    for stat in STATS:
        rows = []
        for n in range(1, cfg.n_max + 1):
            o = oracle(stat, n)
            p = closed_form(stat, n, "as_printed")
            a = closed_form(stat, n, "oracle_aligned")
            rows.append({"n": n, "oracle": o, "as_printed": show(p), "aligned": show(a),
                         "printed_ok": p == o, "aligned_ok": a == o})
        table[stat] = rows
    # the displayed self-dual formula, against the count at n and at n + 1
    table["self_dual_shift"] = [
        {"n": n, "s_printed": show(s_printed(n)), "brute_n": count_self_dual(n),
         "brute_next": count_self_dual(n + 1)}
        for n in range(1, cfg.n_max)
    ]
    return table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=AuditConfig.n_max, dest="n_max")
    ap.add_argument("--json", dest="json_path")
    cfg = AuditConfig(**vars(ap.parse_args()))
    start = time.perf_counter()
    table = audit(cfg)
    for stat in STATS:
        print(stat)
        for r in table[stat]:
            flag = "" if r["printed_ok"] else "   <- printed form differs"
            line = (f"  n={r['n']:<2} oracle={r['oracle']:<6} printed={r['as_printed']:<22} "
                    f"aligned={r['aligned']:<6}{flag}")
            print(line.rstrip())
    print("self-dual formula vs brute force at n and n+1")
    for r in table["self_dual_shift"]:
        print(f"  n={r['n']:<2} formula={r['s_printed']:<6} s(n)={r['brute_n']:<5} s(n+1)={r['brute_next']}")
    print(f"{time.perf_counter() - start:.1f}s")
    if cfg.json_path:
        with open(cfg.json_path, "w", encoding="utf-8") as fh:
            json.dump({"config": asdict(cfg), "table": table}, fh, indent=2)


if __name__ == "__main__":
    main()

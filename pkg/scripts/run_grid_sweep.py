#!/usr/bin/env python3
"""Sweep the standard (a, b, r) grid, print one line per cell, and recheck
every closed form against the Betti oracle.  Exits nonzero on any violation."""
import argparse
import sys
import time

from splinereg.regularity import check_2r_theorem, regularity_one_edge
from splinereg.staircase import build_q
from splinereg.syzygies import betti_oracle, buchberger_graph, syz2_closed_form, syz3_closed_form


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a-max", type=int, default=8)
    ap.add_argument("--b-max", type=int, default=8)
    ap.add_argument("--r-max", type=int, default=12)
    ap.add_argument("--skip-betti", action="store_true", help="closed forms only")
    args = ap.parse_args()

    t0 = time.monotonic()
    bad = []
    cells = 0
    print(f"{'a':>2} {'b':>2} {'r':>3} {'exact':>6} {'lower':>6} {'upper':>6} "
          f"{'zeta0':>5} {'<=2r':>5} {'betti':>5}")
    for a in range(3, args.a_max + 1):
        for b in range(a, args.b_max + 1):
            for r in range(1, args.r_max + 1):
                cells += 1
                rep = regularity_one_edge(a, b, r)
                if rep.vanishes:
                    print(f"{a:>2} {b:>2} {r:>3} {'zero':>6}")
                    continue
                betti_ok = "-"
                if not args.skip_betti:
                    q = build_q(a, b, r)
                    table = betti_oracle(q.in_q)
                    graph = buchberger_graph(q.in_q)
                    ok = (
                        table.multidegrees(1) == syz2_closed_form(q)
                        and set(table.multidegrees(2)) == set(syz3_closed_form(graph))
                    )
                    betti_ok = "ok" if ok else "FAIL"
                    if not ok:
                        bad.append((a, b, r, "betti"))
                if not (rep.lower <= rep.exact <= rep.upper):
                    bad.append((a, b, r, "sandwich"))
                if not check_2r_theorem(rep):
                    bad.append((a, b, r, "2r"))
                print(f"{a:>2} {b:>2} {r:>3} {rep.exact:>6} {rep.lower:>6} "
                      f"{rep.upper:>6} {rep.zeta0:>5} {str(rep.exact <= 2*r):>5} {betti_ok:>5}")
    print(f"\n{cells} cells in {time.monotonic() - t0:.1f}s; violations: {bad or 'none'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

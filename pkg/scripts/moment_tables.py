"""Closed-form tables: second-moment ratio for empty squares, and the
transvection / partial-conjugation expectations at constant p.

    python scripts/moment_tables.py --p 0.5 --n 50 100 200 400
"""

from __future__ import annotations

import argparse
import sys

from rgg import moments


def ratio_table(ns, ps):
    print("E(X^2)/E(X)^2: exact against the three-term expansion")
    print(f"{'n':>7} {'p':>6} {'exact':>14} {'expansion':>14} {'rel diff':>10}")
    for n in ns:
        for p in ps:
            r = moments.second_moment_ratio_terms(n, p)
            print(f"{n:>7} {p:>6.3g} {r.exact:>14.8g} {r.asymptotic:>14.8g} {r.exact / r.asymptotic - 1:>10.2e}")


def aut_table(ns, p):
    print(f"\nAutomorphism-side expectations at p = {p}")
    _, x, y = moments.separating_upper_bound(max(ns), p)
    print(f"x = {x:.6g}, y = {y:.6g}")
    print(f"{'n':>7} {'E(dom pairs)':>14} {'E(Y)':>14} {'E(Y) bound':>14}")
    for n in ns:
        bound, _, _ = moments.separating_upper_bound(n, p)
        print(f"{n:>7} {moments.expected_domination_pairs(n, p):>14.4g} "
              f"{moments.expected_separating_witnesses(n, p):>14.4g} {bound:>14.4g}")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[50, 100, 150, 200, 400])
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--ratio-n", type=int, nargs="+", default=[12, 100, 1000, 10000])
    ap.add_argument("--ratio-p", type=float, nargs="+", default=[0.1, 0.5, 0.9])
    args = ap.parse_args(argv)
    if not 0 < args.p < 1:
        ap.error("--p must lie in (0, 1)")
    ratio_table(args.ratio_n, args.ratio_p)
    aut_table(args.n, args.p)
    return 0


if __name__ == "__main__":
    sys.exit(main())

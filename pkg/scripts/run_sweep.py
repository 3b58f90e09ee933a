"""Run a sweep config and write CSV (and optionally JSON) results.

    python scripts/run_sweep.py scripts/configs/thresholds.cfg --out results/
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from rgg import harness


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("config", type=Path)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--workers", type=int, default=None, help="default: RGG_THREADS or cpu count")
    ap.add_argument("--json", action="store_true", help="also write a JSON file with regime stats")
    args = ap.parse_args(argv)

    try:
        config = harness.load_config(args.config)
    except harness.ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    workers = args.workers if args.workers is not None else harness.default_workers()
    start = time.perf_counter()
    rows = harness.run_sweep(config, workers=workers)
    elapsed = time.perf_counter() - start

    args.out.mkdir(parents=True, exist_ok=True)
    stem = args.config.stem
    (args.out / f"{stem}.csv").write_text(harness.rows_to_csv(rows))
    if args.json:
        (args.out / f"{stem}.json").write_text(harness.rows_to_json(rows))

    for r in rows:
        if r.kind == "property":
            print(f"n={r.n:<4} p={r.p:<12.9g} {r.target:<22} {r.successes}/{r.trials}"
                  f"  [{r.ci_low:.4f}, {r.ci_high:.4f}]")
        else:
            print(f"n={r.n:<4} p={r.p:<12.9g} {r.target:<22} mean {r.estimate:.6g}"
                  f"  exact {r.closed_form:.6g}  z {r.z_score:+.2f}")
    print(f"{len(rows)} cells in {elapsed:.1f}s -> {args.out / (stem + '.csv')}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run the full theorem verification suite and print a compact summary.

Usage:
    python scripts/run_verification.py [--seed N] [--only CHECK] [--csv]

Exits nonzero iff any hypothesis-met instance fails, so it can serve as
a CI gate. Per-instance rows go to stdout in the chosen format; the
summary table at the end aggregates by check.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from deltachrom.verification import DEFAULT_SEED, check_ids, run_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--only", choices=check_ids(), help="run a single check")
    parser.add_argument("--csv", action="store_true", help="emit per-instance CSV rows")
    args = parser.parse_args()

    ids = [args.only] if args.only else check_ids()
    totals: Counter[str] = Counter()
    t0 = time.perf_counter()
    print(f"{'check':<16} {'pass':>6} {'fail':>6} {'skip':>6} {'seconds':>9}")
    for check_id in ids:
        t_check = time.perf_counter()
        rows = run_check(check_id, {"seed": args.seed})
        counts = Counter(r.status for r in rows)
        totals.update(counts)
        if args.csv:
            for r in rows:
                print(f"{r.check_id},{r.params},{r.expected},{r.computed},{r.status}")
        print(
            f"{check_id:<16} {counts['pass']:>6} {counts['fail']:>6} "
            f"{counts['skip']:>6} {time.perf_counter() - t_check:>9.2f}"
        )
        for r in rows:
            if r.status == "fail":
                print(f"  FAIL {r.params}: expected {r.expected}, computed {r.computed}")
    print(
        f"{'total':<16} {totals['pass']:>6} {totals['fail']:>6} "
        f"{totals['skip']:>6} {time.perf_counter() - t0:>9.2f}"
    )
    return 1 if totals["fail"] else 0


if __name__ == "__main__":
    sys.exit(main())

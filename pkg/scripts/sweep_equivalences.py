#!/usr/bin/env python3
"""Sweep all eleven x^2 + n*y^2 criteria against the splitting decision.

For each n, every odd prime q up to the bound is classified three ways
(algebra splits / q in the printed residue classes / q actually representable)
and the report states which implications hold.  Writes one JSON object per n.

Usage:
  python scripts/sweep_equivalences.py --bound 5000 --out sweep.jsonl
"""

import argparse
import json
import sys
import time

from brauersplit.quaternion import SUPPORTED_N, verify_equivalence


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=5000)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default=None, help="write JSON lines here as well")
    args = ap.parse_args()

    out = open(args.out, "w") if args.out else None
    all_ok = True
    t0 = time.perf_counter()
    for n in SUPPORTED_N:
        report = verify_equivalence(n, args.bound, jobs=args.jobs)
        all_ok = all_ok and report.mandated_ok
        line = json.dumps(report.to_dict(), sort_keys=True)
        if out:
            out.write(line + "\n")
        status = "ok" if report.mandated_ok else "FAILED"
        print(
            f"n={n:3d}  primes={report.primes_checked:5d}  split={report.split_count:5d}  "
            f"disagreements={len(report.disagreements):3d}  {status}"
        )
        if report.disagreements:
            print(f"       first disagreements: {list(report.disagreements)[:8]}")
    print(f"done in {time.perf_counter() - t0:.1f}s")
    if out:
        out.close()
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())

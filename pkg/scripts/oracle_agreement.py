#!/usr/bin/env python3
"""Exhaustively compare the Hilbert symbol formulas with the residue oracle.

Every pair (a, b) in the box and every prime p up to the cap is checked at
the lifting threshold, where a primitive solution mod p^k certifies p-adic
solvability.  Any mismatch would mean one of the two independent routes is
wrong.

Usage:
  python scripts/oracle_agreement.py --max-abs 30 --max-p 30
"""

import argparse
import sys
import time

from brauersplit.arith import primes_up_to
from brauersplit.padic import Place, hilbert_symbol, lifting_threshold, qp_solvable_oracle


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-abs", type=int, default=30, help="box radius for a, b")
    ap.add_argument("--max-p", type=int, default=30, help="largest prime place")
    args = ap.parse_args()

    t0 = time.perf_counter()
    checked = 0
    mismatches = []
    for p in primes_up_to(args.max_p):
        place = Place.finite(p)
        tp = time.perf_counter()
        for a in range(-args.max_abs, args.max_abs + 1):
            if a == 0:
                continue
            for b in range(-args.max_abs, args.max_abs + 1):
                if b == 0:
                    continue
                k = lifting_threshold(a, b, p)
                symbol = hilbert_symbol(a, b, place)
                oracle = qp_solvable_oracle(a, b, p, k)
                checked += 1
                if (symbol == 1) != oracle:
                    mismatches.append((a, b, p, symbol, oracle))
        print(f"p={p:3d}: cumulative {checked} checks ({time.perf_counter() - tp:.1f}s)")
    print(f"{checked} checks, {len(mismatches)} mismatches, {time.perf_counter() - t0:.1f}s")
    for row in mismatches[:20]:
        print("MISMATCH", row)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Survey the parity of Hurwitz numbers up to a branch-point bound.

For every key with weight >= 3: check that odd values only occur at even
branch counts with all-odd parts and at most two parts, and list the keys
meeting those conditions whose value is nevertheless even (grouped by branch
count, compared to the bundled published list where available).

The scan up to 14 takes well under a minute; going to 18 is supported with
--allow-long and takes a few minutes of exact big-integer arithmetic.
"""

import argparse
import sys
import time

from hurwitz import HurwitzCache, parity_scan, ramification
from hurwitz.reference_data import PUBLISHED_CONVERSE_FAILURES


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rmax", type=int, default=14)
    parser.add_argument("--allow-long", action="store_true")
    args = parser.parse_args()
    if args.rmax > 14 and not args.allow_long:
        parser.error("rmax beyond 14 requires --allow-long")
    if args.rmax > 18:
        print("note: values beyond 18 are uncharted territory here", file=sys.stderr)

    start = time.perf_counter()
    report = parity_scan(args.rmax, HurwitzCache())
    elapsed = time.perf_counter() - start

    odd = [(g, tuple(mu)) for g, mu in report.data["odd"]]
    print(f"odd values in range: {len(odd)}")
    violations = [rec for rec in report.records if not rec.passed]

    print("\nconverse failures by branch count:")
    for r, pairs in report.data["converse_failures"]:
        names = ", ".join(f"(g={g}, mu=({','.join(map(str, mu))}))" for g, mu in pairs)
        published = PUBLISHED_CONVERSE_FAILURES.get(r)
        if published is not None:
            tag = "matches published" if {(g, tuple(mu)) for g, mu in pairs} == set(published) else "DIFFERS from published"
        else:
            tag = "beyond published data"
        print(f"  r={r}: {names}  [{tag}]")

    print(f"\nimplication violations: {len(violations)}")
    for rec in violations:
        print(f"  g={rec.g} mu={rec.mu} value={rec.value} r={ramification(rec.g, rec.mu)}")
    print(f"scan of r<={args.rmax} finished in {elapsed:.1f}s")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())

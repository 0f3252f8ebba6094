#!/usr/bin/env python3
"""Scan every graph on up to 7 vertices (internal enumeration to 6 plus the
checked-in data/graphs7.g6 corpus) and report:

  * the rho histogram over the D=2, Det=2 subset (must stay within {2,3,4})
  * any graph achieving rho=4 there (none known; finding one is news)
  * the max rho observed per determining number
  * pair-rule violations (must be none)

Usage:
    python scripts/scan_n7.py [--jobs N] [--all-pairs]
"""

import argparse
import json
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from symbreak.checks import ScanOptions, scan_corpus  # noqa: E402
from symbreak.graphs import enumerate_graphs, parse_graph6  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=2)
    ap.add_argument("--all-pairs", action="store_true",
                    help="pair rules on every determining pair, not just the witness")
    args = ap.parse_args()

    corpus = [g for n in range(1, 7) for g in enumerate_graphs(n)]
    data = ROOT / "data" / "graphs7.g6"
    with data.open() as fh:
        corpus += [parse_graph6(line) for line in fh if line.strip()]
    print(f"corpus: {len(corpus)} graphs (all isomorphism classes, n <= 7)")

    t0 = time.time()
    report = scan_corpus(corpus, ScanOptions(jobs=args.jobs, all_pairs=args.all_pairs))
    print(f"scan finished in {time.time() - t0:.1f}s")
    print(json.dumps(report.summary_obj(), indent=2, sort_keys=True))
    if report.rho4_witnesses:
        print("\n*** rho=4 witnesses found (worth a close look): ***")
        for g6 in report.rho4_witnesses:
            print(" ", g6)
    else:
        print("\nno rho=4 witness on <= 7 vertices (evidence, not proof)")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())

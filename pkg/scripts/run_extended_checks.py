#!/usr/bin/env python3
"""Extended verification beyond the default acceptance sizes.

Runs the relation, purity, membership, closure, and table suites at
larger cap counts, the braid-level relation-image check for every
framed letter at n=4, and the full derivation fixture replay.  Exits
nonzero on the first failing suite.
"""

import argparse
import sys
import time

from purehilden.phi import check_property_D_weak
from purehilden.rewrite import check_derivation, shipped_scripts
from purehilden.verify import (
    c2_table_report,
    edge_family_closure,
    membership_suite,
    purity_suite,
    verify_relations,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6,
                        help="largest cap count for the relation suite")
    parser.add_argument("--workers", type=int, default=None)
    args = parser.parse_args()

    failures = 0
    for n in range(2, args.max_n + 1):
        report = verify_relations(n, workers=args.workers)
        print(report.summary())
        failures += len(report.failures)
    for n in range(2, args.max_n + 1):
        for suite in (purity_suite, membership_suite):
            report = suite(n, workers=args.workers)
            print(report.summary())
            failures += len(report.failures)
        if n >= 3:
            report = edge_family_closure(n)
            print(report.summary())
            failures += len(report.failures)
            report = c2_table_report(n, workers=args.workers)
            print(report.summary())
            failures += len(report.failures)

    started = time.monotonic()
    weak_d = check_property_D_weak(4)
    print(f"relation-image equality (n=4): "
          f"{'ok' if not weak_d else weak_d} "
          f"[{int((time.monotonic() - started) * 1000)}ms]")
    failures += len(weak_d)

    for name, script in shipped_scripts().items():
        check_derivation(script)
        print(f"script {name}: ok ({len(script.steps)} steps)")

    print("extended checks:", "ok" if failures == 0 else f"{failures} FAILURES")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())

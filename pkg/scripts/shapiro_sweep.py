#!/usr/bin/env python3
"""Sweep the automorphism battery against every small finite group.

For each certified automorphism and each valid homomorphism to a group of
order <= 6 (deduplicated by the induced map onto its image), verify that
the twisted polynomial of the regular representation matches the classical
polynomial of the corresponding cover, and print root-count summaries.
"""

import argparse
import time

from orderlex.autos import standard_battery
from orderlex.finite import enumerate_homomorphisms, small_groups_catalog
from orderlex.ordering import theorem2_report
from orderlex.torus import MappingTorus


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--verbose", action="store_true", help="one line per check")
    args = parser.parse_args()

    start = time.time()
    total = mismatches = 0
    for label, auto in standard_battery():
        torus = MappingTorus(auto.rank, auto, label=label)
        homs = {}
        for group in small_groups_catalog():
            for f in enumerate_homomorphisms(torus.monodromy, group):
                homs.setdefault(f.image_key(), f)
        rows = []
        for f in homs.values():
            report = theorem2_report(torus, f)
            ok = report["existence_equal"] and (
                not report["twisted_obstructs"] or report["cover_obstructs"]
            )
            total += 1
            if not ok:
                mismatches += 1
            if args.verbose:
                rows.append(
                    f"    d={report['d']}  twisted={report['twisted']}"
                    f"  roots {report['twisted_positive_roots']}"
                    f"/{report['cover_positive_roots']}  ok={ok}"
                )
        print(f"{label:20s} {len(homs):3d} homomorphism classes")
        for row in rows:
            print(row)
    print()
    print(f"{total} checks, {mismatches} mismatches, {time.time() - start:.1f}s")


if __name__ == "__main__":
    main()

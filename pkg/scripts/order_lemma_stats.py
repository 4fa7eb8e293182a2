#!/usr/bin/env python3
"""Randomized statistics for the Magnus-ordering property suites.

Runs the commutator-inequality suite and the bi-order axiom suite at a
chosen rank/trial count and prints the tallies as JSON.  Violations should
always be zero; the interesting number is the unresolved rate at shallow
depths.
"""

import argparse
import json

from orderlex.ordering import bi_order_axiom_suite, lemma_comm_suite


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rank", type=int, default=2)
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--depth", type=int, default=6)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    doc = {
        "rank": args.rank,
        "seed": args.seed,
        "commutators": lemma_comm_suite(
            args.rank, args.trials, depth=args.depth, seed=args.seed
        ),
        "axioms": bi_order_axiom_suite(
            args.rank, args.trials, depth=args.depth, seed=args.seed
        ),
    }
    print(json.dumps(doc, sort_keys=True, indent=2))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Tabulate singular modules (isotype, index, degree) for small N."""

import argparse

from singpoly.comb import format_composition, syt_count
from singpoly.singular import datum, valid_pairs

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--max-n", type=int, default=6)
parser.add_argument("--max-degree", type=int, default=12)
args = parser.parse_args()

print(f"{'N':>3} {'m0':>3} {'n0':>3} {'kappa0':>7} {'tau':<14} {'dim':>4} {'deg':>4}  lambda")
for N in range(2, args.max_n + 1):
    for m0, n0 in valid_pairs(N, args.max_degree * N):
        dat = datum(N, m0, n0)
        if dat.degree > args.max_degree:
            continue
        print(f"{N:>3} {m0:>3} {n0:>3} {str(dat.kappa0):>7} {format_composition(dat.tau):<14} "
              f"{syt_count(dat.tau):>4} {dat.degree:>4}  {format_composition(dat.lambda_)}")

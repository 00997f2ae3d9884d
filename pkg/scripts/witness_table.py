#!/usr/bin/env python3
"""Nonexistence witnesses, cross-checked across the available routes."""

from singpoly.comb import format_composition
from singpoly.singular import nonexistence_witness, witness_plan

PLANS = [(5, 1, 2, (3, 2)), (5, 3, 2, (3, 2)), (6, 1, 2, (3, 3)), (10, 1, 2, (3, 3, 3, 1)), (14, 1, 3, (8, 6))]
SMALL = 6  # cyclic and direct expand an N-variable polynomial; only feasible for small N

for N, m, n, tau in PLANS:
    plan = witness_plan(N, m, n, tau)
    routes = ["insertion"] + (["cyclic", "direct"] if N <= SMALL else [])
    values = {r: nonexistence_witness(plan, r) for r in routes}
    agree = len(set(values.values())) == 1
    print(f"N={N} kappa0={plan.kappa0} tau=({format_composition(tau)}) "
          f"lambda=({format_composition(plan.lambda_)}) witness={values['insertion']} "
          f"routes={','.join(routes)} agree={agree}")

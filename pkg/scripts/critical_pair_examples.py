#!/usr/bin/env python3
"""Critical pairs for the worked examples and the rectangular cases."""

from fractions import Fraction

from singpoly.comb import format_composition
from singpoly.jack import critical_pairs, hook_product
from singpoly.scalar import KAPPA, vanishing_order


def show(alpha, m, n, maxlen):
    pairs = critical_pairs(alpha, m, n, maxlen)
    order = vanishing_order(hook_product(alpha, KAPPA + 1), Fraction(-m, n))
    print(f"alpha=({format_composition(alpha)}) kappa0=-{m}/{n} maxlen={maxlen}: "
          f"{len(pairs)} pairs, hook multiplicity {order}")
    for c in pairs:
        print(f"    {format_composition(c.beta)}")


show((6, 4, 4, 4, 2, 2, 2), 1, 2, 12)
show((3,) * 6, 1, 3, 15)
for m, n, d in [(1, 2, 2), (1, 2, 3), (1, 3, 2), (3, 2, 2)]:
    show((m * d,) * n, m, n, n * (d + 1))

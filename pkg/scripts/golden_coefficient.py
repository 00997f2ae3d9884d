#!/usr/bin/env python3
"""Compute the (2,0,3,3,3) coefficient of the (5,6) Jack polynomial in 5 variables."""

import time

from singpoly.jack import nsjp
from singpoly.scalar import KAPPA as k

start = time.perf_counter()
rec = nsjp((5, 6), 5)
c = rec.coef((2, 0, 3, 3, 3))
print(f"terms: {len(rec.poly.terms)}")
print(f"coefficient: {c}")
num = 30 * k**3 * (1 + k) ** 2 * (62 * k**3 + 135 * k**2 + 78 * k + 40)
den = (2 * k + 3) * (2 * k + 5) * (k + 2) ** 2 * (k + 3) ** 2 * (k + 4) * (k + 5)
print(f"matches closed form: {c == num / den}")
print(f"elapsed: {time.perf_counter() - start:.2f}s")

"""Exact kernels and ranks of rational matrices.

Rows are cleared to integers and reduced with FLINT's fraction-free
row echelon routine; the kernel basis is read off the reduced form, so
it depends only on the column order.
"""

from __future__ import annotations

import math
from fractions import Fraction

from flint import fmpz_mat

__all__ = ["integer_rows", "rref", "kernel", "rank", "same_span"]


def integer_rows(rows, ncols):
    """Scale each row (a dict col -> rational, or a list) to a primitive integer row."""
    out = []
    for row in rows:
        items = row.items() if isinstance(row, dict) else enumerate(row)
        vals = {c: Fraction(v) for c, v in items if v}
        if not vals:
            continue
        den = 1
        for v in vals.values():
            den = den * v.denominator // math.gcd(den, v.denominator)
        ints = [0] * ncols
        for c, v in vals.items():
            ints[c] = int(v * den)
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        out.append([x // g for x in ints])
    return out


def rref(rows, ncols):
    """(reduced rows as Fractions, pivot columns)."""
    ints = integer_rows(rows, ncols)
    if not ints:
        return [], []
    R, den, rk = fmpz_mat(ints).rref()
    den = int(den)
    reduced, pivots = [], []
    for r in range(rk):
        row = [Fraction(int(R[r, c]), den) for c in range(ncols)]
        p = next(c for c, v in enumerate(row) if v)
        piv = row[p]
        reduced.append([v / piv for v in row])
        pivots.append(p)
    return reduced, pivots


def kernel(rows, ncols):
    """Basis of {v : row . v = 0 for every row}; one vector per free column."""
    reduced, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def rank(rows, ncols):
    ints = integer_rows(rows, ncols)
    if not ints:
        return 0
    return fmpz_mat(ints).rank()


def same_span(rows_a, rows_b, ncols):
    ra, rb = rank(rows_a, ncols), rank(rows_b, ncols)
    return ra == rb == rank(list(rows_a) + list(rows_b), ncols)

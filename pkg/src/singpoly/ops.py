"""Dunkl and Cherednik operators, the B_ij maps, Murphy elements and the pairing.

The parameter ``kappa`` is either :data:`KAPPA` (formal) or any rational
(int or Fraction); in the latter case coefficients stay rational.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArityMismatch, IndexOutOfRange
from .poly import SparsePolynomial, divided_difference_terms
from .scalar import KAPPA, RationalFunctionK

__all__ = [
    "KAPPA",
    "is_formal",
    "as_parameter",
    "dunkl",
    "cherednik_u",
    "b_op",
    "b_monomial",
    "b_sum",
    "euler",
    "murphy_omega",
    "pairing",
]


def is_formal(kappa):
    return isinstance(kappa, RationalFunctionK)


def as_parameter(kappa):
    if isinstance(kappa, RationalFunctionK):
        return kappa
    if isinstance(kappa, str):
        return Fraction(kappa.replace("−", "-"))
    return Fraction(kappa)


def _check_i(p, i):
    if not 1 <= i <= p.nvars:
        raise IndexOutOfRange(f"index {i} outside 1..{p.nvars}")


def _acc(out, e, c):
    v = out.get(e)
    out[e] = c if v is None else v + c


def dunkl(p, i, kappa=KAPPA):
    """d/dx_i plus kappa times the sum of divided transpositions."""
    _check_i(p, i)
    kappa = as_parameter(kappa)
    k = i - 1
    deriv, diff = {}, {}
    for e, c in p.terms.items():
        a = e[k]
        if a:
            _acc(deriv, e[:k] + (a - 1,) + e[k + 1 :], c * a)
        for j in range(p.nvars):
            if j == k or e[j] == a:
                continue
            for e2, s in divided_difference_terms(e, k, j):
                _acc(diff, e2, c if s > 0 else -c)
    for e, c in diff.items():
        if c:
            _acc(deriv, e, c * kappa)
    return SparsePolynomial(p.nvars, deriv)


def cherednik_u(p, i, kappa=KAPPA):
    """D_i(x_i p) minus kappa times the transpositions (j, i), j < i."""
    _check_i(p, i)
    kappa = as_parameter(kappa)
    out = dunkl(p.times_variable(i), i, kappa)
    for j in range(1, i):
        out = out - p.swap(j, i).scale(kappa)
    return out


def b_monomial(e, i, j):
    """B_ij applied to x^e as a list of (exponent, sign); indices 1-based."""
    if i == j:
        raise IndexOutOfRange("B_ij needs i != j")
    a, b = e[i - 1], e[j - 1]
    base = list(e)
    out = []
    if a >= b:
        top = a - b if i < j else a - b - 1
        for l in range(top + 1):
            base[i - 1], base[j - 1] = a - l, b + l
            out.append((tuple(base), 1))
    else:
        top = b - a - 1 if i < j else b - a
        for l in range(1, top + 1):
            base[i - 1], base[j - 1] = a + l, b - l
            out.append((tuple(base), -1))
    return out


def b_op(p, i, j):
    _check_i(p, i)
    _check_i(p, j)
    out = {}
    for e, c in p.terms.items():
        for e2, s in b_monomial(e, i, j):
            _acc(out, e2, c if s > 0 else -c)
    return SparsePolynomial(p.nvars, out)


def b_sum(p, i):
    """B_i = sum over j != i of B_ij."""
    out = SparsePolynomial.zero(p.nvars)
    for j in range(1, p.nvars + 1):
        if j != i:
            out = out + b_op(p, i, j)
    return out


def euler(p):
    """sum_i x_i d/dx_i, i.e. each term times its degree."""
    return SparsePolynomial(p.nvars, {e: c * sum(e) for e, c in p.terms.items()})


def murphy_omega(p, i):
    N = p.nvars
    if not 1 <= i <= N:
        raise IndexOutOfRange(f"Murphy index {i} outside 1..{N}")
    out = SparsePolynomial.zero(N)
    a = N + 1 - i
    for j in range(N - i + 2, N + 1):
        out = out + p.swap(a, j)
    return out


def pairing(p, q, kappa=KAPPA):
    """p(D_1..D_N) q evaluated at x = 0."""
    if p.nvars != q.nvars:
        raise ArityMismatch(f"{p.nvars} vs {q.nvars} variables")
    kappa = as_parameter(kappa)
    N = p.nvars
    zero_exp = (0,) * N
    cache = {zero_exp: q}

    def apply(beta):
        if beta in cache:
            return cache[beta]
        k = next(t for t, b in enumerate(beta) if b)
        prev = beta[:k] + (beta[k] - 1,) + beta[k + 1 :]
        res = dunkl(apply(prev), k + 1, kappa)
        cache[beta] = res
        return res

    qdegs = {sum(e) for e in q.terms}
    total = 0
    for beta, c in p.terms.items():
        if sum(beta) not in qdegs:
            continue
        total = total + c * apply(beta).coef(zero_exp)
    return total

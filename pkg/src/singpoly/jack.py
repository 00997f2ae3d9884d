"""Nonsymmetric Jack polynomials, hook products and critical pairs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .comb import (
    dominated_compositions,
    dominates,
    dominates_partial,
    length,
    linext_key,
    pad,
    ranks,
    spectral_vector,
    to_partition,
)
from .errors import IndexOutOfRange, InvalidParameters, SingPolyError
from .poly import SparsePolynomial
from .scalar import KAPPA, ONE, RationalFunctionK, affine, as_rf

__all__ = [
    "NsjpRecord",
    "HookDatum",
    "CriticalPair",
    "nsjp",
    "nsjp_coefficients",
    "leg_length",
    "hook_product",
    "hook_datum",
    "e_factor",
    "critical_pairs",
    "is_critical_pair",
]


@dataclass(frozen=True)
class NsjpRecord:
    alpha: tuple
    nvars: int
    poly: SparsePolynomial = field(repr=False)
    spectral: tuple = field(repr=False)

    def coef(self, beta):
        return self.poly.coef(pad(beta, self.nvars))


def _bcoef(gi, gj, bi, i_before_j):
    """Coefficient of x^beta in B_ij x^gamma where beta moves mass between i and j.

    Only the entries at i and j matter; ``bi`` is beta's entry at i.
    """
    if gi >= gj:
        l = gi - bi
        top = gi - gj if i_before_j else gi - gj - 1
        return 1 if 0 <= l <= top else 0
    l = bi - gi
    top = gj - gi - 1 if i_before_j else gj - gi
    return -1 if 1 <= l <= top else 0


def _offdiag_sum(A, beta, i):
    """sum over gamma != beta of A_gamma * coef(B_i x^gamma, beta), as a rational function."""
    N = len(beta)
    bi = beta[i]
    total = None
    lst = list(beta)
    for j in range(N):
        if j == i:
            continue
        bj = beta[j]
        s = bi + bj
        before = i < j
        for gi in range(s + 1):
            if gi == bi:
                continue
            gj = s - gi
            c = _bcoef(gi, gj, bi, before)
            if not c:
                continue
            lst[i], lst[j] = gi, gj
            a = A.get(tuple(lst))
            if a is None:
                continue
            term = a if c > 0 else -a
            total = term if total is None else total + term
        lst[i], lst[j] = bi, bj
    return total


def nsjp_coefficients(alpha, check=False):
    """Coefficient table {beta: A_beta} of the x-monic eigenvector for alpha.

    ``alpha`` must already be padded to the ambient number of variables.
    """
    alpha = tuple(alpha)
    ra = ranks(alpha)
    A = {alpha: ONE}
    for beta in dominated_compositions(alpha):
        if beta == alpha:
            continue
        rb = ranks(beta)
        gaps = [((rb[i] - ra[i]), alpha[i] - beta[i]) for i in range(len(alpha))]
        idx = [i for i, g in enumerate(gaps) if g != (0, 0)]
        i = idx[0]
        s = _offdiag_sum(A, beta, i)
        if s is None or not s:
            value = None
        else:
            value = s * KAPPA / affine(*gaps[i])
        if check:
            for i2 in idx[1:]:
                s2 = _offdiag_sum(A, beta, i2)
                v2 = None if s2 is None or not s2 else s2 * KAPPA / affine(*gaps[i2])
                if (value or 0) != (v2 or 0):
                    raise SingPolyError(f"inconsistent coefficient at {beta} for alpha {alpha}")
        if value is not None:
            A[beta] = value
    return A


@lru_cache(maxsize=256)
def _nsjp_cached(alpha):
    return nsjp_coefficients(alpha)


def nsjp(alpha, N=None, check=False):
    """The x-monic nonsymmetric Jack polynomial for ``alpha`` in N variables."""
    N = len(alpha) if N is None else N
    alpha = pad(alpha, N)
    A = nsjp_coefficients(alpha, check=True) if check else _nsjp_cached(alpha)
    poly = SparsePolynomial._wrap(N, dict(A))
    return NsjpRecord(alpha, N, poly, tuple(spectral_vector(alpha, N)))


# ---------------------------------------------------------------------------
# hooks


def leg_length(alpha, i, j):
    if not (1 <= i <= len(alpha) and 1 <= j <= alpha[i - 1]):
        raise IndexOutOfRange(f"node ({i}, {j}) not in the diagram of {alpha}")
    ai = alpha[i - 1]
    below = sum(1 for a in alpha[i:] if j <= a <= ai)
    above = sum(1 for a in alpha[: i - 1] if j <= a + 1 <= ai)
    return below + above


def hook_product(alpha, t):
    t = as_rf(t)
    out = ONE
    for i, a in enumerate(alpha, 1):
        for j in range(1, a + 1):
            out = out * (t + affine(leg_length(alpha, i, j), a - j))
    return out


@dataclass(frozen=True)
class HookDatum:
    alpha: tuple
    shift: RationalFunctionK
    value: RationalFunctionK


def hook_datum(alpha, t):
    return HookDatum(tuple(alpha), as_rf(t), hook_product(alpha, t))


def e_factor(alpha, sign=1):
    eps = 1 if sign in (1, "+") else -1
    r = ranks(alpha)
    out = ONE
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            if alpha[i] < alpha[j]:
                den = affine(r[i] - r[j], alpha[j] - alpha[i])
                out = out * (ONE + KAPPA * eps / den)
    return out


# ---------------------------------------------------------------------------
# critical pairs


@dataclass(frozen=True)
class CriticalPair:
    alpha: tuple
    beta: tuple
    m: int
    n: int

    @property
    def kappa0(self):
        from fractions import Fraction

        return Fraction(-self.m, self.n)


def is_critical_pair(alpha, beta, m, n):
    M = max(len(alpha), len(beta))
    alpha, beta = pad(alpha, M), pad(beta, M)
    if not dominates(alpha, beta):
        return False
    ra, rb = ranks(alpha), ranks(beta)
    return all((rb[i] - ra[i]) * m == (alpha[i] - beta[i]) * n for i in range(M))


def critical_pairs(alpha, m, n, maxlen=None):
    """All beta (padded to ``maxlen``) forming a (-m/n)-critical pair with alpha."""
    if m < 1 or n < 1 or math.gcd(m, n) != 1:
        raise InvalidParameters(f"need coprime positive m, n; got {m}, {n}")
    alpha = tuple(alpha)
    if maxlen is None:
        maxlen = length(alpha) + sum(alpha)
    if maxlen < length(alpha):
        raise InvalidParameters(f"maxlen {maxlen} < length of {alpha}")
    M = maxlen
    alpha = pad(alpha, M)
    total = sum(alpha)
    ra = ranks(alpha)
    aplus = to_partition(alpha)
    prefix = [0]
    for x in aplus:
        prefix.append(prefix[-1] + x)

    # value forced on position p if it receives rank k
    def value(p, k):
        num = (k - ra[p]) * m
        if num % n:
            return None
        return alpha[p] - num // n

    found = []
    beta = [None] * M
    used = [False] * M

    def rec(k, prev_val, prev_pos, s):
        if k > M:
            if s == total:
                b = tuple(beta)
                if b != alpha and is_critical_pair(alpha, b, m, n):
                    found.append(b)
            return
        left = M - k
        for p in range(M):
            if used[p]:
                continue
            v = value(p, k)
            if v is None or v < 0:
                continue
            if prev_val is not None and (v > prev_val or (v == prev_val and p < prev_pos)):
                continue
            s2 = s + v
            if s2 > prefix[k] or s2 + left * v < total:
                continue
            used[p] = True
            beta[p] = v
            rec(k + 1, v, p, s2)
            used[p] = False
            beta[p] = None

    rec(1, None, -1, 0)
    found.sort(key=linext_key, reverse=True)
    return [CriticalPair(alpha, b, m, n) for b in found]

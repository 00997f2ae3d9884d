"""Compositions, partitions, orders, tableaux and index constructions.

Compositions are plain tuples of nonnegative ints.  Public index
arguments are 1-based, matching the usual mathematical convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IndexOutOfRange,
    InvalidPair,
    NonIntegralIndex,
    WeightMismatch,
    ZeroComposition,
)
from .scalar import affine

__all__ = [
    "to_partition",
    "weight",
    "length",
    "pad",
    "rank",
    "ranks",
    "xi",
    "xi_at",
    "spectral_vector",
    "dominates_partial",
    "dominates",
    "linext_key",
    "linext_cmp",
    "linext_sorted",
    "insert",
    "drop_tilde",
    "apply_cycle",
    "StandardTableau",
    "syt_enumerate",
    "syt_count",
    "contents",
    "top_tableau",
    "lambda_from_isotype",
    "isotype_from_lambda",
    "shape_from_pair",
    "index_from_pair",
    "parse_composition",
    "format_composition",
    "compositions",
    "partitions_dominated_by",
    "distinct_permutations",
    "dominated_compositions",
    "in_box",
]


def to_partition(alpha):
    return tuple(sorted(alpha, reverse=True))


def weight(alpha):
    return sum(alpha)


def length(alpha):
    """Index of the last nonzero entry (0 for the zero composition)."""
    for j in range(len(alpha), 0, -1):
        if alpha[j - 1]:
            return j
    return 0


def pad(alpha, n):
    alpha = tuple(alpha)
    if len(alpha) > n:
        if length(alpha) > n:
            raise IndexOutOfRange(f"{alpha} does not fit in {n} variables")
        return alpha[:n]
    return alpha + (0,) * (n - len(alpha))


def _check_index(alpha, i):
    if not 1 <= i <= len(alpha):
        raise IndexOutOfRange(f"index {i} outside 1..{len(alpha)}")


def rank(alpha, i):
    _check_index(alpha, i)
    a = alpha[i - 1]
    return sum(1 for x in alpha if x > a) + sum(1 for x in alpha[:i] if x == a)


def ranks(alpha):
    """All ranks at once, as a 0-based tuple of 1-based values."""
    order = sorted(range(len(alpha)), key=lambda j: (-alpha[j], j))
    out = [0] * len(alpha)
    for r, j in enumerate(order, 1):
        out[j] = r
    return tuple(out)


def xi(alpha, i, N=None):
    """Spectral value (N - r)kappa + alpha_i + 1 as a rational function."""
    N = len(alpha) if N is None else N
    alpha = pad(alpha, N)
    return affine(N - rank(alpha, i), alpha[i - 1] + 1)


def xi_at(alpha, i, k0, N=None):
    N = len(alpha) if N is None else N
    alpha = pad(alpha, N)
    return (N - rank(alpha, i)) * Fraction(k0) + alpha[i - 1] + 1


def spectral_vector(alpha, N=None):
    N = len(alpha) if N is None else N
    alpha = pad(alpha, N)
    return [affine(N - r, a + 1) for r, a in zip(ranks(alpha), alpha)]


def dominates_partial(a, b):
    """Non-strict partial-sum dominance of equal-length sequences."""
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def _same_len(a, b):
    n = max(len(a), len(b))
    return pad(a, n), pad(b, n)


def dominates(alpha, beta):
    """The strict order: alpha strictly above beta."""
    alpha, beta = _same_len(alpha, beta)
    if sum(alpha) != sum(beta) or alpha == beta:
        return False
    ap, bp = to_partition(alpha), to_partition(beta)
    if ap != bp:
        return dominates_partial(ap, bp)
    return dominates_partial(alpha, beta)


def linext_key(alpha):
    return (to_partition(alpha), tuple(alpha))


def linext_cmp(alpha, beta):
    """-1, 0 or 1; a total order on equal-weight compositions refining dominance."""
    alpha, beta = _same_len(alpha, beta)
    if sum(alpha) != sum(beta):
        raise WeightMismatch(f"|{alpha}| != |{beta}|")
    ka, kb = linext_key(alpha), linext_key(beta)
    return (ka > kb) - (ka < kb)


def linext_sorted(comps, descending=True):
    return sorted(comps, key=linext_key, reverse=descending)


def insert(s, lam, alpha):
    if not 1 <= s <= len(alpha):
        raise IndexOutOfRange(f"insertion point {s} outside 1..{len(alpha)}")
    return tuple(alpha[:s]) + tuple(lam) + tuple(alpha[s:])


def drop_tilde(alpha):
    alpha = tuple(alpha)
    k = length(alpha)
    if k == 0:
        raise ZeroComposition("the zero composition has no cyclic companion")
    return (alpha[k - 1] - 1,) + alpha[: k - 1] + alpha[k:], k


def apply_cycle(k, alpha, inverse=False):
    alpha = tuple(alpha)
    if not 1 <= k <= len(alpha):
        raise IndexOutOfRange(f"cycle length {k} outside 1..{len(alpha)}")
    if inverse:
        return alpha[1:k] + alpha[:1] + alpha[k:]
    return alpha[k - 1 : k] + alpha[: k - 1] + alpha[k:]


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class StandardTableau:
    shape: tuple
    rows: tuple

    @property
    def size(self):
        return sum(self.shape)

    def position(self, value):
        """(row, column), both 1-based, of the cell holding ``value``."""
        for r, row in enumerate(self.rows, 1):
            if value in row:
                return r, row.index(value) + 1
        raise IndexOutOfRange(f"{value} not in tableau")

    def contents(self):
        return contents(self)

    def __str__(self):
        return "/".join(",".join(map(str, row)) for row in self.rows)


def _shape(tau):
    return tuple(p for p in tau if p > 0)


def syt_enumerate(tau):
    tau = _shape(tau)
    N = sum(tau)
    out = []
    rows = [[] for _ in tau]

    def fill(v):
        if v > N:
            out.append(StandardTableau(tau, tuple(tuple(r) for r in rows)))
            return
        for r in range(len(tau)):
            c = len(rows[r])
            if c < tau[r] and (r == 0 or len(rows[r - 1]) > c):
                rows[r].append(v)
                fill(v + 1)
                rows[r].pop()

    if N:
        fill(1)
    return out


def syt_count(tau):
    """Hook-length formula."""
    tau = _shape(tau)
    N = sum(tau)
    conj = [sum(1 for p in tau if p > j) for j in range(tau[0])] if tau else []
    prod = 1
    for i, p in enumerate(tau):
        for j in range(p):
            prod *= (p - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(N) // prod


def contents(T):
    out = [0] * T.size
    for r, row in enumerate(T.rows, 1):
        for c, v in enumerate(row, 1):
            out[v - 1] = c - r
    return tuple(out)


def top_tableau(tau):
    tau = _shape(tau)
    rows, v = [], 1
    for p in tau:
        rows.append(tuple(range(v, v + p)))
        v += p
    return StandardTableau(tau, tuple(rows))


# ---------------------------------------------------------------------------
# index constructions


def lambda_from_isotype(tau, k0):
    tau = _shape(tau)
    k0 = Fraction(k0)
    N = sum(tau)
    lam = [0] * N
    acc = Fraction(0)
    i = 1
    for s, p in enumerate(tau):
        value = -k0 * acc
        if value.denominator != 1 or value < 0:
            raise NonIntegralIndex(f"row {s + 1} of {tau} gives entry {value} at kappa0 = {k0}")
        for _ in range(p):
            lam[N - i] = int(value)
            i += 1
        acc += p + 1
    return tuple(lam)


def isotype_from_lambda(lam, k0):
    """Invert :func:`lambda_from_isotype`; returns None if lam is not in its image."""
    rev = list(reversed(lam))
    if not rev or rev[0] != 0:
        return None
    tau = []
    prev = None
    for v in rev:
        if v == prev:
            tau[-1] += 1
        else:
            tau.append(1)
            prev = v
    tau = tuple(tau)
    if list(tau) != sorted(tau, reverse=True):
        return None
    try:
        if lambda_from_isotype(tau, k0) != tuple(lam):
            return None
    except NonIntegralIndex:
        return None
    return tau


def _pair_params(N, m0, n0):
    if not (2 <= n0 <= N and m0 >= 1) or m0 % n0 == 0:
        raise InvalidPair(f"(N, m0, n0) = ({N}, {m0}, {n0}) is not a valid singular pair")
    d = math.gcd(m0, n0)
    return d, m0 // d, n0 // d


def shape_from_pair(N, m0, n0):
    _, _, n = _pair_params(N, m0, n0)
    rest = N - n0 + 1
    l = -(-rest // (n - 1)) + 1
    tail = rest - (l - 2) * (n - 1)
    tau = (n0 - 1,) + (n - 1,) * (l - 2) + (tail,)
    return tau, l


def index_from_pair(N, m0, n0):
    _, m, n = _pair_params(N, m0, n0)
    tau, l = shape_from_pair(N, m0, n0)
    if l == 2:
        return (m0,) * tau[1] + (0,) * (n0 - 1)
    parts = [m0 + (l - 2) * m] * tau[-1]
    for j in range(l - 3, -1, -1):
        parts += [m0 + j * m] * (n - 1)
    return tuple(parts) + (0,) * (n0 - 1)


# ---------------------------------------------------------------------------
# text forms


def parse_composition(text):
    """Parse "2,0,3" or the shorthand "4^2,3^2,0^2"."""
    text = str(text).strip()
    if text in ("", "()"):
        return ()
    out = []
    for tok in text.strip("()").split(","):
        tok = tok.strip()
        if "^" in tok:
            v, k = tok.split("^")
            v, k = int(v), int(k)
            if k < 0:
                raise ValueError(f"negative multiplicity in {tok!r}")
            out += [v] * k
        else:
            out.append(int(tok))
    if any(v < 0 for v in out):
        raise ValueError(f"negative entry in {text!r}")
    return tuple(out)


def format_composition(alpha):
    return ",".join(map(str, alpha))


# ---------------------------------------------------------------------------
# enumeration


def compositions(total, nparts):
    """All compositions of ``total`` into ``nparts`` nonnegative parts (lex descending)."""
    if nparts == 0:
        if total == 0:
            yield ()
        return
    if nparts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, nparts - 1):
            yield (first,) + rest


def partitions_dominated_by(mu, nparts=None):
    """Partitions with at most ``nparts`` parts (padded) that mu dominates (non-strictly)."""
    mu = tuple(mu)
    nparts = len(mu) if nparts is None else nparts
    mu = pad(mu, max(nparts, len(mu)))
    total = sum(mu)
    prefix = [0]
    for x in mu:
        prefix.append(prefix[-1] + x)
    out = []

    def rec(parts, s, cap):
        k = len(parts)
        if k == nparts:
            if s == total:
                out.append(tuple(parts))
            return
        left = nparts - k
        for v in range(min(cap, total - s), -1, -1):
            if s + v > prefix[k + 1]:
                continue
            if s + v * left < total:
                break
            parts.append(v)
            rec(parts, s + v, v)
            parts.pop()

    rec([], 0, total)
    return out


def distinct_permutations(parts):
    counts = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    values = sorted(counts, reverse=True)
    n = len(parts)
    cur = []

    def rec():
        if len(cur) == n:
            yield tuple(cur)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                cur.append(v)
                yield from rec()
                cur.pop()
                counts[v] += 1

    yield from rec()


def dominated_compositions(alpha):
    """All beta with beta = alpha or alpha strictly above beta, in descending linear-extension order."""
    alpha = tuple(alpha)
    ap = to_partition(alpha)
    out = []
    for mu in partitions_dominated_by(ap, len(alpha)):
        perms = distinct_permutations(mu)
        if mu == ap:
            out.extend(b for b in perms if dominates_partial(alpha, b))
        else:
            out.extend(perms)
    out.sort(key=linext_key, reverse=True)
    return out


def in_box(alpha, s, n):
    """Membership in the set where the first s entries are < n and the rest <= n."""
    return all(a < n for a in alpha[:s]) and all(a <= n for a in alpha[s:])

"""Singular values, singular modules, kernel oracle and nonexistence witnesses."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .comb import (
    apply_cycle,
    compositions,
    distinct_permutations,
    dominates,
    drop_tilde,
    index_from_pair,
    insert,
    isotype_from_lambda,
    lambda_from_isotype,
    linext_key,
    shape_from_pair,
    syt_enumerate,
    top_tableau,
    xi_at,
)
from .errors import (
    ClassificationMismatch,
    InconsistentSpectrum,
    NotInvariant,
    PoleAt,
    PoleTooDeep,
    PreconditionViolated,
    UnexpectedZero,
)
from .jack import nsjp
from .linalg import kernel, rank
from .ops import cherednik_u, dunkl
from .poly import SparsePolynomial
from .scalar import KAPPA, affine, scaled_limit

__all__ = [
    "SingularDatum",
    "WitnessPlan",
    "datum",
    "module_degree",
    "murphy_labels",
    "singular_basis",
    "verify_singular",
    "singular_space",
    "isotype_of",
    "witness_plan",
    "nonexistence_witness",
    "valid_pairs",
    "span_rows",
]


@dataclass(frozen=True)
class SingularDatum:
    N: int
    m0: int
    n0: int
    d: int
    m: int
    n: int
    kappa0: Fraction
    tau: tuple
    l: int
    lambda_: tuple
    degree: int


def _closed_degree(d, m, n, tau, l):
    tl = tau[-1]
    twice = (l - 2) * (n - 1) * (2 * d + l - 3) + 2 * tl * (d + l - 2)
    return m * twice // 2


def datum(N, m0, n0):
    tau, l = shape_from_pair(N, m0, n0)
    d = math.gcd(m0, n0)
    m, n = m0 // d, n0 // d
    k0 = Fraction(-m, n)
    lam = index_from_pair(N, m0, n0)
    if any((tau[i] + 1) % n for i in range(l - 1)):
        raise ClassificationMismatch(f"isotype {tau} fails the divisibility condition for n={n}")
    if lambda_from_isotype(tau, k0) != lam:
        raise ClassificationMismatch(f"closed-form index {lam} disagrees with the isotype map")
    deg = sum(lam)
    if _closed_degree(d, m, n, tau, l) != deg:
        raise ClassificationMismatch(f"degree formula disagrees with |lambda| = {deg}")
    return SingularDatum(N, m0, n0, d, m, n, k0, tau, l, lam, deg)


def module_degree(N, m0, n0):
    tau, l = shape_from_pair(N, m0, n0)
    d = math.gcd(m0, n0)
    m, n = m0 // d, n0 // d
    deg = _closed_degree(d, m, n, tau, l)
    twice_alt = 2 * (N - n * d + 1) * (d + l - 2) - (n - 1) * (l - 1) * (l - 2)
    if m * twice_alt != 2 * deg or deg != sum(index_from_pair(N, m0, n0)):
        raise ClassificationMismatch(f"degree forms disagree for ({N}, {m0}, {n0})")
    return deg


def valid_pairs(N, max_m0=None):
    """All (m0, n0) with 2 <= n0 <= N, n0 not dividing m0, m0 up to ``max_m0``."""
    out = []
    top = max_m0 if max_m0 is not None else N * N
    for n0 in range(2, N + 1):
        for m0 in range(1, top + 1):
            if m0 % n0:
                out.append((m0, n0))
    return out


# ---------------------------------------------------------------------------
# the module attached to a datum


def murphy_labels(dat):
    """Permutations of lambda whose spectrum at kappa0 matches a tableau of shape tau."""
    N, k0 = dat.N, dat.kappa0
    tabs = syt_enumerate(dat.tau)
    by_content = {tuple(T.contents()): T for T in tabs}
    matched = {}
    for alpha in distinct_permutations(dat.lambda_):
        eta = [None] * N
        for i in range(1, N + 1):
            eta[N - i] = (xi_at(alpha, i, k0, N) - 1) / k0
        if any(e.denominator != 1 for e in eta):
            continue
        T = by_content.get(tuple(int(e) for e in eta))
        if T is None:
            continue
        if T in matched.values():
            raise ClassificationMismatch(f"two labels share the tableau {T}")
        matched[alpha] = T
    if len(matched) != len(tabs):
        raise ClassificationMismatch(
            f"{len(matched)} labels for {len(tabs)} tableaux of shape {dat.tau}"
        )
    labels = sorted(matched, key=linext_key, reverse=True)
    if labels[0] != dat.lambda_:
        raise ClassificationMismatch(f"lambda {dat.lambda_} is not among the labels")
    return labels


def singular_basis(dat):
    return [nsjp(alpha, dat.N).poly.specialize(dat.kappa0) for alpha in murphy_labels(dat)]


def verify_singular(p, k0):
    k0 = Fraction(k0)
    return all(not dunkl(p, i, k0) for i in range(1, p.nvars + 1))


# ---------------------------------------------------------------------------
# kernel oracle


def _monomials(N, degree):
    return sorted(compositions(degree, N), key=linext_key, reverse=True)


def singular_space(N, k0, degree):
    """Basis of the common kernel of all Dunkl operators at k0 on degree-``degree`` polynomials."""
    k0 = Fraction(k0)
    cols = _monomials(N, degree)
    targets = {e: t for t, e in enumerate(_monomials(N, degree - 1))} if degree else {}
    rows = {}
    for c, e in enumerate(cols):
        mono = SparsePolynomial.monomial(e)
        for i in range(1, N + 1):
            for e2, v in dunkl(mono, i, k0).terms.items():
                rows.setdefault((i, targets[e2]), {})[c] = v
    ordered = [rows[key] for key in sorted(rows)]
    basis = kernel(ordered, len(cols))
    return [SparsePolynomial(N, {cols[t]: v for t, v in enumerate(vec) if v}) for vec in basis]


def span_rows(polys, columns=None):
    """Coefficient rows of ``polys`` over a shared column order."""
    if columns is None:
        columns = sorted({e for p in polys for e in p.terms}, key=linext_key, reverse=True)
    index = {e: t for t, e in enumerate(columns)}
    return [{index[e]: c for e, c in p.terms.items()} for p in polys], columns


def _is_invariant(space):
    N = space[0].nvars
    rows, cols = span_rows(space)
    r0 = rank(rows, len(cols))
    for i in range(1, N):
        moved = [p.swap(i, i + 1) for p in space]
        rows2, cols2 = span_rows(space + moved)
        if rank(rows2, len(cols2)) != r0:
            return False
    return True


def isotype_of(space, k0):
    """The partition labelling an S_N-invariant space of singular polynomials."""
    if not space:
        raise InconsistentSpectrum("empty space has no isotype")
    k0 = Fraction(k0)
    N = space[0].nvars
    if not _is_invariant(space):
        raise NotInvariant("space is not closed under adjacent transpositions")
    lam = max((e for p in space for e in p.terms), key=linext_key)
    if any(dominates(e, lam) for p in space for e in p.terms):
        raise InconsistentSpectrum(f"{lam} is not a maximal exponent")
    tau = isotype_from_lambda(lam, k0)
    if tau is None:
        raise InconsistentSpectrum(f"leading exponent {lam} is not an index at kappa0 = {k0}")
    # the T0 eigenvector inside the space must exist and lead with lam
    eta = top_tableau(tau).contents()
    eqs = []
    for i in range(1, N + 1):
        target = 1 + k0 * eta[N - i]
        images = [cherednik_u(p, i, k0) - p.scale(target) for p in space]
        for e in sorted({e for q in images for e in q.terms}, key=linext_key):
            eqs.append({k: q.terms[e] for k, q in enumerate(images) if e in q.terms})
    sols = kernel(eqs, len(space))
    if len(sols) != 1:
        raise InconsistentSpectrum(f"T0 eigenspace has dimension {len(sols)}")
    f = SparsePolynomial.zero(N)
    for c, p in zip(sols[0], space):
        if c:
            f = f + p.scale(c)
    if f.leading_exponent() != lam:
        raise InconsistentSpectrum("T0 eigenvector does not lead with the maximal exponent")
    return tau


# ---------------------------------------------------------------------------
# nonexistence witness


@dataclass(frozen=True)
class WitnessPlan:
    N: int
    m: int
    n: int
    tau: tuple
    t: tuple
    lambda_: tuple
    gamma: tuple
    alpha: tuple
    mu: tuple
    nu: tuple
    sigma: tuple

    @property
    def kappa0(self):
        return Fraction(-self.m, self.n)

    @property
    def k(self):
        return self.N - self.tau[0]

    @property
    def d1(self):
        return (self.tau[0] + 1) // self.n


def witness_plan(N, m, n, tau):
    tau = tuple(p for p in tau if p)
    l = len(tau)
    if m < 1 or n < 2 or math.gcd(m, n) != 1:
        raise PreconditionViolated(f"need coprime m >= 1, n >= 2; got {m}, {n}")
    if sum(tau) != N or l < 2 or list(tau) != sorted(tau, reverse=True):
        raise PreconditionViolated(f"{tau} is not a partition of {N} with at least two parts")
    if any((tau[i] + 1) % n for i in range(l - 1)):
        raise PreconditionViolated(f"n = {n} must divide tau_i + 1 for i < {l}")
    if tau[1] < n:
        raise PreconditionViolated(f"need tau_2 >= n; got {tau[1]} < {n}")
    dj = [(tau[j] + 1) // n for j in range(l - 1)]
    t = tuple(sum(dj[: l - i]) for i in range(1, l))
    # blocks of lambda from the top: value m*t_i repeated tau_{l+1-i} times
    blocks = [(m * t[i - 1], tau[l - i]) for i in range(1, l)]
    lam = tuple(v for v, c in blocks for _ in range(c)) + (0,) * tau[0]
    mu_blocks = blocks[:-1] + [(blocks[-1][0], blocks[-1][1] - n)]
    mu = tuple(v for v, c in mu_blocks for _ in range(c))
    tail = (0,) * (n - 1)
    gamma = mu + tail + (m - 1,) + (m,) * tau[0]
    alpha = mu + tail + (m,) + (m,) * tau[0]
    top = m * t[-1]
    nu = (top - 1,) + (top,) * (n - 1) + (0,) * tau[0]
    sigma = (m - 1,) + (0,) * (n - 1) + (m,) * tau[0]
    return WitnessPlan(N, m, n, tau, t, lam, gamma, alpha, mu, nu, sigma)


def _prefactor(plan):
    m, n, d1 = plan.m, plan.n, plan.d1
    return affine(n, m) * (m * d1 * d1) / affine(1, m * d1)


def witness_coefficient(plan, route="insertion"):
    """coef(D_k zeta_lambda, gamma) as a rational function of kappa.

    Routes: ``insertion`` reduces to a small polynomial via the insertion
    identity, ``cyclic`` uses the companion of lambda in N variables,
    ``direct`` applies the Dunkl operator to zeta_lambda itself.
    """
    if route == "direct":
        z = nsjp(plan.lambda_, plan.N).poly
        return dunkl(z, plan.k, KAPPA).coef(plan.gamma)
    if route == "cyclic":
        lt, k = drop_tilde(plan.lambda_)
        c = nsjp(lt, plan.N).coef(apply_cycle(k, plan.gamma))
    elif route == "insertion":
        M = len(plan.nu)
        c = nsjp(plan.nu, M).coef(plan.sigma)
        if plan.mu:
            lt, k = drop_tilde(plan.lambda_)
            assert insert(1, plan.mu, plan.nu) == lt
            assert insert(1, plan.mu, plan.sigma) == apply_cycle(k, plan.gamma)
    else:
        raise ValueError(f"unknown route {route!r}")
    return _prefactor(plan) * c


def nonexistence_witness(plan, route="insertion"):
    c = witness_coefficient(plan, route)
    try:
        value = scaled_limit(c, plan.kappa0, 0)
    except PoleTooDeep:
        raise PoleAt(plan.kappa0) from None
    if value == 0:
        raise UnexpectedZero(f"witness vanishes for {plan}")
    return value

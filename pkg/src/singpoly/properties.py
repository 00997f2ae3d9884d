"""Seeded property suites used by ``singpoly verify`` and the test suite.

Each property is a function ``rng -> None`` that raises AssertionError
(or a library error) on failure.  Exhaustive checks ignore the rng.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import comb
from .comb import (
    apply_cycle,
    compositions,
    distinct_permutations,
    drop_tilde,
    in_box,
    insert,
    length,
    pad,
    rank,
    syt_enumerate,
    to_partition,
    top_tableau,
)
from .jack import (
    critical_pairs,
    e_factor,
    hook_product,
    is_critical_pair,
    nsjp,
    nsjp_coefficients,
)
from .ops import b_op, b_sum, cherednik_u, dunkl, euler, murphy_omega, pairing
from .poly import SparsePolynomial
from .scalar import KAPPA, ONE, affine, vanishing_order
from .singular import (
    datum,
    isotype_of,
    module_degree,
    singular_basis,
    singular_space,
    verify_singular,
)

__all__ = ["SUITES", "SuiteReport", "run_suite", "run_suites", "random_poly"]

Fr = Fraction


# ---------------------------------------------------------------------------
# random inputs


def repeated(times):
    """Run a randomized property ``times`` times from the same generator."""
    def wrap(fn):
        def run(rng):
            for _ in range(times):
                fn(rng)
        run.__name__ = fn.__name__
        return run
    return wrap


def random_poly(rng, nvars, degree, nterms=4, formal=True):
    """Random homogeneous polynomial with small integer (or kappa-linear) coefficients."""
    exps = list(compositions(degree, nvars))
    terms = {}
    for _ in range(nterms):
        e = rng.choice(exps)
        c = rng.randint(-3, 3)
        if formal and rng.random() < 0.3:
            c = affine(rng.randint(-2, 2), c)
        terms[e] = c
    return SparsePolynomial(nvars, terms)


def random_composition(rng, nvars, weight):
    return rng.choice(list(compositions(weight, nvars)))


# ---------------------------------------------------------------------------
# operators


@repeated(10)
def _commute(rng):
    N = rng.randint(2, 4)
    p = random_poly(rng, N, rng.randint(1, 5 if N < 4 else 4))
    i, j = rng.sample(range(1, N + 1), 2)
    assert dunkl(dunkl(p, j), i) == dunkl(dunkl(p, i), j)
    q = random_poly(rng, N, rng.randint(0, 3))
    assert cherednik_u(cherednik_u(q, j), i) == cherednik_u(cherednik_u(q, i), j)


@repeated(10)
def _equivariance(rng):
    N = rng.randint(2, 4)
    p = random_poly(rng, N, rng.randint(1, 4))
    i, j = rng.sample(range(1, N + 1), 2)
    assert dunkl(p.swap(i, j), i) == dunkl(p, j).swap(i, j)


@repeated(10)
def _u_sum(rng):
    N = rng.randint(1, 4)
    p = random_poly(rng, N, rng.randint(0, 4))
    lhs = SparsePolynomial.zero(N)
    for i in range(1, N + 1):
        lhs = lhs + cherednik_u(p, i)
    const = affine(N * (N - 1) // 2, N)
    assert lhs == p.scale(const) + euler(p)


@repeated(10)
def _b_pair(rng):
    N = rng.randint(2, 4)
    p = random_poly(rng, N, rng.randint(0, 5), formal=False)
    i, j = rng.sample(range(1, N + 1), 2)
    assert b_op(p, i, j) + b_op(p, j, i) == p


@repeated(10)
def _b_vs_u(rng):
    N = rng.randint(1, 4)
    p = random_poly(rng, N, rng.randint(0, 4), formal=False)
    i = rng.randint(1, N)
    direct = p.times_variable(i).derivative(i) + b_sum(p, i).scale(KAPPA)
    assert cherednik_u(p, i) == direct


@repeated(10)
def _invariant_subspaces(rng):
    N = rng.randint(2, 4)
    s = rng.randint(1, N)
    n = rng.randint(1, 2)
    degree = rng.randint(1, 4)
    box = [e for e in compositions(degree, N) if in_box(e, s, n)]
    for e in box:
        mono = SparsePolynomial.monomial(e)
        for i in range(1, N + 1):
            img = cherednik_u(mono, i)
            assert all(in_box(f, s, n) for f in img.terms), (e, i)


@repeated(10)
def _dcoefs_support(rng):
    N = rng.randint(2, 4)
    beta = random_composition(rng, N, rng.randint(1, 4))
    i = rng.randint(1, N)
    img = dunkl(SparsePolynomial.monomial(beta), i).times_variable(i)
    bp = to_partition(beta)
    for a in img.terms:
        ok = a == beta or (bp != to_partition(a) and comb.dominates(bp, to_partition(a)))
        if not ok:
            for j in range(1, N + 1):
                if j != i and a[i - 1] > a[j - 1]:
                    sw = list(a)
                    sw[i - 1], sw[j - 1] = sw[j - 1], sw[i - 1]
                    ok = ok or tuple(sw) == beta
        assert ok, (beta, i, a)


@repeated(10)
def _pairing_symmetry(rng):
    N = rng.randint(1, 3)
    d = rng.randint(0, 3)
    p = random_poly(rng, N, d, nterms=3, formal=False)
    q = random_poly(rng, N, d, nterms=3, formal=False)
    assert pairing(p, q) == pairing(q, p)


def _singular_murphy(rng):
    dat = rng.choice([datum(3, 1, 3), datum(3, 1, 2), datum(4, 1, 3), datum(4, 1, 4), datum(5, 2, 4)])
    k0 = dat.kappa0
    N = dat.N
    for p in singular_basis(dat):
        assert verify_singular(p, k0)
        for i in range(1, N + 1):
            assert cherednik_u(p, i, k0) == p + murphy_omega(p, N + 1 - i).scale(k0)


# ---------------------------------------------------------------------------
# jack


def _small_alphas(max_weight, max_n):
    for N in range(1, max_n + 1):
        for w in range(max_weight + 1):
            yield from ((a, N) for a in compositions(w, N))


def _eigen_relation(rng):
    for alpha, N in _small_alphas(5, 4):
        z = nsjp(alpha, N)
        for i in range(1, N + 1):
            assert cherednik_u(z.poly, i) == z.poly.scale(z.spectral[i - 1]), (alpha, i)


def _cross_i(rng):
    for alpha, N in _small_alphas(5, 4):
        nsjp_coefficients(alpha, check=True)


def _triangular_monic(rng):
    for alpha, N in _small_alphas(4, 4):
        z = nsjp(alpha, N).poly
        assert z.coef(alpha) == 1
        assert all(b == alpha or comb.dominates(alpha, b) for b in z.terms)


def _knop_sahi(rng):
    for alpha, N in _small_alphas(5, 4):
        h = hook_product(alpha, KAPPA + 1)
        for c in nsjp(alpha, N).poly.terms.values():
            v = c * h
            assert v.den_coeffs() == [1] and min(v.num_coeffs()) >= 0, (alpha, v)


@repeated(10)
def _stability(rng):
    N = rng.randint(1, 4)
    alpha = random_composition(rng, N, rng.randint(1, 4))
    small = nsjp(alpha, N).poly
    big = nsjp(alpha, N + 1).poly
    restricted = {e[:N]: c for e, c in big.terms.items() if e[N] == 0}
    assert restricted == small.terms


@repeated(10)
def _insertion(rng):
    N = rng.randint(1, 3)
    n = rng.randint(1, 2)
    s = rng.randint(1, N)
    k = rng.randint(1, 2)
    lam = tuple(sorted((rng.randint(n, n + 1) for _ in range(k - 1)), reverse=True)) + (n,)
    box = [e for w in range(1, 4) for e in compositions(w, N) if in_box(e, s, n)]
    if not box:
        return
    alpha = rng.choice(box)
    z = nsjp(alpha, N).poly
    zi = nsjp(insert(s, lam, alpha), N + len(lam)).poly
    for gamma, c in z.terms.items():
        assert zi.coef(insert(s, lam, gamma)) == c, (s, lam, alpha, gamma)


def _zdiff(rng):
    for N in range(1, 5):
        for w in range(1, 5):
            for alpha in compositions(w, N):
                at, k = drop_tilde(alpha)
                r = rank(alpha, k)
                a = alpha[k - 1]
                factor = affine(k - r, a) / affine(k + 1 - r, a) * affine(N + 1 - r, a)
                zt = nsjp(at, N).poly
                shifted = SparsePolynomial(N, {apply_cycle(k, e, inverse=True): c
                                               for e, c in zt.terms.items()})
                assert dunkl(nsjp(alpha, N).poly, k) == shifted.scale(factor), alpha


def _kpole(rng):
    z = nsjp((2, 2), 6)
    assert vanishing_order(z.coef((0, 0, 1, 1, 1, 1)), Fr(-1, 2)) == -1


# ---------------------------------------------------------------------------
# hooks


def _random_alpha(rng, max_n=5, max_w=6):
    N = rng.randint(1, max_n)
    return random_composition(rng, N, rng.randint(0, max_w))


@repeated(10)
def _hook_e_plus(rng):
    for _ in range(5):
        a = _random_alpha(rng)
        assert hook_product(a, KAPPA + 1) == hook_product(to_partition(a), KAPPA + 1) * e_factor(a, 1)


@repeated(10)
def _hook_e_minus(rng):
    for _ in range(5):
        a = _random_alpha(rng)
        assert hook_product(a, ONE) == hook_product(to_partition(a), ONE) / e_factor(a, -1)


@repeated(10)
def _hook_drop(rng):
    for _ in range(5):
        a = _random_alpha(rng)
        if not any(a):
            continue
        at, k = drop_tilde(a)
        for t in (ONE, KAPPA + 1):
            expected = affine(k - rank(a, k), a[k - 1] - 1) + t
            assert hook_product(a, t) / hook_product(at, t) == expected, a


@repeated(10)
def _hook_rectangle(rng):
    n, md = rng.randint(1, 4), rng.randint(1, 4)
    expected = ONE
    for i in range(1, n + 1):
        for j in range(1, md + 1):
            expected = expected * affine(i, j)
    assert hook_product((md,) * n, KAPPA + 1) == expected


@repeated(10)
def _hook_rectangle_multiplicity(rng):
    n = rng.randint(2, 4)
    m = rng.choice([x for x in range(1, 6) if math.gcd(x, n) == 1])
    d = rng.randint(1, 3)
    h = hook_product((m * d,) * n, KAPPA + 1)
    assert vanishing_order(h, Fr(-m, n)) == 1


# ---------------------------------------------------------------------------
# critical pairs


RECT_CASES = [(1, 2, 2), (1, 2, 3), (1, 3, 2), (3, 2, 2)]


def _twoprt1(rng):
    for m, n, d in RECT_CASES:
        got = [c.beta for c in critical_pairs((m * d,) * n, m, n, n * (d + 1))]
        assert got == [pad((0,) * n + (m,) * (n * d), n * (d + 1))], (m, n, d, got)


def _uniqb(rng):
    for m, n, d in RECT_CASES:
        lt = (m * d - 1,) + (m * d,) * (n - 1)
        got = [c.beta for c in critical_pairs(lt, m, n, n * (d + 1))]
        want = pad((m - 1,) + (0,) * (n - 1) + (m,) * (n * d - 1), n * (d + 1))
        assert got == [want], (m, n, d, got)


def _worked_examples(rng):
    lam = (6, 4, 4, 4, 2, 2, 2)
    got = {c.beta for c in critical_pairs(lam, 1, 2, 12)}
    assert pad((6, 1, 1, 1, 2, 2, 2, 3, 3, 3), 12) in got
    assert (6, 0, 0, 0, 2, 4, 4, 1, 1, 1, 1, 4) in got
    got = {c.beta for c in critical_pairs((3,) * 6, 1, 3, 15)}
    assert pad((1,) * 6 + (2,) * 6, 15) in got
    assert (1, 1, 1, 0, 0, 0) + (2,) * 6 + (1, 1, 1) in got
    assert vanishing_order(hook_product(lam, KAPPA + 1), Fr(-1, 2)) == 3
    assert vanishing_order(hook_product((3,) * 6, KAPPA + 1), Fr(-1, 3)) == 2


@repeated(10)
def _critical_brute(rng):
    N = rng.randint(2, 5)
    alpha = _random_alpha(rng, max_n=3, max_w=4)
    n = rng.randint(2, 3)
    m = rng.choice([x for x in range(1, 4) if math.gcd(x, n) == 1])
    M = max(N, length(alpha))
    got = [c.beta for c in critical_pairs(alpha, m, n, M)]
    want = []
    for mu in comb.partitions_dominated_by(to_partition(pad(alpha, M)), M):
        for b in distinct_permutations(mu):
            if is_critical_pair(alpha, b, m, n):
                want.append(b)
    assert sorted(got) == sorted(want), (alpha, m, n, M)
    k0 = Fr(-m, n)
    A = pad(alpha, M)
    for b in got:
        assert all(comb.xi_at(A, i, k0) == comb.xi_at(b, i, k0) for i in range(1, M + 1))


# ---------------------------------------------------------------------------
# singular


def _existence(rng):
    for N in range(2, 7):
        for n0 in range(2, N + 1):
            for m0 in range(1, 8 * n0 + 1):
                if m0 % n0 == 0 or module_degree(N, m0, n0) > 8:
                    continue
                dat = datum(N, m0, n0)
                basis = singular_basis(dat)
                assert len(basis) == len(syt_enumerate(dat.tau))
                assert all(verify_singular(p, dat.kappa0) for p in basis), (N, m0, n0)
                z = nsjp(dat.lambda_, N).poly.specialize(dat.kappa0)
                for i in range(1, N + 1):
                    xi = comb.xi_at(dat.lambda_, i, dat.kappa0)
                    assert cherednik_u(z, i, dat.kappa0) == z.scale(xi)


KAPPA0S = [Fr(-1, 2), Fr(-1, 3), Fr(-2, 3), Fr(-3, 2)]


def _predicted(N, k0, degree):
    m, n = -k0.numerator, k0.denominator
    hits = []
    d = 1
    while d * n <= N:
        if module_degree(N, d * m, d * n) == degree:
            hits.append(datum(N, d * m, d * n))
        d += 1
    return hits


def _completeness(rng):
    for N in range(2, 6):
        for k0 in KAPPA0S:
            for degree in range(1, 7):
                hits = _predicted(N, k0, degree)
                assert len(hits) <= 1
                space = singular_space(N, k0, degree)
                if not hits:
                    assert not space, (N, k0, degree, len(space))
                    continue
                dat = hits[0]
                assert len(space) == len(syt_enumerate(dat.tau)), (N, k0, degree)
                tau = isotype_of(space, k0)
                assert tau == dat.tau
                assert all((tau[i] + 1) % dat.n == 0 for i in range(len(tau) - 1))


def _bigtau(rng):
    for N in range(2, 11):
        for n0 in range(2, N + 1):
            for m0 in range(1, 3 * n0 + 1):
                if m0 % n0:
                    dat = datum(N, m0, n0)
                    assert all((dat.tau[i] + 1) % dat.n == 0 for i in range(dat.l - 1))


def _decreasing_degrees(rng):
    for N in range(3, 13):
        for n in range(2, N + 1):
            for m in range(1, 5):
                if math.gcd(m, n) != 1:
                    continue
                degs = [module_degree(N, d * m, d * n) for d in range(1, N // n + 1)]
                for d in range(1, len(degs)):
                    _, l = comb.shape_from_pair(N, d * m, d * n)
                    assert degs[d - 1] - degs[d] == m * (d * n + l - 2) > 0, (N, m, n, d)


def _stdtab(rng):
    for size in range(1, 8):
        for tau in comb.partitions_dominated_by((size,), size):
            tau = tuple(p for p in tau if p)
            T0 = top_tableau(tau)
            for T in syt_enumerate(tau):
                eta = T.contents()
                if all(eta[s + 1] <= eta[s] + 1 for s in range(size - 1)):
                    assert T == T0, (tau, T)
            etas = {T.contents() for T in syt_enumerate(tau)}
            assert len(etas) == len(syt_enumerate(tau)) == comb.syt_count(tau)


def _radical(rng):
    N, k0, degree = rng.choice([(3, Fr(-1, 2), 3), (3, Fr(-1, 3), 1), (4, Fr(-1, 4), 1),
                                (4, Fr(-1, 3), 2), (3, Fr(-2, 3), 2)])
    space = singular_space(N, k0, degree)
    assert space
    for p in space:
        for q in compositions(degree, N):
            mono = SparsePolynomial.monomial(q)
            assert pairing(p, mono, k0) == 0 and pairing(mono, p, k0) == 0


# ---------------------------------------------------------------------------


SUITES = {
    "operators": [
        ("commutativity", _commute),
        ("equivariance", _equivariance),
        ("cherednik sum identity", _u_sum),
        ("B_ij + B_ji = 1", _b_pair),
        ("cherednik via B_i", _b_vs_u),
        ("invariant subspaces", _invariant_subspaces),
        ("x_i D_i support", _dcoefs_support),
        ("pairing symmetry", _pairing_symmetry),
        ("singular Murphy relation", _singular_murphy),
    ],
    "jack": [
        ("eigen-relation", _eigen_relation),
        ("cross-index consistency", _cross_i),
        ("monic and triangular", _triangular_monic),
        ("Knop-Sahi positivity", _knop_sahi),
        ("variable-count stability", _stability),
        ("insertion identity", _insertion),
        ("Dunkl on NSJP", _zdiff),
        ("simple pole", _kpole),
    ],
    "hooks": [
        ("hook / E+ lemma", _hook_e_plus),
        ("hook / E- lemma", _hook_e_minus),
        ("hook drop ratio", _hook_drop),
        ("rectangular hook product", _hook_rectangle),
        ("rectangular critical multiplicity", _hook_rectangle_multiplicity),
    ],
    "critical": [
        ("rectangular uniqueness", _twoprt1),
        ("companion uniqueness", _uniqb),
        ("worked examples", _worked_examples),
        ("brute-force agreement", _critical_brute),
    ],
    "singular": [
        ("existence", _existence),
        ("completeness", _completeness),
        ("divisibility", _bigtau),
        ("decreasing degrees", _decreasing_degrees),
        ("top tableau uniqueness", _stdtab),
        ("radical", _radical),
    ],
}

SUITE_NAMES = list(SUITES) + ["all"]


@dataclass
class SuiteReport:
    suite: str
    results: list = field(default_factory=list)  # (name, ok, message)

    @property
    def passed(self):
        return sum(1 for _, ok, _ in self.results if ok)

    @property
    def total(self):
        return len(self.results)

    @property
    def ok(self):
        return self.passed == self.total

    def summary(self):
        return f"{self.suite}: {self.passed}/{self.total} properties passed"


def _run_one(args):
    name, fn, seed = args
    rng = random.Random(f"{seed}:{name}")
    try:
        fn(rng)
    except AssertionError as exc:
        return name, False, f"assertion failed {exc}".strip()
    except Exception as exc:  # a library error is a failed property too
        return name, False, f"{type(exc).__name__}: {exc}"
    return name, True, ""


def run_suite(suite, seed=0, threads=1):
    props = SUITES[suite]
    jobs = [(name, fn, seed) for name, fn in props]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    return SuiteReport(suite, results)


def run_suites(suite, seed=0, threads=1):
    names = list(SUITES) if suite == "all" else [suite]
    return [run_suite(s, seed, threads) for s in names]

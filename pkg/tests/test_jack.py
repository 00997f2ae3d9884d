from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singpoly.comb import apply_cycle, compositions, drop_tilde, length, rank, to_partition, xi, xi_at
from singpoly.errors import IndexOutOfRange, InvalidParameters
from singpoly.jack import (
    critical_pairs,
    e_factor,
    hook_datum,
    hook_product,
    is_critical_pair,
    leg_length,
    nsjp,
    nsjp_coefficients,
)
from singpoly.ops import cherednik_u, dunkl
from singpoly.poly import SparsePolynomial
from singpoly.scalar import KAPPA as k
from singpoly.scalar import ONE, affine, vanishing_order


def small_compositions(max_weight, N):
    return [a for w in range(max_weight + 1) for a in compositions(w, N)]


def test_trivial_nsjp():
    for N in (1, 3):
        rec = nsjp((0,) * N)
        assert rec.poly == SparsePolynomial.constant(N)


def test_nsjp_two_variables():
    z = nsjp((1, 0)).poly
    assert z.coef((1, 0)) == 1
    assert z.coef((0, 1)) == k / (k + 1)
    assert len(z.terms) == 2


def test_golden_coefficient():
    num = 30 * k**3 * (1 + k) ** 2 * (62 * k**3 + 135 * k**2 + 78 * k + 40)
    den = (2 * k + 3) * (2 * k + 5) * (k + 2) ** 2 * (k + 3) ** 2 * (k + 4) * (k + 5)
    assert nsjp((5, 6), 5).coef((2, 0, 3, 3, 3)) == num / den


def test_record_invariants():
    rec = nsjp((0, 2, 1))
    assert rec.coef((0, 2, 1)) == 1
    assert rec.spectral == tuple(xi((0, 2, 1), i, 3) for i in (1, 2, 3))
    assert rec.coef((0, 2)) == rec.coef((0, 2, 0))


@pytest.mark.parametrize("alpha", small_compositions(3, 3) + [(2, 0, 1, 1), (0, 1, 0, 2)])
def test_eigen_relation(alpha):
    rec = nsjp(alpha)
    for i in range(1, rec.nvars + 1):
        assert cherednik_u(rec.poly, i) == rec.poly.scale(xi(rec.alpha, i, rec.nvars))


def test_cross_index_consistency():
    for alpha in small_compositions(4, 3):
        assert nsjp_coefficients(alpha, check=True) == nsjp_coefficients(alpha)


@pytest.mark.parametrize("alpha", small_compositions(3, 3))
def test_knop_sahi_positivity(alpha):
    scaled = nsjp(alpha).poly.scale(hook_product(alpha, k + 1))
    for c in scaled.terms.values():
        assert c.den_coeffs() == [1]
        assert all(v >= 0 for v in c.num_coeffs())


@pytest.mark.parametrize("alpha", [(1, 0), (2, 1), (0, 2), (1, 1, 0), (0, 1, 2)])
def test_stability(alpha):
    small, big = nsjp(alpha), nsjp(alpha, len(alpha) + 1)
    for beta in big.poly.terms:
        if length(beta) <= len(alpha):
            assert big.coef(beta) == small.coef(beta[: len(alpha)])


def test_leg_length():
    assert leg_length((2, 2), 1, 1) == 1
    assert leg_length((1, 2), 2, 1) == 1
    assert all(leg_length((4,), 1, j) == 0 for j in range(1, 5))
    with pytest.raises(IndexOutOfRange):
        leg_length((2, 1), 2, 2)
    with pytest.raises(IndexOutOfRange):
        leg_length((2, 1), 3, 1)


def test_hook_examples():
    assert hook_product((2, 2), k + 1) == (k + 1) * (k + 2) * (2 * k + 1) * (2 * k + 2)
    assert hook_product((1,), k + 7) == k + 7
    assert hook_product((0,), k) == ONE
    assert hook_product((), Fraction(3)) == ONE
    assert hook_datum((2, 2), 1).value == hook_product((2, 2), 1)


def test_e_factor_examples():
    assert e_factor((3, 1, 1, 0)) == ONE
    assert e_factor((0, 1), "+") == 1 + k / (k + 1)
    assert e_factor((0, 1), -1) == 1 - k / (k + 1)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(lambda a: sum(a) <= 6))
def test_hook_lemmas(alpha):
    plus = to_partition(alpha) + (0,) * (len(alpha) - length(alpha))
    assert hook_product(alpha, k + 1) == hook_product(plus, k + 1) * e_factor(alpha, 1)
    assert hook_product(alpha, 1) == hook_product(plus, 1) / e_factor(alpha, -1)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(lambda a: any(a)))
def test_hook_drop(alpha):
    alpha = tuple(alpha)
    tilde, kk = drop_tilde(alpha)
    r = rank(alpha, kk)
    for t in (ONE, k + 1):
        assert hook_product(alpha, t) / hook_product(tilde, t) == affine(kk - r, alpha[kk - 1] - 1) + t


@pytest.mark.parametrize("alpha,N", [((1,), 2), ((0, 2), 2), ((1, 1), 3), ((2, 0, 1), 3), ((0, 1, 1, 1), 4)])
def test_dunkl_on_nsjp(alpha, N):
    kk = length(alpha)
    r = rank(alpha, kk)
    a = alpha[kk - 1]
    tilde, _ = drop_tilde(alpha)
    factor = affine(kk - r, a) / affine(kk + 1 - r, a) * affine(N + 1 - r, a)
    lhs = dunkl(nsjp(alpha, N).poly, kk)
    zt = nsjp(tilde, N).poly
    rhs = SparsePolynomial(N, {apply_cycle(kk, e, inverse=True): c for e, c in zt.terms.items()})
    assert lhs == rhs.scale(factor)


def test_simple_pole():
    c = nsjp((2, 2), 6).coef((0, 0, 1, 1, 1, 1))
    assert vanishing_order(c, Fraction(-1, 2)) == -1


def test_critical_pair_examples():
    assert [c.beta for c in critical_pairs((2, 2), 1, 2, 6)] == [(0, 0, 1, 1, 1, 1)]
    assert critical_pairs((1, 0), 1, 2, 3) == []
    pairs = {c.beta for c in critical_pairs((3,) * 6, 1, 3, 15)}
    assert (1,) * 6 + (2,) * 6 + (0,) * 3 in pairs
    assert (1, 1, 1, 0, 0, 0) + (2,) * 6 + (1, 1, 1) in pairs
    assert critical_pairs((2, 2), 1, 2, 6)[0].kappa0 == Fraction(-1, 2)


def test_critical_pair_errors():
    with pytest.raises(InvalidParameters):
        critical_pairs((2, 2), 2, 4)
    with pytest.raises(InvalidParameters):
        critical_pairs((1, 1, 1), 1, 2, maxlen=2)


def test_critical_pairs_match_brute_force():
    alpha, m, n, M = (2, 2, 0), 1, 2, 6
    brute = sorted(
        (b for b in compositions(sum(alpha), M) if is_critical_pair(alpha, b, m, n)),
        reverse=True,
    )
    found = sorted(c.beta for c in critical_pairs(alpha, m, n, M))
    assert found == brute
    a = alpha + (0,) * (M - len(alpha))
    for b in found:
        assert all(xi_at(a, i, Fraction(-m, n), M) == xi_at(b, i, Fraction(-m, n), M) for i in range(1, M + 1))

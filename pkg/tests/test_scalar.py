from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from singpoly.errors import PoleAt, PoleTooDeep, ZeroDenominator, ZeroFunction
from singpoly.scalar import (
    KAPPA,
    RationalFunctionK,
    eval_at,
    normalize,
    parse_rational,
    scaled_limit,
    vanishing_order,
)

k = KAPPA
coeffs = st.lists(st.integers(-6, 6), min_size=1, max_size=4)


@st.composite
def rfs(draw, nonzero=False):
    num = draw(coeffs)
    den = draw(coeffs.filter(any))
    f = RationalFunctionK(num, den)
    if nonzero:
        assume(f)
    return f


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_normalize_examples():
    assert normalize([-1, 0, 1], [-1, 1]) == k + 1
    f = normalize([2, 2], [4])
    assert f.to_lists() == ([1, 1], [2])
    assert normalize([0], [0, 1]).to_lists() == ([0], [1])
    with pytest.raises(ZeroDenominator):
        normalize([1], [0])


def test_canonical_sign_and_content():
    f = RationalFunctionK([3, 6], [-9, 0, -3])
    num, den = f.to_lists()
    assert den[-1] > 0
    assert f == (1 + 2 * k) / (-3 - k * k)


def test_text_forms():
    assert str(k / (k + 1)) == "κ / (κ+1)"
    assert str((k + 1) / 2) == "(κ+1) / 2"
    assert str(-k / (k + 1)) == "-κ / (κ+1)"
    assert str(RationalFunctionK(0)) == "0"
    assert (3 + 2 * k).format_lists() == "[3,2] / [1]"


def test_eval_at_examples():
    f = k / (k + 1)
    assert eval_at(f, 1) == Fraction(1, 2)
    with pytest.raises(PoleAt):
        eval_at(f, -1)
    assert eval_at((2 * k + 3) / (k + 2), Fraction(-3, 2)) == 0


def test_vanishing_order_examples():
    assert vanishing_order((2 * k + 3) ** 2 / (k + 1), Fraction(-3, 2)) == 2
    assert vanishing_order(1 / (3 * k + 1), Fraction(-1, 3)) == -1
    assert vanishing_order(RationalFunctionK(5), 7) == 0
    with pytest.raises(ZeroFunction):
        vanishing_order(RationalFunctionK(0), 1)


def test_scaled_limit_examples():
    assert scaled_limit(1 / (k + Fraction(1, 2)), Fraction(-1, 2), 1) == 1
    assert scaled_limit(k, 2, 0) == 2
    assert scaled_limit(3 / (2 * k + 3), Fraction(-3, 2), 1) == Fraction(3, 2)
    assert scaled_limit(k - 2, 2, 1) == 0
    with pytest.raises(PoleTooDeep):
        scaled_limit(1 / (k + 1) ** 2, -1, 1)


def test_parse_rational():
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational("−1/3") == Fraction(-1, 3)
    assert parse_rational("4") == 4


@given(rfs(), rfs(), rfs())
def test_distributive(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(rfs(nonzero=True))
def test_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == 1


@given(rfs())
def test_canonical_idempotent(a):
    b = RationalFunctionK(a.num_coeffs(), a.den_coeffs())
    assert b.to_lists() == a.to_lists()
    assert hash(a) == hash(b)


@given(rfs(), rfs())
def test_equality_matches_cross_multiplication(a, b):
    same = a.num * b.den == b.num * a.den
    assert (a == b) == same


@given(rfs(), rfs(), rationals)
def test_eval_multiplicative(f, g, k0):
    try:
        lhs = eval_at(f * g, k0)
        rhs = eval_at(f, k0) * eval_at(g, k0)
    except PoleAt:
        return
    assert lhs == rhs


@given(rfs(nonzero=True), rfs(nonzero=True), rationals)
def test_vanishing_order_additive(f, g, k0):
    assert vanishing_order(f * g, k0) == vanishing_order(f, k0) + vanishing_order(g, k0)


@given(rfs(), rationals, st.integers(0, 2))
def test_scaled_limit_agrees_with_evaluation(f, k0, power):
    shifted = (k - k0) ** power * f
    try:
        expected = eval_at(shifted, k0)
    except PoleAt:
        return
    assert scaled_limit(f, k0, power) == expected


def test_fraction_interop():
    assert Fraction(1, 2) * k == k / 2
    assert 1 - k == RationalFunctionK([1, -1])
    assert (k + 1) == RationalFunctionK([1, 1])
    assert RationalFunctionK(Fraction(3, 4)) == Fraction(3, 4)

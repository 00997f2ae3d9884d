from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singpoly.comb import (
    apply_cycle,
    contents,
    distinct_permutations,
    dominated_compositions,
    dominates,
    drop_tilde,
    index_from_pair,
    insert,
    isotype_from_lambda,
    lambda_from_isotype,
    linext_cmp,
    parse_composition,
    partitions_dominated_by,
    rank,
    ranks,
    shape_from_pair,
    syt_count,
    syt_enumerate,
    to_partition,
    top_tableau,
    xi,
)
from singpoly.errors import (
    IndexOutOfRange,
    InvalidPair,
    NonIntegralIndex,
    WeightMismatch,
    ZeroComposition,
)
from singpoly.scalar import KAPPA as k

comps = st.lists(st.integers(0, 4), min_size=1, max_size=6).map(tuple)


def test_to_partition():
    assert to_partition((2, 0, 3)) == (3, 2, 0)
    assert to_partition((1, 1, 1)) == (1, 1, 1)


def test_rank_examples():
    assert rank((2, 1, 2), 1) == 1
    assert rank((2, 1, 2), 3) == 2
    assert [rank((4, 2, 2, 0), i) for i in range(1, 5)] == [1, 2, 3, 4]
    with pytest.raises(IndexOutOfRange):
        rank((1, 0), 3)


def test_xi_examples():
    assert xi((1, 0, 0), 1, 3) == 2 * k + 2
    assert xi((2, 1, 2), 3, 3) == k + 3
    assert [xi((0, 0, 0, 0), i, 4) for i in range(1, 5)] == [(4 - i) * k + 1 for i in range(1, 5)]


def test_dominates_examples():
    assert dominates((2, 0), (1, 1))
    assert not dominates((1, 1, 0), (1, 1, 0))
    assert dominates((1, 1, 0), (1, 0, 1))
    assert not dominates((1, 0, 1), (1, 1, 0))


def test_linext_examples():
    assert linext_cmp((2, 0), (1, 1)) == 1
    assert linext_cmp((1, 0, 1), (1, 1, 0)) == -1
    assert linext_cmp((3, 1), (3, 1)) == 0
    with pytest.raises(WeightMismatch):
        linext_cmp((1, 0), (1, 1))


def test_insert_examples():
    assert insert(1, (2,), (1, 0)) == (1, 2, 0)
    assert insert(2, (), (1, 0)) == (1, 0)
    assert insert(1, (3, 3), (1, 0)) == (1, 3, 3, 0)
    with pytest.raises(IndexOutOfRange):
        insert(5, (1,), (1, 0))


def test_drop_tilde_examples():
    assert drop_tilde((6, 6)) == ((5, 6), 2)
    assert drop_tilde((5, 6)) == ((5, 5), 2)
    assert drop_tilde((0, 0, 4)) == ((3, 0, 0), 3)
    assert drop_tilde((2, 3, 0, 0)) == ((2, 2, 0, 0), 2)
    with pytest.raises(ZeroComposition):
        drop_tilde((0, 0))


def test_cycle_examples():
    assert apply_cycle(2, (5, 6, 0)) == (6, 5, 0)
    assert apply_cycle(3, ("a", "b", "c")) == ("c", "a", "b")
    assert apply_cycle(3, ("c", "a", "b"), inverse=True) == ("a", "b", "c")


def test_tableaux():
    assert len(syt_enumerate((2, 1))) == 2
    assert len(syt_enumerate((4,))) == 1
    assert len(syt_enumerate((1, 1, 1))) == 1
    assert top_tableau((2, 1)).rows == ((1, 2), (3,))
    assert contents(top_tableau((2, 1))) == (0, 1, -1)
    assert contents(top_tableau((3, 2))) == (0, 1, 2, -1, 0)
    assert contents(top_tableau((5,))) == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("tau", [(3, 2), (3, 1, 1), (2, 2, 2), (4, 2, 1), (3, 3, 1)])
def test_syt_count_matches_hook_formula(tau):
    tabs = syt_enumerate(tau)
    assert len(tabs) == syt_count(tau) == len(set(tabs))
    assert len({T.contents() for T in tabs}) == len(tabs)


def test_lambda_from_isotype():
    assert lambda_from_isotype((3, 2), Fraction(-3, 2)) == (6, 6, 0, 0, 0)
    assert lambda_from_isotype((2, 1), Fraction(-1, 3)) == (1, 0, 0)
    assert lambda_from_isotype((4,), Fraction(-2, 7)) == (0, 0, 0, 0)
    with pytest.raises(NonIntegralIndex):
        lambda_from_isotype((2, 2), Fraction(-1, 2))


@pytest.mark.parametrize("tau", [(3, 2), (2, 2, 1), (3, 3, 1), (5, 2, 2), (1, 1, 1)])
@pytest.mark.parametrize("k0", [Fraction(-1, 2), Fraction(-1, 3), Fraction(-2, 3)])
def test_isotype_divisibility(tau, k0):
    n = k0.denominator
    ok = all((tau[j] + 1) % n == 0 for j in range(len(tau) - 1))
    try:
        lam = lambda_from_isotype(tau, k0)
    except NonIntegralIndex:
        assert not ok
    else:
        assert ok
        assert isotype_from_lambda(lam, k0) == tau


def test_shape_and_index_from_pair():
    assert shape_from_pair(10, 1, 3) == ((2, 2, 2, 2, 2), 5)
    assert shape_from_pair(10, 2, 6) == ((5, 2, 2, 1), 4)
    assert shape_from_pair(10, 3, 9) == ((8, 2), 2)
    assert index_from_pair(10, 1, 3) == (4, 4, 3, 3, 2, 2, 1, 1, 0, 0)
    assert index_from_pair(10, 2, 6) == (4, 3, 3, 2, 2, 0, 0, 0, 0, 0)
    assert index_from_pair(10, 3, 9) == (3, 3) + (0,) * 8
    for bad in [(4, 2, 2), (3, 1, 4), (3, 0, 2), (3, 1, 1)]:
        with pytest.raises(InvalidPair):
            shape_from_pair(*bad)


@pytest.mark.parametrize("N", range(2, 11))
def test_index_agrees_with_isotype_map(N):
    for n0 in range(2, N + 1):
        for m0 in range(1, 2 * n0 + 2):
            if m0 % n0 == 0:
                continue
            tau, l = shape_from_pair(N, m0, n0)
            assert sum(tau) == N and len(tau) == l
            n = n0 // __import__("math").gcd(m0, n0)
            assert 1 <= tau[-1] <= n - 1
            assert index_from_pair(N, m0, n0) == lambda_from_isotype(tau, Fraction(-(m0 // (n0 // n)), n))


def test_parse_composition():
    assert parse_composition("2,0,3,3,3") == (2, 0, 3, 3, 3)
    assert parse_composition("4^2,3^2,0^2") == (4, 4, 3, 3, 0, 0)
    with pytest.raises(ValueError):
        parse_composition("1,-1")


@given(comps)
def test_ranks_form_a_permutation(alpha):
    r = [rank(alpha, i) for i in range(1, len(alpha) + 1)]
    assert sorted(r) == list(range(1, len(alpha) + 1))
    assert tuple(r) == ranks(alpha)
    assert ranks(alpha + (0, 0)) [: len(alpha)] == ranks(alpha)


@given(comps)
def test_partitions_have_identity_rank(alpha):
    lam = to_partition(alpha)
    assert ranks(lam) == tuple(range(1, len(lam) + 1))


@given(st.integers(0, 5), st.integers(1, 4), st.data())
def test_dominance_is_strict_order_refined_by_linext(w, N, data):
    from singpoly.comb import compositions

    pool = list(compositions(w, N))
    a, b, c = (data.draw(st.sampled_from(pool)) for _ in range(3))
    assert not dominates(a, a)
    if dominates(a, b):
        assert not dominates(b, a)
        assert linext_cmp(a, b) == 1
        if dominates(b, c):
            assert dominates(a, c)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=5).map(tuple))
def test_dominated_compositions_is_downset(alpha):
    down = dominated_compositions(alpha)
    assert down[0] == alpha
    assert all(b == alpha or dominates(alpha, b) for b in down)
    assert len(down) == len(set(down))


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4).map(tuple),
       st.integers(1, 3), st.integers(1, 3), st.lists(st.integers(0, 2), max_size=2))
def test_insert_rank_equations(alpha, s, n, extra):
    s = min(s, len(alpha))
    lam = tuple(sorted((n + e for e in extra), reverse=True)) + (n,)
    if any(a >= n for a in alpha[:s]) or any(a > n for a in alpha[s:]):
        return
    beta = insert(s, lam, alpha)
    kk = len(lam)
    for i in range(1, s + 1):
        assert rank(beta, i) == rank(alpha, i) + kk
    for i in range(s + 1, s + kk + 1):
        assert rank(beta, i) == i - s


def test_partitions_dominated_by():
    parts = partitions_dominated_by((3, 1), 3)
    assert set(parts) == {(3, 1, 0), (2, 2, 0), (2, 1, 1)}


def test_distinct_permutations():
    assert sorted(distinct_permutations((1, 0, 0))) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]

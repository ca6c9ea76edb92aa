from math import comb

from bsp.lemmas import (
    check_binom_bound,
    check_inequality2,
    check_lemma1,
    check_lemma2,
    _count_small_difference,
)


def test_inequality2_holds_up_to_20():
    rep = check_inequality2(20)
    assert rep.passed
    assert rep.checked == sum(d - 1 for d in range(2, 21))


def test_inequality2_equality_cases():
    rep = check_inequality2(10)
    assert all((d, d) in rep.equality_cases for d in range(2, 11))
    assert (3, 2) in rep.equality_cases  # 30 = 30


def test_inequality2_strict_case():
    rep = check_inequality2(10)
    assert (10, 3) not in rep.equality_cases
    lhs = (10 + 3) * (2**9 + 2**7)
    assert lhs < 10 * 2**10 + 20


def test_binom_bound_holds_up_to_20():
    rep = check_binom_bound(20)
    assert rep.passed


def test_binom_bound_tight_cases():
    rep = check_binom_bound(6)
    assert (3, 1) in rep.equality_cases  # 1 + 3 + 3 = 7
    assert (3, 2) in rep.equality_cases
    assert (4, 2) in rep.equality_cases  # 4 + 6 + 4 = 14 = 7/8 * 16


def test_binom_bound_boundary_j():
    # j = -1 contributes only C(n, 0); trivially below the bound
    assert comb(3, 0) == 1 <= 7


def test_lemma1_counts_spec_cases():
    # d=4, S1 = {}, S2 = {1,2}: subsets of [3] meeting {1,2} at most once
    n = 3
    count = 0
    for mask in range(1 << n):
        inter = bin(mask & 0b011).count("1")
        if inter <= 1:
            count += 1
    assert count == 6 <= 7

    # d=4, S1 = {3}, S2 = {1,2}
    count = 0
    for mask in range(1 << n):
        v = bin(mask & 0b011).count("1") - bin(mask & 0b100).count("1")
        if -1 <= v <= 1:
            count += 1
    assert count == 7


def test_lemma1_up_to_d10():
    for d in range(3, 11):
        assert check_lemma1(d).passed


def test_lemma1_bijection_formula():
    for p in range(2, 6):
        for q in range(0, 4):
            direct = _count_small_difference(p, q)
            formula = sum(
                comb(p + q, q + j) if 0 <= q + j <= p + q else 0
                for j in (-1, 0, 1)
            )
            assert direct == formula


def test_lemma2_exactly_two_families():
    for d in (3, 4, 5, 6):
        rep = check_lemma2(d)
        assert rep.passed
        assert len(rep.equality_cases) == 2
        n = d - 1
        sizes = {
            tuple(sorted(bin(s).count("1") for s in fam))
            for fam in rep.equality_cases
        }
        small = tuple(sorted([0] + [1] * n))
        big = tuple(sorted([n] + [n - 1] * n))
        assert sizes == {small, big}


def test_lemma2_d2_degenerate_reports_only():
    rep = check_lemma2(2)
    assert rep.passed  # no assertion made, just the count
    assert len(rep.equality_cases) == 1

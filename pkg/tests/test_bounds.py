import pytest

from bsp.bounds import (
    check_conjecture1,
    check_thm3,
    check_thm4,
    check_thm6_equality,
)
from bsp.constructions import construct_example, expected_sizes
from bsp.errors import BadParameterError
from bsp.family import verify_binary_products


def test_thm4_equality_cases():
    p = construct_example("cube-pair", 2)
    rep = check_thm4(p)
    assert (rep.product, rep.bound) == (12, 12)
    assert rep.passed and rep.equality
    d1 = construct_example("cube-pair", 1)
    rep1 = check_thm4(d1)
    assert rep1.product == rep1.bound == 4 and rep1.equality


def test_thm4_example3_strict():
    rep = check_thm4(construct_example("example3", 3))
    assert (rep.product, rep.bound) == (30, 32)
    assert rep.passed and not rep.equality


def test_thm3_applicability_and_equality():
    rep = check_thm3(construct_example("example3", 3))
    assert rep.applicable and rep.product == rep.bound == 30

    small = check_thm3(construct_example("cube-pair", 2))  # |B| = 3 < d+2
    assert not small.applicable

    e5 = check_thm3(construct_example("example5", 4, k=2))
    assert e5.applicable and (e5.product, e5.bound) == (72, 72)


def test_thm6_classification():
    cls = check_thm6_equality(construct_example("cube-pair", 2))
    assert cls.is_equality_case and cls.cube_side == "a"
    cls_t = check_thm6_equality(construct_example("example5", 2, k=2))
    assert cls_t.is_equality_case and cls_t.cube_side == "b"
    not_eq = check_thm6_equality(construct_example("example3", 3))
    assert not not_eq.is_equality_case
    one = check_thm6_equality(construct_example("cube-pair", 1))
    assert one.is_equality_case


def test_construct_example_sizes_match_closed_forms():
    for d in range(2, 11):
        for kind in ("example3", "example4"):
            p = construct_example(kind, d)
            assert p.sizes() == expected_sizes(kind, d)
        for k in range(d + 1):
            p = construct_example("example5", d, k=k)
            assert p.sizes() == expected_sizes("example5", d, k=k)
        cp = construct_example("cube-pair", d)
        assert cp.sizes() == expected_sizes("cube-pair", d)


def test_constructed_pairs_are_valid():
    for d in (2, 3, 4, 5):
        for kind, k in (("example3", None), ("example4", None), ("example5", 2)):
            p = construct_example(kind, d, k=k)
            assert verify_binary_products(p.family_a, p.family_b) is None


def test_construct_example_bad_parameters():
    with pytest.raises(BadParameterError):
        construct_example("example5", 3, k=4)
    with pytest.raises(BadParameterError):
        construct_example("example5", 3)
    with pytest.raises(BadParameterError):
        construct_example("nonsense", 3)
    with pytest.raises(BadParameterError):
        construct_example("example3", 0)


def test_conjecture1_examples():
    # d=5, (10,17): the k=1 clause is tight at 170
    assert check_conjecture1([(10, 17)], 5) == []
    # d=4, (16,5): k=0 clause tight at 80
    assert check_conjecture1([(16, 5)], 4) == []
    assert check_conjecture1([], 4) == []
    # fabricated violation: (17,17) at d=4 violates the k=2 clause
    violations = check_conjecture1([(17, 17)], 4)
    assert violations and violations[0].product == 289


def test_conjecture1_thresholds_are_exact():
    # k=1 at d=5 requires min > 6, so at min = 6 only the k=0 clause can
    # fire; (6, 100) violates k=0 (bound 192) but must not report k=1
    violations = check_conjecture1([(6, 100)], 5)
    assert violations and all(v.k == 0 for v in violations)
    # at min = 7 the k=1 clause fires as well
    violations7 = check_conjecture1([(7, 100)], 5)
    assert {v.k for v in violations7} == {0, 1}


def test_conjecture1_on_example5_sizes():
    for d in range(1, 9):
        sizes = [expected_sizes("example5", d, k=k) for k in range(d + 1)]
        assert check_conjecture1(sizes, d) == []

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fixbound.analysis import (
    Bound1Case,
    Family,
    check_support_partition,
    chern8_invariant,
    classify,
    conjecture_report,
    min_count_given_support,
    support_groups,
)
from fixbound.model import InvalidDimensionError, ReducedProfile, build_instance, constraint_value
from fixbound.solver import enumerate_generators, minimize


def test_classify_examples():
    r = classify(12)
    assert (r.family, r.k) == (Family.EVEN_DEGENERATE, 1)
    assert classify(3).family is Family.IDENTITY_CONSTRAINT
    assert (classify(9).family, classify(9).ell) == (Family.GENERIC, 0)
    assert (classify(8).family, classify(8).ell) == (Family.GENERIC, 0)
    with pytest.raises(InvalidDimensionError):
        classify(2)


def _ell_by_search(n):
    # largest ell whose defining inequality still holds, by counting up
    ell = 0
    if n % 2 == 0:
        m = n // 2
        while 6 * (ell + 1) ** 2 <= m:
            ell += 1
    else:
        m = (n - 1) // 2
        while 6 * (ell + 1) * (ell + 2) <= m - 1:
            ell += 1
    return ell


@pytest.mark.parametrize("n", range(4, 3000, 7))
def test_ell_matches_counting(n):
    r = classify(n)
    if r.family is Family.GENERIC:
        assert r.ell == _ell_by_search(n)


@given(st.integers(4, 10**30))
def test_ell_floor_characterization(n):
    r = classify(n)
    if r.family is not Family.GENERIC:
        return
    ell = r.ell
    if n % 2 == 0:
        m = n // 2
        assert 6 * ell * ell <= m < 6 * (ell + 1) ** 2
    else:
        m = (n - 1) // 2
        assert 6 * ell * (ell + 1) <= m - 1 < 6 * (ell + 1) * (ell + 2)


@pytest.mark.parametrize("k", range(1, 6))
def test_even_degenerate_family(k):
    n = 2 * 6 * k * k
    r = classify(n)
    assert (r.family, r.k) == (Family.EVEN_DEGENERATE, k)
    assert minimize(build_instance(n)).bound == 2


@pytest.mark.parametrize("k", range(0, 6))
def test_odd_degenerate_family(k):
    n = 2 * (6 * k * (k + 1) + 1) + 1
    expected = Family.IDENTITY_CONSTRAINT if n == 3 else Family.ODD_DEGENERATE
    r = classify(n)
    assert r.family is expected
    if expected is Family.ODD_DEGENERATE:
        assert r.k == k
    assert minimize(build_instance(n)).bound == 2


def test_only_degenerate_n_reach_two():
    for n in range(3, 400):
        degenerate = classify(n).family is not Family.GENERIC
        assert (minimize(build_instance(n)).bound == 2) == degenerate


def test_support_groups_examples():
    assert support_groups(4) == ((2,), (1,))
    assert support_groups(9) == ((4,), (4, 3, 2, 1))
    with pytest.raises(ValueError):
        support_groups(12)


def test_check_support_partition_examples():
    assert check_support_partition(build_instance(4), (1, 4)) == (True, True)
    assert check_support_partition(build_instance(5), (1, 11)) == (True, True)
    assert check_support_partition(build_instance(4), (1, 0)) == (False, True)
    with pytest.raises(ValueError):
        check_support_partition(build_instance(12), (0, 0, 0, 0, 1, 0))


@st.composite
def feasible_profile(draw):
    n = draw(st.integers(4, 120))
    if classify(n).family is not Family.GENERIC:
        n += 1
    inst = build_instance(n)
    gens = enumerate_generators(inst)
    picks = draw(st.lists(st.tuples(st.sampled_from(gens), st.integers(1, 5)), min_size=1, max_size=4))
    vec = [0] * inst.m
    for g, t in picks:
        for j, v in enumerate(g.profile):
            vec[j] += t * v
    return inst, ReducedProfile(vec)


@settings(max_examples=200)
@given(feasible_profile())
def test_support_partition_holds_on_feasible_profiles(case):
    inst, p = case
    assert constraint_value(inst, p) == 0
    assert check_support_partition(inst, p) == (True, True)


def test_generic_minimum_counts():
    # any feasible profile for generic n needs at least 3 (even) or 4 (odd) points
    for n in range(4, 300):
        if classify(n).family is Family.GENERIC:
            floor = 3 if n % 2 == 0 else 4
            assert minimize(build_instance(n)).bound >= floor


@pytest.mark.parametrize("n, case, expected", [
    (8, Bound1Case.ONE_A, 3),
    (8, Bound1Case.ONE_B, 4),
    (9, Bound1Case.TWO, 4),
])
def test_min_count_given_support(n, case, expected):
    assert min_count_given_support(n, case) == expected


def test_min_count_given_support_errors():
    with pytest.raises(ValueError):
        min_count_given_support(9, Bound1Case.ONE_A)
    with pytest.raises(ValueError):
        min_count_given_support(8, Bound1Case.TWO)
    with pytest.raises(ValueError):
        min_count_given_support(12, Bound1Case.ONE_A)


def test_conjecture_report_examples():
    r = conjecture_report(8)
    assert (r.bound, r.kosniowski_threshold, r.kosniowski_ok) == (3, 5, False)
    r = conjecture_report(5)
    assert (r.bound, r.frankel_threshold, r.frankel_ok) == (24, 6, True)
    r = conjecture_report(12)
    assert (r.bound, r.kosniowski_ok) == (2, False)


@pytest.mark.parametrize("n", range(3, 60))
def test_conjecture_report_invariants(n):
    r = conjecture_report(n)
    assert r.kosniowski_ok == (r.bound >= n // 2 + 1)
    assert r.frankel_ok == (r.bound >= n + 1)


def test_chern8():
    r = chern8_invariant(6)
    assert r.value == 2 and r.integral and r.warning is None
    assert chern8_invariant(9).value == 3
    r = chern8_invariant(7)
    assert r.value == Fraction(7, 3) and not r.integral and r.warning
    with pytest.raises(ValueError):
        chern8_invariant(0)

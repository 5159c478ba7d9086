import pytest
from hypothesis import given, settings

from src.counting import (
    a_count, antichains, brute_count, d_antichain_formula, d_by_components, d_count,
    d_ordinal_rule, d_product_rule, d_split, d_split_upper_bound, downsets, fibonacci,
    max_d_given_height, max_d_given_minimals, upsets, within_three_quarters,
)
from src.counting.checks import (
    downset_agreement_check, fibonacci_check, point_split_holds, vertical_count_check,
)
from src.counting.extremal import height_maximizer, minimals_maximizer
from src.exceptions import NotAntichain
from src.poset import (
    Poset, antichain, cardinal_sum, chain, fence, from_pairs, is_downset, is_upset,
    minimal_points, ordinal_sum, zigzag,
)
from src.poset.bits import mask_of
from tests.strategies import posets


@pytest.mark.parametrize("k", range(7))
def test_chain_and_antichain_counts(k):
    assert d_count(chain(k)) == k + 1
    assert d_count(antichain(k)) == 2 ** k


def test_empty_poset_has_one_downset():
    empty = Poset(0, ())
    assert list(downsets(empty)) == [0]
    assert d_count(empty) == 1
    assert d_split(empty, 0) == 1


def test_fence_two_has_eight_downsets():
    assert d_count(fence(2)) == 8


@pytest.mark.parametrize("k, expected", [(1, 2), (2, 3), (3, 5), (4, 8), (5, 13), (14, 987)])
def test_zigzag_downsets_are_fibonacci(k, expected):
    assert d_count(zigzag(k)) == expected
    assert fibonacci(k) == expected


def test_streams_yield_closed_sets():
    P = fence(2)
    found = list(downsets(P))
    assert len(found) == len(set(found)) == 8
    assert all(is_downset(P, D) for D in found)
    assert all(is_upset(P, U) for U in upsets(P))
    assert len(list(antichains(P))) == 8


@settings(max_examples=80, deadline=None)
@given(posets(max_points=6))
def test_all_routes_agree_with_brute_force(P):
    d = brute_count(P)
    minimals = minimal_points(P)
    assert d_count(P) == d
    assert a_count(P) == d
    assert d_split(P, minimals) == d
    assert d_antichain_formula(P, minimals) == d
    assert d_by_components(P) == d
    assert point_split_holds(P)


@settings(max_examples=40, deadline=None)
@given(posets(max_points=3), posets(max_points=3))
def test_sum_rules(O, P):
    assert d_count(cardinal_sum(O, P)) == d_product_rule(O, P)
    assert d_count(ordinal_sum(O, P)) == d_ordinal_rule(O, P)


def test_split_requires_antichain():
    with pytest.raises(NotAntichain):
        d_split(chain(2), 0b11)
    with pytest.raises(NotAntichain):
        d_antichain_formula(chain(2), 0b11)


def test_split_over_comparable_points_overcounts():
    P = chain(3)
    assert d_split_upper_bound(P, mask_of([0, 2])) >= d_count(P)


def test_extremal_values():
    assert max_d_given_minimals(3, 1) == (5, 3)
    assert max_d_given_minimals(3, 3) == (8, 1)
    assert max_d_given_height(3, 3) == (4, 6)
    assert max_d_given_height(4, 1) == (16, 1)
    assert d_count(minimals_maximizer(5, 2)) == max_d_given_minimals(5, 2)[0]
    assert d_count(height_maximizer(5, 3)) == max_d_given_height(5, 3)[0]
    with pytest.raises(ValueError):
        max_d_given_minimals(3, 0)
    with pytest.raises(ValueError):
        max_d_given_height(2, 3)


def test_three_quarters_bound():
    P = from_pairs(3, [(0, 1)])
    assert within_three_quarters(P, d_count(P))
    assert not within_three_quarters(antichain(3), d_count(antichain(3)))


def test_fibonacci_suite_passes():
    report = fibonacci_check()
    assert report.passed, report.failures


def test_agreement_suite_on_catalog(catalog5, rng):
    report = downset_agreement_check([entry.poset for entry in catalog5], rng)
    report.extend(vertical_count_check(rng, samples=60))
    assert report.passed, report.failures

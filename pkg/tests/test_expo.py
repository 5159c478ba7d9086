import pytest
from hypothesis import given, settings

from src.counting.downsets import d_count
from src.exceptions import BudgetExceeded, NotAnExtension, ParseError
from src.expo import (
    CharPoly, ExpSum, antichain_exp_sum, bijection_check, chain_exp_sum, char_poly,
    closed_forms_check, d_prime, d_prime_exhaustive, divisibility_check, divisibility_suite,
    e_incl_excl, e_levels, e_next, e_oracle_maps, e_oracle_orders, e_oracle_upsets, evaluate,
    exp_sum, fence_exp_sum, growth_bounds_check, oracle_triangle_check,
    polynomial_separation_check, recursion_check, residual, side_conditions_check, split_map,
)
from src.expo.checks import FENCE_SUMS
from src.poset import Poset, antichain, chain, fence, from_pairs
from tests.strategies import posets


def test_chain_exp_sum_text():
    assert exp_sum(chain(3)).format() == "+1*4 -1*3"
    assert chain_exp_sum(3) == exp_sum(chain(3))
    assert chain_exp_sum(0).format() == "+1*1"


def test_empty_poset_is_constant_one():
    expo = exp_sum(Poset(0, ()))
    assert expo.format() == "+1*1"
    assert [expo.evaluate(m) for m in range(4)] == [1, 1, 1, 1]


def test_antichain_exp_sum():
    assert antichain_exp_sum(2).format() == "+1*4 -2*2 +1*1"
    assert antichain_exp_sum(2) == exp_sum(antichain(2))


@pytest.mark.parametrize("t, text", sorted(FENCE_SUMS.items()))
def test_printed_fence_sums(t, text):
    assert fence_exp_sum(t).format() == text
    assert exp_sum(fence(t)) == ExpSum.parse(text)


def test_fence_requires_positive_length():
    with pytest.raises(ValueError):
        fence_exp_sum(0)


def test_parse_accepts_normal_form():
    assert ExpSum.parse("+1*4 -1*3") == chain_exp_sum(3)
    assert ExpSum.parse("  +1*4   -1*3 ") == chain_exp_sum(3)
    assert ExpSum.parse("0") == ExpSum()
    assert ExpSum().format() == "0"


@pytest.mark.parametrize("text", ["-1*3 +1*4", "+1*4 +1*4", "4^m - 3^m", "+1*4 -1*"])
def test_parse_rejects_other_forms(text):
    with pytest.raises(ParseError):
        ExpSum.parse(text)


def test_constructor_enforces_normal_form():
    with pytest.raises(ValueError):
        ExpSum(((3, 1), (4, 1)))
    with pytest.raises(ValueError):
        ExpSum(((4, 0),))


def test_evaluate():
    expo = chain_exp_sum(3)
    assert evaluate(expo, 0) == 0
    assert evaluate(expo, 1) == 1
    assert evaluate(expo, 2) == 7
    with pytest.raises(ValueError):
        expo.evaluate(-1)


def test_arithmetic_keeps_normal_form():
    a, b = chain_exp_sum(1), chain_exp_sum(2)
    assert (a * b).format() == "+1*6 -1*4 -1*3 +1*2"
    assert (a - a) == ExpSum()
    assert a.shift(2) == chain_exp_sum(3)
    assert chain_exp_sum(3).pretty() == "4^m - 3^m"


def test_small_values_by_hand():
    # pairs A ⊆ B of nonempty subsets of a 2-set
    assert e_oracle_maps(2, chain(2)) == 5
    assert e_incl_excl(2, chain(2)) == 5
    assert residual(2, chain(2)) == 4
    assert d_prime(chain(3)) == 3


@settings(max_examples=40, deadline=None)
@given(posets(max_points=3))
def test_oracles_agree_with_inclusion_exclusion(P):
    expo = exp_sum(P)
    for m in range(3):
        value = e_incl_excl(m, P)
        assert expo.evaluate(m) == value
        assert e_oracle_maps(m, P) == value
        assert e_oracle_upsets(m, P) == value
        if m + P.size <= 5:
            assert e_oracle_orders(m, P) == value


@settings(max_examples=40, deadline=None)
@given(posets(min_points=1, max_points=5))
def test_normal_form_side_conditions(P):
    expo = exp_sum(P)
    assert expo.leading == (d_count(P), 1)
    assert expo.coefficient_sum == 0
    assert expo.weighted_sum == 1
    assert d_prime(P) == d_prime_exhaustive(P)


def test_oracles_respect_budget():
    with pytest.raises(BudgetExceeded):
        e_oracle_maps(3, antichain(4), budget=10)
    with pytest.raises(BudgetExceeded):
        e_oracle_orders(3, chain(5))
    with pytest.raises(BudgetExceeded):
        e_oracle_upsets(4, antichain(3), budget=100)


def test_oracle_triangle_notes_skipped_oracles():
    report = oracle_triangle_check(antichain(3), m_max=3, budget=50)
    assert report.passed, report.failures
    assert any("skipped" in note for note in report.notes)


@pytest.mark.parametrize("P", [chain(3), fence(2), from_pairs(4, [(0, 2), (1, 2), (1, 3)])])
def test_per_poset_suites(P):
    report = side_conditions_check(P)
    report.extend(recursion_check(P, m_max=4))
    report.extend(oracle_triangle_check(P, m_max=2))
    report.extend(divisibility_suite(P, 13))
    assert report.passed, report.failures


def test_level_recursion_matches():
    P = fence(2)
    levels = e_levels(P, 3)
    assert [levels[m][P.ground] for m in range(4)] == [e_incl_excl(m, P) for m in range(4)]
    assert e_next(2, P, levels[2]) == e_incl_excl(3, P)


def test_split_map_decomposition():
    U, D, g = split_map((0b01, 0b11), 1)
    assert (U, D, g) == (0b11, 0b01, (1, 1))


@pytest.mark.parametrize("m", [1, 2])
def test_split_bijection(m):
    report = bijection_check(m, from_pairs(3, [(0, 2), (1, 2)]))
    assert report.passed, report.failures


def test_char_poly_of_single_point():
    assert char_poly(antichain(1), chain(2), 1, (1,)) == CharPoly((1, 1))
    assert str(CharPoly((1, 1))) == "z + 1"


def test_char_poly_rejects_non_extension():
    with pytest.raises(NotAnExtension):
        char_poly(antichain(1), antichain(2), 1, (1,))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_polynomial_separation(m):
    report = polynomial_separation_check(m, chain(2))
    assert report.passed, report.failures


def test_divisibility():
    # e(3, C_3) - 1 = 36
    assert divisibility_check(chain(3), 3, 3)
    assert divisibility_check(chain(3), 3, 2)
    with pytest.raises(ValueError):
        divisibility_check(chain(3), 3, 4)
    with pytest.raises(ValueError):
        divisibility_check(chain(3), 2, 3)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_growth_bounds_on_fence(m):
    report = growth_bounds_check(fence(2), m)
    assert report.passed, report.failures


def test_ratio_upper_bound_on_chain():
    report = growth_bounds_check(chain(3), 2)
    ratio = [result for result in report.results if result.name == "expo.bound.ratio-upper"]
    assert [(result.passed, result.detail) for result in ratio] == [(True, "e(m)=7 e(m+1)=37")]


def test_closed_forms_suite(catalog4):
    report = closed_forms_check([entry.poset for entry in catalog4])
    assert report.passed, report.failures

import random

import pytest
from hypothesis import given, settings

from src.exceptions import ClosureError, CycleError, PosetError
from src.poset import (
    Poset, VerticalRelation, antichain, cardinal_sum, chain, components, covers, dual,
    fence, from_pairs, height, interior, is_antichain, is_downset, is_upset, linear_extension,
    maximal_points, minimal_points, ordinal_sum, random_vertical_relation, relabel, remove,
    restrict, split_upper, up_closure, vertical_relations, vertical_sum, zigzag,
)
from src.poset.bits import compress, expand, format_mask, mask_of, popcount, submasks
from src.poset.checks import (
    all_subsets_closed, order_axioms_hold, structure_check, vertical_structure_check,
)
from src.counting.downsets import d_count
from tests.strategies import posets


def test_from_pairs_takes_transitive_closure():
    P = from_pairs(3, [(0, 1), (1, 2)])
    assert P == chain(3)
    assert P.leq(0, 2)
    assert not P.leq(2, 0)


def test_from_pairs_rejects_cycles():
    with pytest.raises(CycleError):
        from_pairs(3, [(0, 1), (1, 2), (2, 0)])


def test_from_pairs_rejects_out_of_range():
    with pytest.raises(PosetError):
        from_pairs(2, [(0, 2)])


def test_poset_rejects_non_reflexive_closure():
    with pytest.raises(PosetError):
        Poset(2, (0b10, 0b10))


def test_minimal_maximal_and_height():
    P = from_pairs(4, [(0, 2), (1, 2), (2, 3)])
    assert minimal_points(P) == mask_of([0, 1])
    assert maximal_points(P) == mask_of([3])
    assert height(P) == 3
    assert height(Poset(0, ())) == 0
    assert height(antichain(4)) == 1


def test_covers_skip_implied_relations():
    assert covers(chain(4)) == [(0, 1), (1, 2), (2, 3)]
    assert covers(antichain(3)) == []


def test_components_of_cardinal_sum():
    P = cardinal_sum(chain(2), chain(3))
    assert sorted(components(P)) == [0b00011, 0b11100]
    assert components(Poset(0, ())) == []


def test_sums_and_dual():
    assert ordinal_sum(antichain(1), antichain(1)) == chain(2)
    assert cardinal_sum(antichain(2), antichain(1)) == antichain(3)
    assert dual(chain(3)) == relabel(chain(3), [2, 1, 0])


def test_zigzag_and_fence_shapes():
    assert fence(1) == chain(2)
    Z = zigzag(4)
    assert minimal_points(Z) == mask_of([0, 2])
    assert covers(Z) == [(0, 1), (2, 1), (2, 3)]
    with pytest.raises(ValueError):
        fence(0)


def test_restrict_and_remove():
    P = chain(4)
    assert restrict(P, mask_of([1, 3])) == chain(2)
    assert remove(P, mask_of([0, 1])) == chain(2)


def test_interior_is_largest_downset_inside():
    P = fence(2)
    for U in submasks(P.ground):
        inner = interior(P, U)
        assert inner & ~U == 0
        assert is_downset(P, inner)


def test_closures_and_predicates():
    P = chain(3)
    assert up_closure(P, mask_of([1])) == mask_of([1, 2])
    assert is_upset(P, mask_of([1, 2]))
    assert not is_upset(P, mask_of([0, 2]))
    assert is_antichain(antichain(3), 0b111)
    assert not is_antichain(P, mask_of([0, 2]))


def test_relabel_requires_permutation():
    with pytest.raises(PosetError):
        relabel(chain(2), [0, 0])


def test_bit_helpers():
    assert compress(0b1010, 0b1110) == 0b101
    assert expand(0b101, 0b1110) == 0b1010
    assert format_mask(0b101) == "{0,2}"
    assert len(list(submasks(0b111))) == 8


@settings(max_examples=60, deadline=None)
@given(posets(max_points=6))
def test_random_posets_satisfy_order_axioms(P):
    assert order_axioms_hold(P)
    assert dual(dual(P)) == P


@settings(max_examples=60, deadline=None)
@given(posets(max_points=6))
def test_linear_extension_respects_order(P):
    order = linear_extension(P)
    position = {x: i for i, x in enumerate(order)}
    assert sorted(order) == list(range(P.size))
    assert all(position[x] <= position[y] for x, y in P.relation_pairs())


@settings(max_examples=30, deadline=None)
@given(posets(max_points=4))
def test_closure_laws_exhaustively(P):
    assert all_subsets_closed(P)


def test_vertical_relation_rejects_non_upset_row():
    with pytest.raises(ClosureError):
        VerticalRelation.from_rows(antichain(1), chain(2), [0b01])


def test_vertical_relation_rejects_growing_rows():
    # lower 0 < 1, so the row of 0 must contain the row of 1
    with pytest.raises(ClosureError):
        VerticalRelation.from_rows(chain(2), antichain(1), [0b0, 0b1])


def test_vertical_sum_of_single_relation_is_chain():
    V = VerticalRelation.from_rows(antichain(1), antichain(1), [0b1])
    assert vertical_sum(V) == chain(2)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_relations_from_antichain_count_is_d_power(m):
    P = fence(1)
    assert sum(1 for _ in vertical_relations(antichain(m), P)) == d_count(P) ** m


def test_every_enumerated_relation_is_valid():
    O, P = chain(2), antichain(2)
    relations = list(vertical_relations(O, P))
    # rows R[1] ⊆ R[0], each any subset of A_2
    assert len(relations) == 9
    assert len({V.pairs for V in relations}) == 9


def test_split_upper_requires_matching_parts():
    V = random_vertical_relation(chain(1), antichain(2), random.Random(1))
    with pytest.raises(ClosureError):
        split_upper(V, chain(2), antichain(0))


def test_structure_suites_pass(catalog4, rng):
    report = structure_check([entry.poset for entry in catalog4], rng)
    report.extend(vertical_structure_check(rng, samples=60))
    assert report.passed, report.failures
    assert set(report.names()) == {
        "poset.axioms", "poset.restrict-compose", "poset.dual", "poset.closures",
        "poset.vertical.extremes", "poset.vertical.associativity",
    }


def test_random_vertical_relations_are_seeded():
    first = random_vertical_relation(chain(2), fence(1), random.Random(7))
    second = random_vertical_relation(chain(2), fence(1), random.Random(7))
    assert first == second
    assert popcount(vertical_sum(first).ground) == 4

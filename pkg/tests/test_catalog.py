import pytest

from src.catalog import (
    aggregate_e_k, aggregate_exp_sum, antitonicity_check, as_extension, canonical_form,
    class_counts, d_histogram, enumerate_catalog, entry_invariants_check, exponential_sweep,
    extremal_scan, is_isomorphic, labeled_count, labeled_enumerate, leading_terms_check,
    mass_exceptions, matrices, matrix_identities_check, p_count, p_identities_check,
    poset_from_code, prime_divisibility_check, stanley_count_check, upset_classes,
)
from src.catalog.golden import (
    aggregates_check, census_check, matrices_check, named_classes_check, published,
)
from src.exceptions import BudgetExceeded, IncompleteCatalog
from src.expo import partition_check
from src.poset import Poset, antichain, chain, fence, relabel, zigzag


def test_class_counts(catalog5):
    assert class_counts(catalog5) == [1, 1, 2, 5, 16, 63]
    assert len(catalog5) == 88


def test_catalog_order_and_codes(catalog5):
    assert catalog5[1].poset == Poset(0, ())
    assert len({entry.canon for entry in catalog5}) == len(catalog5)
    with pytest.raises(IndexError):
        catalog5[0]


def test_codes_rebuild_their_class(catalog5):
    for entry in catalog5:
        rebuilt = poset_from_code(bytes.fromhex(entry.canon))
        assert is_isomorphic(rebuilt, entry.poset)
        assert canonical_form(rebuilt).hex == entry.canon


def test_lookup_ignores_labeling(catalog5):
    P = relabel(zigzag(4), [3, 0, 2, 1])
    entry = catalog5.lookup(P)
    assert is_isomorphic(entry.poset, zigzag(4))
    assert entry.downsets == 8
    assert entry.automorphisms == 1


def test_lookup_beyond_catalog(catalog5):
    with pytest.raises(IncompleteCatalog):
        catalog5.lookup(chain(6))
    with pytest.raises(IncompleteCatalog):
        catalog5.require(6)


def test_find(catalog5):
    assert catalog5.find(points=2, height=2).poset == chain(2)
    with pytest.raises(ValueError):
        catalog5.find(points=2)
    with pytest.raises(IncompleteCatalog):
        catalog5.find(points=9)


def test_automorphisms_and_copies(catalog5):
    entry = catalog5.lookup(antichain(3))
    assert (entry.automorphisms, entry.copies) == (6, 1)
    entry = catalog5.lookup(chain(3))
    assert (entry.automorphisms, entry.copies) == (1, 6)


def test_enumeration_limits():
    with pytest.raises(BudgetExceeded):
        enumerate_catalog(8)
    with pytest.raises(ValueError):
        enumerate_catalog(-1)


def test_threaded_enumeration_matches():
    single = [entry.canon for entry in enumerate_catalog(4, threads=1)]
    pooled = [entry.canon for entry in enumerate_catalog(4, threads=4)]
    assert single == pooled


def test_published_class_lookup(catalog5):
    assert published(catalog5, 1).poset == Poset(0, ())
    assert published(catalog5, 5).exp.format() == "+1*4 -1*3"
    with pytest.raises(KeyError):
        published(catalog5, 10 ** 6)


def test_aggregate_sums(catalog5):
    assert aggregate_exp_sum(catalog5, 3).format() == "+1*8 +6*6 +6*5 -6*4 -18*3 +12*2 -1*1"
    assert aggregate_e_k(catalog5, 3, 1) == 19
    with pytest.raises(IncompleteCatalog):
        aggregate_exp_sum(catalog5, 6)


def test_labeled_counts(catalog5):
    assert [labeled_count(k) for k in range(5)] == [1, 1, 3, 19, 219]
    assert [p_count(catalog5, k) for k in range(7)] == [1, 1, 3, 19, 219, 4231, 130023]
    with pytest.raises(IncompleteCatalog):
        p_count(catalog5, 7)
    with pytest.raises(BudgetExceeded):
        labeled_enumerate(6)


def test_downset_histogram():
    assert d_histogram(2) == {4: 1, 3: 2}


def test_upset_classes_of_fence(catalog5):
    classes = upset_classes(catalog5, fence(2))
    assert len(classes) == 8
    assert classes.count(catalog5[1]) == 1


def test_as_extension_reads_minimal_points():
    P, embedding, m = as_extension(chain(3))
    assert (P, embedding, m) == (chain(2), (1, 2), 1)


def test_mass_exceptions_are_published(catalog5):
    found = sorted(entry.index for entry in mass_exceptions(catalog5))
    assert found == sorted(published(catalog5, n).index for n in (71, 81))


def test_matrix_identities(catalog4):
    M = matrices(catalog4, 4)
    assert M.size == len(catalog4)
    assert M.m_max == 4
    report = matrix_identities_check(M)
    assert report.passed, report.failures


@pytest.mark.parametrize("check", [census_check, aggregates_check, named_classes_check, matrices_check])
def test_published_tables(catalog5, check):
    report = check(catalog5)
    assert report.passed, report.failures


def test_named_classes_need_four_points():
    report = named_classes_check(enumerate_catalog(3))
    assert report.passed
    assert report.notes


@pytest.mark.parametrize("k", [2, 3, 5])
def test_prime_divisibility(catalog5, k):
    report = prime_divisibility_check(catalog5, k, 6)
    assert report.passed, report.failures


def test_prime_divisibility_needs_prime(catalog5):
    with pytest.raises(ValueError):
        prime_divisibility_check(catalog5, 4, 6)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_labeled_scans(k):
    report = stanley_count_check(k)
    report.extend(extremal_scan(k))
    assert report.passed, report.failures


def test_ten_posets_on_five_points_have_seventeen_downsets():
    assert d_histogram(5)[17] == 10


def test_labeled_scans_reject_large_k():
    with pytest.raises(ValueError):
        stanley_count_check(6)
    with pytest.raises(ValueError):
        extremal_scan(0)


@pytest.mark.parametrize("k", range(6))
def test_leading_terms(catalog5, k):
    report = leading_terms_check(catalog5, k)
    assert report.passed, report.failures


def test_catalog_wide_identities(catalog5):
    report = p_identities_check(catalog5)
    report.extend(entry_invariants_check(catalog5))
    report.extend(antitonicity_check(k_max=4))
    assert report.passed, report.failures


@pytest.mark.slow
def test_exponential_sweep(catalog4):
    report = exponential_sweep(catalog4, m_max=3)
    assert report.passed, report.failures


def test_upset_partition_on_five_points(catalog5):
    five = [entry.poset for entry in catalog5 if entry.points == 5]
    assert len(five) == 63
    for P in five:
        report = partition_check(P, 4)
        assert report.passed, report.failures


@pytest.mark.slow
def test_exponential_sweep_covers_every_class(catalog5):
    report = exponential_sweep(catalog5, m_max=4)
    assert report.passed, report.failures
    partition = [result for result in report.results if result.name == "expo.partition"]
    assert len(partition) == len(catalog5)

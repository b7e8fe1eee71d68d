import pytest

from heapcox.cartan import catalog_diagram
from heapcox.catalog import catalog_heap
from heapcox.heap import dual, isomorphic, validate
from heapcox.search import SearchBudgetError, search_full_heaps, search_words


@pytest.mark.parametrize("tag,rank,count", [("A", 1, 1), ("A", 2, 2), ("C", 2, 1), ("B", 3, 1), ("D", 4, 3)])
def test_class_counts(tag, rank, count):
    found = search_full_heaps(catalog_diagram(tag, rank))
    assert len(found) == count
    assert all(validate(h, "full").ok for h in found)


def test_catalog_heaps_are_found():
    for kind, tag, l in [("A", "A", 2), ("C", "C", 2), ("B-spin", "B", 3), ("D", "D", 4), ("D-spin", "D", 4)]:
        found = search_full_heaps(catalog_diagram(tag, l))
        assert any(isomorphic(catalog_heap(kind, l), g) is not None for g in found)


def test_e6_has_two_mutually_dual_classes():
    found = search_full_heaps(catalog_diagram("E6"))
    assert len(found) >= 2
    a, b = found[0], found[1]
    assert isomorphic(a, dual(a)) is None
    assert isomorphic(dual(a), b) is not None


def test_budget_error():
    with pytest.raises(SearchBudgetError):
        search_full_heaps(catalog_diagram("E6"), budget=5)


def test_words_are_in_normal_form():
    d = catalog_diagram("D", 4)
    for w in search_words(d, (1, 1, 2, 1, 1)):
        for a, b in zip(w[1:], w[2:]):
            assert not (a > b and not d.adjacent(a, b))

import random

import networkx as nx
import pytest

from heapcox.cartan import catalog_diagram
from heapcox.catalog import catalog_heap, h3_heap
from heapcox.heap import (
    HeapElement,
    HeapError,
    MotifError,
    PeriodicHeap,
    delete_element,
    dual,
    dump_motif,
    fold,
    heap_from_word,
    interval_sum,
    isomorphic,
    load_motif,
    random_element,
    validate,
    window,
)

SAMPLE = [("A", 1), ("A", 3), ("C", 3), ("A2", 3), ("D", 5), ("B-spin", 4), ("D-spin", 5),
          ("A-string", 2), ("C-string", 3), ("E6", None), ("E7", None)]


def _order_oracle(h, lo, hi):
    """Transitive closure of level comparisons between related labels."""
    els = h.elements_between(lo, hi)
    g = nx.DiGraph()
    g.add_nodes_from(els)
    for a in els:
        for b in els:
            if a != b and (a[0] == b[0] or h.diagram.adjacent(a[0], b[0])) and h.level(*a) < h.level(*b):
                g.add_edge(a, b)
    return g, els


@pytest.mark.parametrize("kind,l", SAMPLE)
def test_full_validation(kind, l):
    h = catalog_heap(kind, l)
    for level in ("labelled", "fibred", "full"):
        assert validate(h, level).ok, validate(h, level).render()


@pytest.mark.parametrize("kind,l", SAMPLE)
def test_interval_sums_are_minus_two(kind, l):
    h = catalog_heap(kind, l)
    for p in range(h.n):
        for z in range(-3, 4):
            assert interval_sum(h, p, z) == -2


@pytest.mark.parametrize("kind,l", [("A", 2), ("C", 3), ("D", 4), ("B-spin", 3), ("E6", None)])
def test_leq_matches_reachability(kind, l):
    h = catalog_heap(kind, l)
    T = h.level_period
    g, els = _order_oracle(h, -T, 2 * T)
    inner = h.elements_between(0, T)
    for a in inner:
        reach = nx.descendants(g, a)
        for b in inner:
            assert h.leq(a, b) == (a == b or b in reach)


@pytest.mark.parametrize("kind,l", SAMPLE)
def test_deleting_an_element_breaks_fullness(kind, l):
    h = catalog_heap(kind, l)
    rng = random.Random(7)
    for _ in range(3):
        p, r = random_element(h, rng)
        assert not validate(delete_element(h, p, r), "full").ok


def test_motif_round_trip():
    for kind, l in SAMPLE:
        h = catalog_heap(kind, l)
        g = load_motif(dump_motif(h))
        assert isomorphic(h, g) is not None
        assert validate(g, "full").ok


def test_motif_errors():
    with pytest.raises(MotifError):
        load_motif("not a motif")
    text = dump_motif(catalog_heap("A", 2)).replace("period 1 1", "period 1 0")
    with pytest.raises(HeapError):
        load_motif(text)


def test_level_checks():
    d = catalog_diagram("A", 2)
    with pytest.raises(HeapError):
        PeriodicHeap(d, [(0,), (0,), (1,)], 3)
    with pytest.raises(HeapError):
        PeriodicHeap(d, [(0, 5), (1,), (2,)], 3)


def test_window_is_convex_and_finite_heaps_are_not_fibred():
    h = catalog_heap("D", 4)
    fh = window(h, 0, 1)
    els = set(fh.elements)
    for a in els:
        for b in els:
            if h.leq(a, b):
                for c in h.elements_between(h.level(*a), h.level(*b) + 1):
                    if h.leq(a, c) and h.leq(c, b):
                        assert c in els
    assert validate(fh, "labelled").ok
    assert not validate(fh, "fibred").ok


def test_dual_is_an_involution():
    for kind, l in SAMPLE:
        h = catalog_heap(kind, l)
        assert isomorphic(dual(dual(h)), h) is not None


def test_self_duality():
    assert isomorphic(catalog_heap("C", 3), dual(catalog_heap("C", 3))) is not None
    assert isomorphic(catalog_heap("D", 5), dual(catalog_heap("D", 5))) is not None
    assert isomorphic(catalog_heap("A", 3), dual(catalog_heap("A", 3))) is None


def test_isomorphism_sees_through_reindexing():
    h = catalog_heap("E6")
    g = h.reindexed((0, 1, -1, 2, 0, 1, 1))
    shifts = isomorphic(h, g)
    assert shifts is not None


@pytest.mark.parametrize("l", [2, 3, 4])
def test_folding_the_chain_heap_gives_type_c(l):
    h = catalog_heap("A", 2 * l - 1)
    mu = [(-p) % h.n for p in range(h.n)]
    g = fold(h, mu)
    c = catalog_heap("C", l)
    assert g.diagram.matrix == c.diagram.matrix
    assert validate(g, "full").ok
    assert isomorphic(g, c) is not None


def test_fold_rejects_bad_involutions():
    h = catalog_heap("A", 3)
    with pytest.raises(HeapError):
        fold(h, [1, 0, 2, 3])  # adjacent vertices swapped
    with pytest.raises(HeapError):
        fold(h, [1, 2, 3, 0])  # not an involution


def test_heap_from_word():
    d = catalog_diagram("A", 2)
    h = heap_from_word(d, [0, 1, 2])
    assert validate(h, "full").ok
    fh = heap_from_word(catalog_diagram("H3"), [0, 1, 0], periodic=False)
    assert len(fh.elements) == 3
    assert fh.leq(HeapElement(0, 0), HeapElement(0, 1))


def test_h3_heap_is_finite_and_labelled():
    fh = h3_heap()
    assert len(fh.elements) == 10
    assert validate(fh, "labelled").ok
    assert not validate(fh, "full").ok

import pytest

from closed_forms import closed_form
from heapcox import lattice as lat
from heapcox.catalog import catalog_heap, h3_heap
from heapcox.heap import FiniteHeap, HeapElement
from heapcox.cartan import catalog_diagram
from heapcox.realize import (
    E6_PERMS,
    LINE_LABELS,
    RealizationError,
    SignString,
    all_strings,
    e6_generator_perms,
    e6_orbit_table,
    emit_dot,
    format_cycles,
    hasse_graph,
    incidence,
    incidence_matrix,
    parse_cycles,
    perm_table,
    pin_e6,
    string_act,
    string_decode,
    string_encode,
    zeta,
    zeta_inv,
)
from heapcox.weyl import act_graded

ZETA_SAMPLE = [("A", 1), ("A", 2), ("A", 4), ("C", 2), ("C", 3), ("A2", 3), ("A2", 4), ("D", 4), ("D", 5)]
STRING_SAMPLE = [("B-spin", 3), ("B-spin", 5), ("D-spin", 4), ("D-spin", 6), ("A-string", 2),
                 ("A-string", 3), ("C-string", 2), ("C-string", 4)]


# -- zeta ---------------------------------------------------------------------


def test_zeta_examples():
    h = catalog_heap("A", 2)
    assert zeta(h, "A", lat.principal(h, 0, 0)) == 1
    c = catalog_heap("C", 3)
    for y in range(-2, 3):
        assert zeta(c, "C", lat.principal(c, 3, y)) == 6 * y + 4


@pytest.mark.parametrize("kind,l", ZETA_SAMPLE)
def test_zeta_is_an_order_isomorphism(kind, l):
    h = catalog_heap(kind, l)
    ids = lat.ideals_in_window(h, -2, 2)
    for F in ids:
        assert zeta_inv(h, kind, zeta(h, kind, F)) == F
    for F in ids:
        for G in ids:
            if F != G and all(a <= b for a, b in zip(F, G)):
                assert zeta(h, kind, F) < zeta(h, kind, G)


@pytest.mark.parametrize("kind,l", ZETA_SAMPLE)
def test_perm_table_closed_forms(kind, l):
    h = catalog_heap(kind, l)
    for i in range(h.n):
        for z, img in perm_table(h, kind, i, -20, 20):
            assert img == closed_form(kind, l, i, z)


def test_perm_table_small_cases():
    h = catalog_heap("A", 2)
    assert perm_table(h, "A", 1, 1, 3) == [(1, 2), (2, 1), (3, 3)]
    b = catalog_heap("A2", 3)
    rows = dict(perm_table(b, "A2", 1, -14, 14))
    for z in range(-12, 13):
        if z % 6 in (5, 0):
            assert rows[z] == z + 2
        assert rows[rows[z]] == z


def test_zeta_rejects_other_kinds():
    h = catalog_heap("B-spin", 3)
    with pytest.raises(RealizationError):
        zeta(h, "B-spin", lat.principal(h, 0, 0))


# -- strings -------------------------------------------------------------------


def test_sign_string_constraints():
    SignString("+-", "A")
    with pytest.raises(RealizationError):
        SignString("++", "A")
    with pytest.raises(RealizationError):
        SignString("+-", "D")
    with pytest.raises(RealizationError):
        SignString("+x", "B")


def test_worked_string_example():
    h = catalog_heap("B-spin", 5)
    G = lat.parse_ideal(h, "2(1),5(1)")
    e0 = lat.e0_subheap(h)
    assert len(e0.restrict(G)) == 10
    s = string_encode(h, "B-spin", G).symbols
    assert s == "++--+"
    assert string_act("B-spin", 4, (0, s)) == (0, "++-+-")
    assert string_act("B-spin", 5, (0, s)) == (0, "++---")
    assert string_act("B-spin", 3, (0, s)) == (0, "++--+")
    assert string_act("B-spin", 0, (0, s)) == (1, "----+")


@pytest.mark.parametrize("l", range(3, 9))
def test_b_decode_encode_round_trip(l):
    h = catalog_heap("B-spin", l)
    ids = lat.enumerate_height(h, 0)
    assert len(ids) == 2 ** l
    for F in ids:
        assert string_decode(h, "B-spin", string_encode(h, "B-spin", F)) == F


@pytest.mark.parametrize("kind,l", STRING_SAMPLE)
def test_string_action_commutes_with_heap_action(kind, l):
    h = catalog_heap(kind, l)
    for F in lat.enumerate_height(h, 0):
        s = string_encode(h, kind, F).symbols
        for i in range(h.n):
            g = act_graded(h, [i], lat.GradedIdeal(0, F))
            assert string_act(kind, i, (0, s)) == (g.height, string_encode(h, kind, g.rep).symbols)


def test_c_string_s0_rule():
    assert string_act("C-string", 0, (3, "+-+")) == (4, "--+")
    assert string_act("C-string", 0, (4, "--+")) == (3, "+-+")


def test_decode_errors():
    h = catalog_heap("D-spin", 4)
    with pytest.raises(RealizationError):
        string_decode(h, "D-spin", "+-")
    with pytest.raises(RealizationError):
        string_decode(h, "D-spin", "+---")
    with pytest.raises(RealizationError):
        string_act("B-spin", 9, (0, "+++"))


def test_a_strings_are_balanced():
    for l in range(1, 5):
        h = catalog_heap("A-string", l)
        got = sorted(string_encode(h, "A-string", F).symbols for F in lat.enumerate_height(h, 0))
        assert got == sorted(all_strings("A-string", 2 * l))


# -- 27 lines ------------------------------------------------------------------


def test_e6_table_entries():
    h = catalog_heap("E6")
    table = e6_orbit_table(h)
    assert len(table) == 27 and len(set(table.values())) == 27
    assert table["a2"] == lat.orbit_decompose(h, lat.principal(h, 2, 1)).rep
    assert table["c12"] == lat.orbit_decompose(h, lat.principal(h, 6, 1)).rep


def test_e6_table_rejects_the_dual_heap():
    from heapcox.heap import dual

    with pytest.raises(RealizationError):
        e6_orbit_table(dual(catalog_heap("E6")))


def test_e6_perms_are_involutions_of_six_transpositions():
    perms = e6_generator_perms(catalog_heap("E6"))
    for i, p in perms.items():
        assert all(p[p[x]] == x for x in LINE_LABELS)
        assert sum(1 for x in LINE_LABELS if p[x] != x) == 12
        assert p == parse_cycles(E6_PERMS[i])
    assert parse_cycles(format_cycles(perms[6])) == perms[6]


def test_incidence_examples():
    h = catalog_heap("E6")
    assert incidence(h, "a1", "a1") == -1
    meets = {y for y in LINE_LABELS if incidence(h, "a1", y) == 1}
    assert meets == {f"b{i}" for i in range(2, 7)} | {f"c1{j}" for j in range(2, 7)}


def test_incidence_matches_classical_model():
    """Lines meet exactly as in the classical double-six description."""

    def classical(x, y):
        if x == y:
            return -1
        if x[0] > y[0]:
            x, y = y, x
        a, b = x[0], y[0]
        ix, iy = set(x[1:]), set(y[1:])
        if a == b == "a" or a == b == "b":
            return 0
        if (a, b) == ("a", "b"):
            return 0 if ix == iy else 1
        if a in "ab" and b == "c":
            return 1 if ix <= iy else 0
        return 1 if not ix & iy else 0

    M = incidence_matrix(catalog_heap("E6"))
    for r, x in enumerate(LINE_LABELS):
        for c, y in enumerate(LINE_LABELS):
            assert M[r][c] == classical(x, y), (x, y)


def test_pin_e6_reproduces_frozen_motif():
    from heapcox.heap import isomorphic
    from heapcox.search import search_full_heaps

    found = search_full_heaps(catalog_diagram("E6"))
    g = pin_e6(found)
    h = catalog_heap("E6")
    assert g is not None
    assert isomorphic(g, h) == (0,) * 7


# -- graphs --------------------------------------------------------------------


def test_single_element_graph_and_dot():
    d = catalog_diagram("A", 1)
    fh = FiniteHeap(d, (HeapElement(1, 0),), ())
    g = hasse_graph(fh)
    assert len(g.nodes) == 2 and g.edges == ((0, 1, 1),)
    text = emit_dot(g)
    assert len(text.splitlines()) == 5
    assert 'label="1"' in text
    assert emit_dot(hasse_graph(fh)) == text


def test_h3_graph():
    g = hasse_graph(h3_heap())
    assert len(g.nodes) == 12


def test_graph_counts_match_enumeration():
    for kind, l in [("B-spin", 4), ("D-spin", 5), ("E6", None)]:
        h = catalog_heap(kind, l)
        e0 = lat.e0_subheap(h)
        assert len(hasse_graph(e0.heap).nodes) == len(lat.enumerate_height(h, 0))

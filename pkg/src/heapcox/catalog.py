"""The catalogue of full heaps.

Parametric families are built from explicit level formulas.  The exceptional
heaps (E6, E7, the G2 graph and the H3 graph) are frozen motif files in
``heapcox/data`` produced by :mod:`heapcox.search`.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .cartan import CartanError, catalog_diagram
from .heap import FiniteHeap, HeapError, PeriodicHeap, load_motif

__all__ = ["HEAP_KINDS", "catalog_heap", "h3_heap", "load_data_motif"]

# heap kind -> (diagram tag, minimum rank, rank of the diagram for a given l)
HEAP_KINDS = {
    "A": "chain heap over A_l^(1)",
    "C": "chain heap over C_l^(1)",
    "A2": "heap over A_{2l-1}^(2)",
    "D": "heap over D_l^(1) from the permutation realization",
    "B-spin": "spin heap over B_l^(1)",
    "D-spin": "spin heap over D_l^(1)",
    "A-string": "layered heap over A_{2l-1}^(1)",
    "C-string": "layered heap over D_{l+1}^(2)",
    "E6": "heap over E6^(1)",
    "E7": "heap over E7^(1)",
    "G2": "heap over the G2^(1) graph",
}

_MIN = {"A": 1, "C": 2, "A2": 3, "D": 4, "B-spin": 3, "D-spin": 4, "A-string": 1, "C-string": 2}


def _chain_levels(l):
    return [(p,) for p in range(l + 1)], l + 1


def _zigzag(l, lo_end, hi_end):
    """Levels ``p`` going up and ``2l - p`` coming down, period ``2l``."""
    rows = []
    for p in range(l + 1):
        if p == lo_end:
            rows.append((0,))
        elif p == hi_end:
            rows.append((l,))
        else:
            rows.append((p, 2 * l - p))
    return rows, 2 * l


def _a2_levels(l):
    # 1(m) at 2lm, 0(m) at 2lm + 2l - 1; middle vertices zigzag.
    rows = [(2 * l - 1,), (0,)]
    for p in range(2, l):
        rows.append((p, 2 * l - p))
    rows.append((l,))
    return rows, 2 * l


def _d_levels(l):
    rows = [(2 * l - 1,), (0,)]
    for p in range(2, l - 1):
        rows.append((p, 2 * l - p))
    rows.append((l - 1,))
    rows.append((l,))
    return rows, 2 * l


def _spin_levels(columns, l, twist=False):
    """Grid heap: column 0 alternates labels 0/1, columns carry labels x+1.

    Level is the grid height ``y``.  When ``columns == l - 1`` (type D) the
    last column alternates labels ``l - 1`` and ``l``.
    """
    T = 4
    rows = [None] * (l + 1)
    rows[0] = (-2,)
    rows[1] = (0,)
    last_split = columns == l - 1
    for x in range(1, columns):
        if last_split and x == columns - 1:
            break
        # E(x+1, z) sits at y = 2(z - 1) + (x mod 2)
        rows[x + 1] = (-2 + x % 2, x % 2)
    if last_split:
        x = columns - 1
        a, b = (l, l - 1) if not twist else (l - 1, l)
        rows[a] = (((l - 2) % 4),)
        rows[b] = ((l % 4),)
        # keep the level of the first element inside the period window
        rows[a] = ((rows[a][0] - 4) if rows[a][0] >= 2 else rows[a][0],)
        rows[b] = ((rows[b][0] - 4) if rows[b][0] >= 2 else rows[b][0],)
    return rows, T


def _layer_levels(n):
    return [(p % 2,) for p in range(n)], 2


def _parametric(kind: str, l: int) -> PeriodicHeap:
    if kind == "A":
        d = catalog_diagram("A", l)
        rows, T = _chain_levels(l)
    elif kind == "C":
        d = catalog_diagram("C", l)
        rows, T = _zigzag(l, 0, l)
    elif kind == "A2":
        d = catalog_diagram("A2", l)
        rows, T = _a2_levels(l)
    elif kind == "D":
        d = catalog_diagram("D", l)
        rows, T = _d_levels(l)
    elif kind == "B-spin":
        d = catalog_diagram("B", l)
        rows, T = _spin_levels(l, l)
    elif kind == "D-spin":
        d = catalog_diagram("D", l)
        rows, T = _spin_levels(l - 1, l, twist=_D_SPIN_TWIST)
    elif kind == "A-string":
        d = catalog_diagram("A", 2 * l - 1)
        rows, T = _layer_levels(2 * l)
    elif kind == "C-string":
        d = catalog_diagram("D2", l)
        rows, T = _layer_levels(l + 1)
    else:
        raise HeapError(f"unknown heap kind {kind!r}")
    return PeriodicHeap(d, rows, T, provenance=(f"{HEAP_KINDS[kind]}, l = {l}",))


# Which of the two labellings of the last grid column is used for D-spin heaps.
_D_SPIN_TWIST = False

_DATA = {"E6": "e6.motif", "E7": "e7.motif", "G2": "g2.motif"}


def load_data_motif(name: str) -> str:
    return resources.files("heapcox.data").joinpath(name).read_text()


@lru_cache(maxsize=None)
def catalog_heap(kind: str, l: int | None = None) -> PeriodicHeap:
    """The catalogue heap of the given kind and rank parameter ``l``."""
    if kind in _DATA:
        return load_motif(load_data_motif(_DATA[kind]))
    if kind not in _MIN:
        raise HeapError(f"unknown heap kind {kind!r}; expected one of {sorted(HEAP_KINDS)}")
    if l is None or l < _MIN[kind]:
        raise CartanError(f"rank {l} out of range for {kind} (minimum {_MIN[kind]})")
    return _parametric(kind, l)


@lru_cache(maxsize=None)
def h3_heap() -> FiniteHeap:
    from .heap import heap_from_word

    word = [int(c) for c in load_data_motif("h3.word").split()[-1].split(",")]
    return heap_from_word(catalog_diagram("H3"), word, periodic=False)

"""Backtracking searches for heaps.

Full heaps with period ``delta`` are enumerated as cyclic words containing
each vertex ``delta[p]`` times.  Words are kept in lexicographic normal form
for the commutation of non-adjacent letters, every gap between consecutive
occurrences of a letter must carry Cartan weight exactly 2, and the surviving
words are reduced to isomorphism classes.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Sequence

from .cartan import DynkinDiagram, null_root
from .heap import FiniteHeap, PeriodicHeap, heap_from_word, isomorphic, validate

__all__ = ["SearchBudgetError", "search_full_heaps", "search_words", "search_finite_heaps"]


class SearchBudgetError(RuntimeError):
    """The search budget is too small to close a period."""


def search_words(diagram: DynkinDiagram, counts: Sequence[int], full: bool = True,
                 node_limit: int | None = None) -> list[list[int]]:
    """Cyclic words starting with 0, with the given letter counts.

    With ``full`` the interval condition prunes the search.  Words are in
    lexicographic normal form with respect to commutation.
    """
    n = diagram.n
    A = diagram.matrix
    nbrs = diagram.neighbors
    total = sum(counts)
    out: list[list[int]] = []
    word = [0]
    left = list(counts)
    left[0] -= 1
    gap = [0] * n  # weight accumulated since the last occurrence (or the start)
    first_gap = [None] * n
    first_gap[0] = 0
    for q in nbrs[0]:
        gap[q] += -A[q, 0]
    seen_nodes = [0]

    def commutes(a, b):
        return a != b and not diagram.adjacent(a, b)

    def rec():
        seen_nodes[0] += 1
        if node_limit is not None and seen_nodes[0] > node_limit:
            raise SearchBudgetError(f"node limit {node_limit} exceeded")
        if len(word) == total:
            if full and any(gap[p] + first_gap[p] != 2 for p in range(n)):
                return
            out.append(list(word))
            return
        for c in range(n):
            if not left[c]:
                continue
            # lexicographic normal form
            ok = True
            for j in range(len(word) - 1, 0, -1):
                b = word[j]
                if not commutes(b, c):
                    break
                if b > c:
                    ok = False
                    break
            if not ok:
                continue
            if full:
                if first_gap[c] is not None and gap[c] != 2:
                    continue
                if first_gap[c] is None and gap[c] > 2:
                    continue
                if any(gap[q] - A[q, c] > 2 for q in nbrs[c]):
                    continue
            saved = (gap[c], first_gap[c])
            if first_gap[c] is None:
                first_gap[c] = gap[c]
            gap[c] = 0
            for q in nbrs[c]:
                gap[q] -= A[q, c]
            left[c] -= 1
            word.append(c)
            rec()
            word.pop()
            left[c] += 1
            for q in nbrs[c]:
                gap[q] += A[q, c]
            gap[c], first_gap[c] = saved

    rec()
    return out


def _dedupe(heaps: Iterable[PeriodicHeap]) -> list[PeriodicHeap]:
    classes: list[PeriodicHeap] = []
    for h in heaps:
        if not any(isomorphic(h, g) is not None for g in classes):
            classes.append(h)
    return classes


def search_full_heaps(diagram: DynkinDiagram, budget: int = 64) -> list[PeriodicHeap]:
    """All full heaps over an affine diagram with period ``delta``, up to isomorphism."""
    delta = null_root(diagram)
    if budget < sum(delta):
        raise SearchBudgetError(
            f"budget {budget} is below the {sum(delta)} elements needed per period"
        )
    words = search_words(diagram, delta, full=True)
    heaps = []
    for w in words:
        try:
            h = heap_from_word(diagram, w)
        except ValueError:
            continue
        if validate(h, "full").ok:
            heaps.append(h)
    classes = _dedupe(heaps)
    classes.sort(key=_sort_key)
    return classes


def _sort_key(h: PeriodicHeap):
    return tuple(tuple(r) for r in h.levels)


def search_periodic_heaps(diagram: DynkinDiagram, counts: Sequence[int],
                          accept: Callable[[PeriodicHeap], bool]) -> list[PeriodicHeap]:
    """Periodic heaps (not necessarily full) with given counts passing ``accept``."""
    found = []
    for w in search_words(diagram, counts, full=False):
        try:
            h = heap_from_word(diagram, w)
        except ValueError:
            continue
        if validate(h, "fibred").ok and accept(h):
            found.append(h)
    return sorted(_dedupe(found), key=_sort_key)


def search_finite_heaps(diagram: DynkinDiagram, max_len: int,
                        accept: Callable[[FiniteHeap], bool]) -> list[tuple[list[int], FiniteHeap]]:
    """Finite heaps of words up to ``max_len`` letters passing ``accept``."""
    found = []
    seen = set()
    for k in range(1, max_len + 1):
        for w in product(range(diagram.n), repeat=k):
            fh = heap_from_word(diagram, w, periodic=False)
            key = (frozenset(fh.elements), frozenset(fh.covers))
            if key in seen:
                continue
            seen.add(key)
            if accept(fh):
                found.append((list(w), fh))
    return found

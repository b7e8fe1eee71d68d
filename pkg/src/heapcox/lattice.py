"""Proper ideals of a periodic heap and the operators acting on them.

A proper ideal ``F`` is stored as its frontier: ``cut[p]`` is the largest
index ``z`` with ``E(p, z)`` in ``F``.  Meet and join are pointwise min and
max, the automorphism adds the period vector, and characters are differences
of cut vectors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .cartan import RootVector, classify_root
from .heap import FiniteHeap, HeapElement, PeriodicHeap, dual

__all__ = [
    "Frontier",
    "GradedIdeal",
    "NotApplicable",
    "LatticeError",
    "is_ideal",
    "meet_join",
    "can_raise",
    "can_lower",
    "h_eigen",
    "apply_raise",
    "apply_lower",
    "apply_reflection",
    "character",
    "is_skew",
    "height",
    "shift",
    "orbit_decompose",
    "graded_to_frontier",
    "principal",
    "generated",
    "generators",
    "parse_ideal",
    "format_ideal",
    "e0_subheap",
    "enumerate_height",
    "ideals_in_window",
    "dual_ideal",
    "connect_word",
]


class LatticeError(ValueError):
    pass


class NotApplicable(Exception):
    """The operator acts as zero on this ideal."""


class Frontier(tuple):
    """Cut vector of a proper ideal."""

    def __new__(cls, cut: Iterable[int]):
        return super().__new__(cls, (int(c) for c in cut))

    def __repr__(self):
        return f"Frontier({list(self)})"


@dataclass(frozen=True, order=True)
class GradedIdeal:
    height: int
    rep: Frontier


# ---------------------------------------------------------------------------
# basic predicates and operators


def is_ideal(h: PeriodicHeap, f: Sequence[int]) -> bool:
    if len(f) != h.n:
        return False
    for p in range(h.n):
        top = h.level(p, f[p])
        for q in h.diagram.neighbors[p]:
            if f[q] < h.below(q, top):
                return False
    return True


def meet_join(h: PeriodicHeap, F, G) -> tuple[Frontier, Frontier]:
    return Frontier(map(min, F, G)), Frontier(map(max, F, G))


def can_raise(h: PeriodicHeap, F, p: int) -> bool:
    new = h.level(p, F[p] + 1)
    return all(F[q] >= h.below(q, new) for q in h.diagram.neighbors[p])


def can_lower(h: PeriodicHeap, F, p: int) -> bool:
    return all(F[p] - 1 >= h.below(p, h.level(q, F[q])) for q in h.diagram.neighbors[p])


def h_eigen(h: PeriodicHeap, F, p: int) -> int:
    down, up = can_lower(h, F, p), can_raise(h, F, p)
    if down and not up:
        return 1
    if up and not down:
        return -1
    return 0


def _bump(F, p, k) -> Frontier:
    cut = list(F)
    cut[p] += k
    return Frontier(cut)


def apply_raise(h: PeriodicHeap, F, p: int) -> Frontier:
    if not can_raise(h, F, p):
        raise NotApplicable(f"cannot add {p}({F[p] + 1})")
    return _bump(F, p, 1)


def apply_lower(h: PeriodicHeap, F, p: int) -> Frontier:
    if not can_lower(h, F, p):
        raise NotApplicable(f"cannot remove {p}({F[p]})")
    return _bump(F, p, -1)


def apply_reflection(h: PeriodicHeap, F, p: int) -> Frontier:
    if not 0 <= p < h.n:
        raise LatticeError(f"generator {p} out of range")
    if can_lower(h, F, p):
        return _bump(F, p, -1)
    if can_raise(h, F, p):
        return _bump(F, p, 1)
    return Frontier(F)


Weights = Callable[[int, int], int]


def character(h: PeriodicHeap, F, G, weights: Weights | None = None) -> RootVector:
    """Signed count of ``G \\ F`` minus ``F \\ G`` per label."""
    if weights is None:
        return RootVector(g - f for f, g in zip(F, G))
    out = []
    for p, (f, g) in enumerate(zip(F, G)):
        if g >= f:
            out.append(sum(weights(p, z) for z in range(f + 1, g + 1)))
        else:
            out.append(-sum(weights(p, z) for z in range(g + 1, f + 1)))
    return RootVector(out)


def is_skew(h: PeriodicHeap, F, G) -> bool:
    return classify_root(h.diagram, character(h, F, G)).is_real


def height(h: PeriodicHeap, F) -> int:
    return F[0]


def shift(h: PeriodicHeap, F, k: int) -> Frontier:
    return Frontier(c + k * t for c, t in zip(F, h.periods))


def _need_unit_period(h: PeriodicHeap):
    if h.periods[0] != 1:
        raise LatticeError("the affine vertex must have period 1 for graded ideals")


def orbit_decompose(h: PeriodicHeap, F) -> GradedIdeal:
    _need_unit_period(h)
    t = height(h, F)
    return GradedIdeal(t, shift(h, F, -t))


def graded_to_frontier(h: PeriodicHeap, g: GradedIdeal) -> Frontier:
    _need_unit_period(h)
    return shift(h, g.rep, g.height)


# ---------------------------------------------------------------------------
# generated ideals and literals


def principal(h: PeriodicHeap, p: int, z: int) -> Frontier:
    """The ideal of all elements below ``E(p, z)``."""
    NEG = None
    cut: list = [NEG] * h.n
    cut[p] = z
    todo = [p]
    while todo:
        r = todo.pop()
        top = h.level(r, cut[r])
        for q in h.diagram.neighbors[r]:
            w = h.below(q, top)
            if cut[q] is None or w > cut[q]:
                cut[q] = w
                todo.append(q)
    return Frontier(cut)


def generated(h: PeriodicHeap, elements: Iterable[Sequence[int]]) -> Frontier:
    els = list(elements)
    if not els:
        raise LatticeError("an ideal literal needs at least one element")
    cuts = [principal(h, p, z) for p, z in els]
    return Frontier(max(c[p] for c in cuts) for p in range(h.n))


def generators(h: PeriodicHeap, F) -> list[HeapElement]:
    """The maximal elements of ``F``: its minimal generating antichain."""
    return [HeapElement(p, F[p]) for p in range(h.n) if can_lower(h, F, p)]


_LIT = re.compile(r"\s*(\d+)\s*\(\s*(-?\d+)\s*\)\s*")


def parse_ideal(h: PeriodicHeap, text: str) -> Frontier:
    els = []
    for part in text.split(","):
        m = _LIT.fullmatch(part)
        if not m:
            raise LatticeError(f"bad element literal {part!r}; expected p(z)")
        p, z = int(m.group(1)), int(m.group(2))
        if not 0 <= p < h.n:
            raise LatticeError(f"vertex {p} out of range")
        els.append((p, z))
    return generated(h, els)


def format_ideal(h: PeriodicHeap, F) -> str:
    return ",".join(f"{p}({z})" for p, z in generators(h, F))


# ---------------------------------------------------------------------------
# height-graded enumeration


def _closure_by_raising(h: PeriodicHeap, start: Frontier, letters) -> list[Frontier]:
    seen = {start}
    todo = [start]
    while todo:
        F = todo.pop()
        for p in letters:
            if can_raise(h, F, p):
                G = _bump(F, p, 1)
                if G not in seen:
                    seen.add(G)
                    todo.append(G)
    return sorted(seen)


def enumerate_height(h: PeriodicHeap, t: int = 0) -> list[Frontier]:
    """All proper ideals of height ``t``, in lexicographic order of cuts."""
    base = _height_zero(h)
    return [shift(h, F, t) for F in base] if t else list(base)


_CACHE: dict = {}


def _height_zero(h: PeriodicHeap) -> tuple[Frontier, ...]:
    key = ("h0", h)
    if key not in _CACHE:
        _need_unit_period(h)
        start = principal(h, 0, 0)
        letters = [p for p in range(h.n) if p != 0]
        _CACHE[key] = tuple(_closure_by_raising(h, start, letters))
    return _CACHE[key]


def ideals_in_window(h: PeriodicHeap, lo: int, hi: int) -> list[Frontier]:
    """Ideals with heights in ``[lo, hi]``."""
    out = []
    for t in range(lo, hi + 1):
        out.extend(enumerate_height(h, t))
    return out


@dataclass(frozen=True)
class E0:
    heap: FiniteHeap
    base: Frontier
    top: Frontier

    def restrict(self, F) -> frozenset:
        if F[0] != 0:
            raise LatticeError("restrict expects an ideal of height 0")
        return frozenset(
            HeapElement(p, z) for p in range(len(F)) for z in range(self.base[p] + 1, F[p] + 1)
        )

    def extend(self, G) -> Frontier:
        cut = list(self.base)
        for p, z in G:
            cut[p] = max(cut[p], z)
        return Frontier(cut)


def e0_subheap(h: PeriodicHeap) -> E0:
    """The fundamental-domain subheap and its ideal correspondence."""
    ideals = _height_zero(h)
    base = ideals[0]
    top = Frontier(max(F[p] for F in ideals) for p in range(h.n))
    els = [HeapElement(p, z) for p in range(h.n) for z in range(base[p] + 1, top[p] + 1)]
    els.sort(key=lambda e: (h.level(*e), e))
    keep = set(els)
    covers = tuple((a, b) for a in els for b in h.upper_covers(a) if b in keep)
    return E0(FiniteHeap(h.diagram, tuple(els), covers), base, top)


# ---------------------------------------------------------------------------
# duality and connecting words


def dual_ideal(h: PeriodicHeap, F) -> Frontier:
    """The complement of ``F`` read as an ideal of the dual heap."""
    return Frontier(-c - 1 for c in F)


def connect_word(h: PeriodicHeap, F, G) -> list[int]:
    """Letters taking ``F`` to ``G``: lower to ``F ^ G`` then raise to ``G``."""
    word = []
    cur = Frontier(F)
    low, _ = meet_join(h, F, G)
    while cur != low:
        for p in range(h.n):
            if cur[p] > low[p] and can_lower(h, cur, p):
                cur = _bump(cur, p, -1)
                word.append(p)
                break
        else:  # pragma: no cover - impossible for genuine ideals
            raise LatticeError("stuck while lowering")
    while cur != tuple(G):
        for p in range(h.n):
            if cur[p] < G[p] and can_raise(h, cur, p):
                cur = _bump(cur, p, 1)
                word.append(p)
                break
        else:  # pragma: no cover
            raise LatticeError("stuck while raising")
    return word

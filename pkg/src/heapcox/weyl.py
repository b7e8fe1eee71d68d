"""Weyl group words acting on ideals, roots and graded ideals."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cartan import RootVector, act_word_on_root
from .heap import PeriodicHeap
from . import lattice as lat
from .lattice import Frontier, GradedIdeal

__all__ = [
    "WeylError",
    "WeylWord",
    "parse_word",
    "act",
    "RelationReport",
    "verify_relations",
    "equivariance_check",
    "Witness",
    "faithfulness_witness",
    "reduced_words",
    "act_graded",
]


class WeylError(ValueError):
    pass


class WeylWord(tuple):
    """Generator indices; the first letter acts first."""

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, (int(x) for x in letters))

    def __str__(self):
        return ",".join(map(str, self))


def parse_word(text: str) -> WeylWord:
    text = text.strip()
    if not text:
        return WeylWord()
    if not re.fullmatch(r"\d+(\s*,\s*\d+)*", text):
        raise WeylError(f"bad word literal {text!r}; expected comma-separated vertex ids")
    return WeylWord(int(x) for x in text.split(","))


def _check_letters(h: PeriodicHeap, w: Sequence[int]) -> None:
    for i in w:
        if not 0 <= i < h.n:
            raise WeylError(f"generator {i} out of range for a diagram with {h.n} vertices")


def act(h: PeriodicHeap, w: Sequence[int], F) -> Frontier:
    _check_letters(h, w)
    F = Frontier(F)
    for i in w:
        F = lat.apply_reflection(h, F, i)
    return F


@dataclass
class RelationReport:
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} relations ({self.checked} checks)"
        return "\n".join([head] + [f"  {v}" for v in self.violations])


def verify_relations(h: PeriodicHeap, ideals: Sequence, infinite_bound: int = 10) -> RelationReport:
    """Check the Coxeter relations on every ideal of ``ideals``.

    For a pair of infinite order, check instead that every power
    ``(s_i s_j)^k`` with ``k <= infinite_bound`` moves some ideal.
    """
    rep = RelationReport()
    ideals = [Frontier(F) for F in ideals]
    n = h.n
    for F in ideals:
        for i in range(n):
            rep.checked += 1
            if act(h, [i, i], F) != F:
                rep.violations.append(f"s{i}^2 moves {lat.format_ideal(h, F)}")
    for i in range(n):
        for j in range(i + 1, n):
            m = h.diagram.coxeter_m(i, j)
            if m is None:
                for k in range(1, infinite_bound + 1):
                    rep.checked += 1
                    if all(act(h, [i, j] * k, F) == F for F in ideals):
                        rep.violations.append(f"(s{i} s{j})^{k} fixes every ideal in the window")
                continue
            for F in ideals:
                rep.checked += 1
                if act(h, [i, j] * m, F) != F:
                    rep.violations.append(f"(s{i} s{j})^{m} moves {lat.format_ideal(h, F)}")
    return rep


def equivariance_check(h: PeriodicHeap, w: Sequence[int], F, G, weights=None) -> bool:
    lhs = lat.character(h, act(h, w, F), act(h, w, G), weights)
    rhs = act_word_on_root(h.diagram, w, lat.character(h, F, G, weights))
    return lhs == rhs


@dataclass(frozen=True)
class Witness:
    ideal: Frontier
    image: Frontier
    root: int


def faithfulness_witness(h: PeriodicHeap, w: Sequence[int], search: Sequence | None = None):
    """An ideal moved by ``w``, or ``None`` when ``w`` fixes every simple root's sign.

    A simple root ``a_i`` sent to a negative root gives a pair ``F``,
    ``F + a_i`` whose character must change, so one of them moves.
    """
    _check_letters(h, w)
    n = h.n
    for i in range(n):
        img = act_word_on_root(h.diagram, w, RootVector.simple(n, i))
        if not all(c <= 0 for c in img):
            continue
        pool = search if search is not None else lat.ideals_in_window(h, -1, 1)
        for F in pool:
            if lat.can_raise(h, F, i):
                G = lat.apply_raise(h, F, i)
                for X in (F, G):
                    Y = act(h, w, X)
                    if Y != X:
                        return Witness(Frontier(X), Y, i)
        raise WeylError("no moving ideal found in the window")  # pragma: no cover
    return None


def reduced_words(diagram, max_len: int) -> list[WeylWord]:
    """One reduced word per group element of length ``1..max_len``.

    Elements are told apart by the images of the simple roots, which is a
    faithful fingerprint for the reflection representation.
    """
    n = diagram.n
    simple = [RootVector.simple(n, i) for i in range(n)]

    def key(word):
        return tuple(act_word_on_root(diagram, word, a) for a in simple)

    seen = {key(())}
    layer = [WeylWord()]
    out = []
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for i in range(n):
                # letters act first-to-last, so extending on the left adds a new first step
                v = WeylWord((i,) + tuple(w))
                k = key(v)
                if k not in seen:
                    seen.add(k)
                    nxt.append(v)
        out.extend(nxt)
        layer = nxt
    return out


def act_graded(h: PeriodicHeap, w: Sequence[int], g: GradedIdeal) -> GradedIdeal:
    F = lat.graded_to_frontier(h, g)
    return lat.orbit_decompose(h, act(h, w, F))

"""Labelled heaps over Dynkin diagrams.

A periodic heap is stored through a *level function*: every element
``E(p, z)`` gets an integer level

    L(p, z) = levels[p][z mod t_p] + (z // t_p) * T

which is strictly increasing along each chain, shifts by ``T`` under the
fundamental automorphism, and separates every pair of elements with equal or
adjacent labels.  Two such elements are ordered by comparing levels; the full
order is the transitive closure of those comparisons.  Any periodic labelled
heap admits such a presentation, and it makes interval, cover and ideal
computations local and cheap.
"""

from __future__ import annotations

import random
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .cartan import CartanError, CartanMatrix, DynkinDiagram, catalog_diagram, parse_diagram

__all__ = [
    "HeapError",
    "MotifError",
    "HeapElement",
    "PeriodicHeap",
    "FiniteHeap",
    "ValidationReport",
    "load_motif",
    "dump_motif",
    "validate",
    "window",
    "dual",
    "fold",
    "isomorphic",
    "delete_element",
    "heap_from_word",
]

LEVELS = ("labelled", "fibred", "full")


class HeapError(ValueError):
    pass


class MotifError(HeapError):
    """Malformed motif text."""


class HeapElement(NamedTuple):
    vertex: int
    index: int

    def __str__(self):
        return f"{self.vertex}({self.index})"


def _fmt(e) -> str:
    return f"{e[0]}({e[1]})"


@dataclass(frozen=True)
class PeriodicHeap:
    diagram: DynkinDiagram
    levels: tuple[tuple[int, ...], ...]
    level_period: int
    # Covering pairs as declared in a motif file; ``None`` when the heap was
    # built from levels directly (its covers are then derived).
    declared_covers: tuple[tuple[HeapElement, HeapElement], ...] | None = None
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        levels = tuple(tuple(int(x) for x in row) for row in self.levels)
        object.__setattr__(self, "levels", levels)
        if len(levels) != self.diagram.n:
            raise HeapError(f"expected {self.diagram.n} level rows, got {len(levels)}")
        T = self.level_period
        if T <= 0:
            raise HeapError("level period must be positive")
        for p, row in enumerate(levels):
            if any(b <= a for a, b in zip(row, row[1:])):
                raise HeapError(f"levels of vertex {p} are not strictly increasing")
            if row and row[-1] >= row[0] + T:
                raise HeapError(f"levels of vertex {p} span more than one period")
        for p in range(self.n):
            for q in (p,) + self.diagram.neighbors[p]:
                if q < p:
                    continue
                a = {x % T for x in levels[p]}
                b = {x % T for x in levels[q]}
                if q != p and a & b:
                    raise HeapError(f"vertices {p} and {q} share a level; order would be ambiguous")

    # -- basic data ---------------------------------------------------------

    @property
    def n(self) -> int:
        return self.diagram.n

    @property
    def periods(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.levels)

    @property
    def size(self) -> int:
        """Number of elements in one period."""
        return sum(self.periods)

    def level(self, p: int, z: int) -> int:
        t = len(self.levels[p])
        m, r = divmod(z, t)
        return self.levels[p][r] + m * self.level_period

    def below(self, q: int, x: int) -> int:
        """Largest index ``w`` with ``L(q, w) < x``."""
        row = self.levels[q]
        T = self.level_period
        m = (x - row[0]) // T
        r = bisect_left(row, x - m * T)
        return m * len(row) + r - 1

    def above(self, q: int, x: int) -> int:
        """Smallest index ``w`` with ``L(q, w) > x``."""
        return self.below(q, x + 1) + 1

    def related(self, p: int) -> tuple[int, ...]:
        return (p,) + self.diagram.neighbors[p]

    def base_elements(self) -> list[HeapElement]:
        return [HeapElement(p, r) for p in range(self.n) for r in range(len(self.levels[p]))]

    def phi(self, e, k: int = 1) -> HeapElement:
        return HeapElement(e[0], e[1] + k * len(self.levels[e[0]]))

    # -- order ----------------------------------------------------------------

    def leq(self, a, b) -> bool:
        if tuple(a) == tuple(b):
            return True
        la, lb = self.level(*a), self.level(*b)
        if la >= lb:
            return False
        if a[0] == b[0] or self.diagram.adjacent(a[0], b[0]):
            return True
        seen = {tuple(a)}
        todo = [tuple(a)]
        while todo:
            c = todo.pop()
            lc = self.level(*c)
            for q in self.related(c[0]):
                d = (q, self.above(q, lc))
                if d == tuple(b):
                    return True
                if d in seen or self.level(*d) >= lb:
                    continue
                if q == b[0] or self.diagram.adjacent(q, b[0]):
                    # d < b as soon as d sits below b on a related chain
                    return True
                seen.add(d)
                todo.append(d)
        return False

    def upper_covers(self, a) -> list[HeapElement]:
        la = self.level(*a)
        cands = [HeapElement(q, self.above(q, la)) for q in self.related(a[0])]
        out = []
        for d in cands:
            ld = self.level(*d)
            if not any(c != d and self.level(*c) < ld and self.leq(c, d) for c in cands):
                out.append(d)
        return sorted(out)

    def lower_covers(self, a) -> list[HeapElement]:
        la = self.level(*a)
        cands = [HeapElement(q, self.below(q, la)) for q in self.related(a[0])]
        out = []
        for d in cands:
            ld = self.level(*d)
            if not any(c != d and self.level(*c) > ld and self.leq(d, c) for c in cands):
                out.append(d)
        return sorted(out)

    @cached_property
    def covers(self) -> tuple[tuple[HeapElement, HeapElement], ...]:
        """Covering pairs generating the heap under the automorphism."""
        if self.declared_covers is not None:
            return self.declared_covers
        return tuple((a, b) for a in self.base_elements() for b in self.upper_covers(a))

    def elements_between(self, lo_level: int, hi_level: int) -> list[HeapElement]:
        """Elements with ``lo_level <= L < hi_level``, sorted by level."""
        out = []
        for p in range(self.n):
            if not self.levels[p]:
                continue
            for z in range(self.above(p, lo_level - 1), self.below(p, hi_level) + 1):
                out.append(HeapElement(p, z))
        out.sort(key=lambda e: (self.level(*e), e))
        return out

    def with_levels(self, levels, level_period=None) -> "PeriodicHeap":
        return PeriodicHeap(self.diagram, levels, level_period or self.level_period)

    def reindexed(self, shifts: Sequence[int]) -> "PeriodicHeap":
        """Relabel ``E(p, z)`` as ``E(p, z - shifts[p])``."""
        T = self.level_period
        rows = []
        for p, s in enumerate(shifts):
            t = len(self.levels[p])
            rows.append(tuple(self.level(p, r + s) for r in range(t)))
        return PeriodicHeap(self.diagram, rows, T, provenance=self.provenance)

    def relabelled(self, mu: Sequence[int]) -> "PeriodicHeap":
        """Move the chain of vertex ``p`` to vertex ``mu[p]`` (a diagram automorphism)."""
        rows = [None] * self.n
        for p in range(self.n):
            rows[mu[p]] = self.levels[p]
        return PeriodicHeap(self.diagram, rows, self.level_period, provenance=self.provenance)


@dataclass(frozen=True)
class FiniteHeap:
    diagram: DynkinDiagram
    elements: tuple[HeapElement, ...]
    covers: tuple[tuple[HeapElement, HeapElement], ...]

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def _down(self) -> tuple[frozenset, ...]:
        """Strict down-set of each element, as element indices."""
        idx = self.index
        preds = [[] for _ in self.elements]
        for a, b in self.covers:
            preds[idx[b]].append(idx[a])
        memo: dict[int, frozenset] = {}

        def down(i):
            if i not in memo:
                s = set()
                for j in preds[i]:
                    s.add(j)
                    s |= down(j)
                memo[i] = frozenset(s)
            return memo[i]

        for i in range(len(self.elements)):
            down(i)
        return tuple(memo[i] for i in range(len(self.elements)))

    def leq(self, a, b) -> bool:
        i, j = self.index[a], self.index[b]
        return i == j or i in self._down[j]

    def __len__(self):
        return len(self.elements)

    def is_ideal(self, subset: Iterable) -> bool:
        s = {self.index[e] for e in subset}
        return all(self._down[i] <= s for i in s)

    def ideals(self) -> list[frozenset]:
        """All order ideals (as frozensets of elements), smallest first."""
        n = len(self.elements)
        down = self._down
        seen = {frozenset()}
        frontier = [frozenset()]
        while frontier:
            nxt = []
            for I in frontier:
                for i in range(n):
                    if i not in I and down[i] <= I:
                        J = I | {i}
                        if J not in seen:
                            seen.add(J)
                            nxt.append(J)
            frontier = nxt
        els = self.elements
        out = [frozenset(els[i] for i in I) for I in seen]
        out.sort(key=lambda I: (len(I), sorted(I)))
        return out

    def to_text(self) -> str:
        lines = ["finite-heap 1", self.diagram.to_text()]
        lines += [f"element {e[0]} {e[1]}" for e in self.elements]
        lines += [f"cover {a[0]} {a[1]} < {b[0]} {b[1]}" for a, b in self.covers]
        return "\n".join(lines) + "\n"


@dataclass
class ValidationReport:
    level: str
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def render(self) -> str:
        if self.ok:
            return f"PASS {self.level}"
        return "\n".join([f"FAIL {self.level}"] + [f"  {v}" for v in self.violations])


# ---------------------------------------------------------------------------
# motif files


def _parse_diagram_lines(lines: list[str], i: int):
    head = lines[i].split()
    if head[0] == "catalog":
        if len(head) not in (2, 3):
            raise MotifError(f"bad catalog line {lines[i]!r}")
        rank = int(head[2]) if len(head) == 3 else None
        return catalog_diagram(head[1], rank), i + 1
    if head[0] == "diagram":
        n = int(head[1])
        return parse_diagram("\n".join(lines[i : i + n + 1])), i + n + 1
    raise MotifError(f"expected a diagram or catalog line, got {lines[i]!r}")


def load_motif(text: str) -> PeriodicHeap:
    """Parse a motif file and close it under the declared periods."""
    raw = text.splitlines()
    provenance = tuple(
        ln.split(":", 1)[1].strip() for ln in raw if ln.strip().startswith("# provenance:")
    )
    lines = [ln.strip() for ln in raw]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != "heap-motif 1":
        raise MotifError("missing 'heap-motif 1' header")
    try:
        diagram, i = _parse_diagram_lines(lines, 1)
    except (CartanError, IndexError, ValueError) as exc:
        raise MotifError(f"bad diagram: {exc}") from exc
    n = diagram.n
    periods: dict[int, int] = {}
    covers = []
    for ln in lines[i:]:
        tok = ln.split()
        try:
            if tok[0] == "period" and len(tok) == 3:
                p, t = int(tok[1]), int(tok[2])
                if not 0 <= p < n:
                    raise MotifError(f"period for unknown vertex {p}")
                if t < 0:
                    raise MotifError(f"negative period for vertex {p}")
                periods[p] = t
            elif tok[0] == "cover" and len(tok) == 6 and tok[3] == "<":
                a = HeapElement(int(tok[1]), int(tok[2]))
                b = HeapElement(int(tok[4]), int(tok[5]))
                covers.append((a, b))
            else:
                raise MotifError(f"unrecognised line {ln!r}")
        except ValueError as exc:
            if isinstance(exc, MotifError):
                raise
            raise MotifError(f"bad integer in line {ln!r}") from exc
    for p in range(n):
        if periods.get(p, 0) == 0:
            raise MotifError(f"vertex {p} has no elements")
    for a, b in covers:
        for e in (a, b):
            if not 0 <= e[0] < n:
                raise MotifError(f"cover references unknown vertex {e[0]}")
    t = [periods[p] for p in range(n)]
    levels, T = _levels_from_covers(n, t, covers)
    return PeriodicHeap(diagram, levels, T, tuple(covers), provenance)


def _levels_from_covers(n, t, covers):
    """Longest-path levels for the periodic closure of ``covers``."""
    nodes = [(p, r) for p in range(n) for r in range(t[p])]
    N = len(nodes)
    T = 4 * N
    edges = []
    for (p, z), (q, w) in covers:
        a, r = divmod(z, t[p])
        b, s = divmod(w, t[q])
        edges.append(((p, r), (q, s), 1 + (a - b) * T))
    for p in range(n):
        for r in range(t[p]):
            nxt = (r + 1) % t[p]
            edges.append(((p, r), (p, nxt), 1 - (T if nxt == 0 else 0)))
    dist = {v: 0 for v in nodes}
    for _ in range(N + 1):
        changed = False
        for u, v, w in edges:
            if dist[u] + w > dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    else:
        raise MotifError("covers contain a cycle: the relation is not a partial order")
    levels = [tuple(dist[(p, r)] for r in range(t[p])) for p in range(n)]
    return levels, T


def dump_motif(h: PeriodicHeap, provenance: Iterable[str] = ()) -> str:
    prov = list(provenance) or list(h.provenance)
    lines = ["heap-motif 1"]
    lines += [f"# provenance: {p}" for p in prov]
    lines.append(h.diagram.to_text())
    lines += [f"period {p} {t}" for p, t in enumerate(h.periods)]
    for a, b in sorted(h.covers):
        lines.append(f"cover {a[0]} {a[1]} < {b[0]} {b[1]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# validation


def validate(h, level: str = "full") -> ValidationReport:
    if level not in LEVELS:
        raise ValueError(f"unknown validation level {level!r}")
    if isinstance(h, FiniteHeap):
        return _validate_finite(h, level)
    rep = ValidationReport(level)
    empty = [p for p in range(h.n) if not h.levels[p]]
    if empty:
        rep.violations += [f"vertex {p} has no elements" for p in empty]
        return rep
    _check_labelled(h, rep)
    if level in ("fibred", "full") and rep.ok:
        _check_fibred(h, rep)
    if level == "full" and rep.ok:
        _check_full(h, rep)
    return rep


def _check_labelled(h: PeriodicHeap, rep: ValidationReport) -> None:
    d = h.diagram
    if h.declared_covers is None:
        return
    for a, b in h.declared_covers:
        if a[0] != b[0] and not d.adjacent(a[0], b[0]):
            rep.violations.append(f"cover {_fmt(a)} < {_fmt(b)} joins non-adjacent labels")
    if rep.violations:
        return
    # Reachability in the periodic closure of the declared covers, checked on
    # a three-period window against the level comparisons.
    t = h.periods
    succ: dict[tuple, list] = {}
    for a, b in h.declared_covers:
        ra, ma = a[1] % t[a[0]], a[1] // t[a[0]]
        succ.setdefault((a[0], ra), []).append((b[0], b[1] - ma * t[b[0]]))

    def successors(e):
        p, z = e
        m, r = divmod(z, t[p])
        return [(q, w + m * t[q]) for q, w in succ.get((p, r), [])]

    def reaches(a, b) -> bool:
        lb = h.level(*b)
        seen = {a}
        todo = [a]
        while todo:
            c = todo.pop()
            for d in successors(c):
                if d == b:
                    return True
                if d not in seen and h.level(*d) < lb:
                    seen.add(d)
                    todo.append(d)
        return False

    for a, b in h.declared_covers:
        if h.level(*a) >= h.level(*b):
            rep.violations.append(f"cover {_fmt(a)} < {_fmt(b)} contradicts the chain order")
    els = [e for e in _window_elements(h, -1, 2)]
    for a in els:
        for b in els:
            if a == b or h.level(*a) >= h.level(*b):
                continue
            if a[0] == b[0] or d.adjacent(a[0], b[0]):
                if not reaches(tuple(a), tuple(b)):
                    rep.violations.append(
                        f"elements {_fmt(a)} and {_fmt(b)} have related labels but are incomparable"
                    )
                    if len(rep.violations) > 20:
                        return
    for a, b in h.declared_covers:
        if b not in h.upper_covers(a):
            rep.violations.append(f"declared cover {_fmt(a)} < {_fmt(b)} is not a covering relation")


def _check_fibred(h: PeriodicHeap, rep: ValidationReport) -> None:
    for a in h.base_elements():
        nbrs = {e[0] for e in h.upper_covers(a)} | {e[0] for e in h.lower_covers(a)}
        for q in h.diagram.neighbors[a[0]]:
            if q not in nbrs:
                rep.violations.append(f"element {_fmt(a)} has no covering neighbour labelled {q}")


def interval_sum(h: PeriodicHeap, p: int, z: int) -> int:
    """Cartan-weighted content of the open interval (p(z), p(z+1))."""
    lo, hi = h.level(p, z), h.level(p, z + 1)
    A = h.diagram.matrix
    total = 0
    for q in h.diagram.neighbors[p]:
        count = h.below(q, hi) - h.below(q, lo + 1)
        total += A[p, q] * count
    return total


def _check_full(h: PeriodicHeap, rep: ValidationReport) -> None:
    for p in range(h.n):
        for z in range(h.periods[p]):
            s = interval_sum(h, p, z)
            if s != -2:
                rep.violations.append(
                    f"interval ({p}({z}), {p}({z + 1})) has weighted content {s}, expected -2"
                )


def _validate_finite(fh: FiniteHeap, level: str) -> ValidationReport:
    rep = ValidationReport(level)
    d = fh.diagram
    for a, b in fh.covers:
        if a[0] != b[0] and not d.adjacent(a[0], b[0]):
            rep.violations.append(f"cover {_fmt(a)} < {_fmt(b)} joins non-adjacent labels")
    for a in fh.elements:
        for b in fh.elements:
            if a < b and (a[0] == b[0] or d.adjacent(a[0], b[0])):
                if not (fh.leq(a, b) or fh.leq(b, a)):
                    rep.violations.append(f"{_fmt(a)} and {_fmt(b)} are incomparable")
    if level != "labelled":
        rep.violations.append("finite heaps are never fibred: chains are bounded")
    return rep


# ---------------------------------------------------------------------------
# windows, duals, folding, isomorphism


def _window_elements(h: PeriodicHeap, lo: int, hi: int) -> list[HeapElement]:
    return [
        HeapElement(p, z)
        for p in range(h.n)
        for z in range(lo * h.periods[p], hi * h.periods[p])
    ]


def window(h: PeriodicHeap, lo: int, hi: int) -> FiniteHeap:
    """The slice ``lo*t_p <= z < hi*t_p`` made convex, as a finite heap."""
    if lo > hi:
        raise ValueError("window needs lo <= hi")
    core = set(_window_elements(h, lo, hi))
    if core:
        lmin = min(h.level(*e) for e in core)
        lmax = max(h.level(*e) for e in core)
        for c in h.elements_between(lmin, lmax + 1):
            if c in core:
                continue
            if any(h.leq(a, c) for a in core) and any(h.leq(c, b) for b in core):
                core.add(c)
    els = tuple(sorted(core, key=lambda e: (h.level(*e), e)))
    covers = tuple((a, b) for a in els for b in h.upper_covers(a) if b in core)
    return FiniteHeap(h.diagram, els, covers)


def dual(h: PeriodicHeap) -> PeriodicHeap:
    """Reverse the order; ``E*(p, z)`` is the image of ``E(p, -z)``."""
    T = h.level_period
    rows = []
    for p in range(h.n):
        t = h.periods[p]
        rows.append(tuple(-h.level(p, -r) for r in range(t)))
    return PeriodicHeap(h.diagram, rows, T)


def isomorphic(h1: PeriodicHeap, h2: PeriodicHeap):
    """Return index shifts ``s`` with ``E1(p, z) -> E2(p, z + s[p])``, or ``None``."""
    if h1.diagram.matrix != h2.diagram.matrix or h1.periods != h2.periods:
        return None
    n = h1.n
    nbrs = h1.diagram.neighbors

    def D(h, q, p, z):
        return h.below(q, h.level(p, z))

    for s0 in range(h1.periods[0]):
        shift = {0: s0}
        todo = deque([0])
        ok = True
        while todo and ok:
            p = todo.popleft()
            for q in nbrs[p]:
                s = D(h2, q, p, shift[p]) - D(h1, q, p, 0)
                if q not in shift:
                    shift[q] = s
                    todo.append(q)
        if len(shift) != n:
            continue
        for p in range(n):
            for q in nbrs[p]:
                for z in range(h1.periods[p]):
                    if D(h2, q, p, z + shift[p]) != D(h1, q, p, z) + shift[q]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return tuple(shift[p] for p in range(n))
    return None


def fold(h: PeriodicHeap, mu: Sequence[int]) -> PeriodicHeap:
    """Quotient ``h`` by a diagram involution ``mu``."""
    d = h.diagram
    n = d.n
    mu = tuple(mu)
    if sorted(mu) != list(range(n)):
        raise HeapError("mu is not a permutation of the vertices")
    if any(mu[mu[p]] != p for p in range(n)):
        raise HeapError("mu is not an involution")
    if all(mu[p] == p for p in range(n)):
        raise HeapError("mu is the identity")
    if not d.matrix.is_simply_laced():
        raise HeapError("folding needs a simply laced diagram")
    for p in range(n):
        for q in range(n):
            if d.matrix[p, q] != d.matrix[mu[p], mu[q]]:
                raise HeapError("mu is not a diagram automorphism")
        if mu[p] != p and d.adjacent(p, mu[p]):
            raise HeapError(f"vertex {p} is adjacent to its image {mu[p]}")
    # Comparability: labels p, q with mu(p) equal or adjacent to q.
    for p in range(n):
        for q in range(n):
            if not (mu[p] == q or d.adjacent(mu[p], q)):
                continue
            if p == q or d.adjacent(p, q):
                continue
            for z in range(h.periods[p]):
                a = (p, z)
                la = h.level(*a)
                for w in range(h.below(q, la - 2 * h.level_period), h.above(q, la + 2 * h.level_period)):
                    b = (q, w)
                    if not (h.leq(a, b) or h.leq(b, a)):
                        raise HeapError(
                            f"elements {_fmt(a)} and {_fmt(b)} are incomparable; cannot fold"
                        )
    reps = sorted({min(p, mu[p]) for p in range(n)})
    orbit = {p: reps.index(min(p, mu[p])) for p in range(n)}
    m = len(reps)
    rows = [[2 if i == j else 0 for j in range(m)] for i in range(m)]
    for p in range(n):
        for q in range(n):
            if orbit[p] == orbit[q] or not d.adjacent(p, q):
                continue
            i, j = orbit[p], orbit[q]
            double = mu[p] != p and d.adjacent(q, mu[p])
            rows[i][j] = min(rows[i][j], -2 if double else -1)
    fd = DynkinDiagram(CartanMatrix(tuple(map(tuple, rows))))
    levels = []
    for r in reps:
        merged = sorted(set(h.levels[r]) | set(h.levels[mu[r]]))
        if len(merged) != len(h.levels[r]) + (len(h.levels[mu[r]]) if mu[r] != r else 0):
            raise HeapError(f"chains {r} and {mu[r]} collide")
        levels.append(tuple(merged))
    return PeriodicHeap(fd, levels, h.level_period)


def delete_element(h: PeriodicHeap, p: int, r: int) -> PeriodicHeap:
    """Remove ``E(p, r + k t_p)`` for every ``k``; the result is usually not a heap."""
    rows = [list(x) for x in h.levels]
    del rows[p][r]
    return _UncheckedHeap(h.diagram, rows, h.level_period)


class _UncheckedHeap(PeriodicHeap):
    """A level presentation that skips constructor checks (for damaged heaps)."""

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(tuple(r) for r in self.levels))


def heap_from_word(diagram: DynkinDiagram, word: Sequence[int], periodic: bool = True):
    """Heap of a word: periodic (the word is one period) or finite."""
    if periodic:
        rows = [[] for _ in range(diagram.n)]
        for pos, p in enumerate(word):
            rows[p].append(pos)
        return PeriodicHeap(diagram, rows, len(word))
    count = [0] * diagram.n
    els = []
    for p in word:
        els.append(HeapElement(p, count[p]))
        count[p] += 1
    below = []
    for j, b in enumerate(els):
        s = set()
        for i in range(j):
            a = els[i]
            if a[0] == b[0] or diagram.adjacent(a[0], b[0]):
                s.add(i)
                s |= below[i]
        below.append(s)
    covers = []
    for j in range(len(els)):
        for i in below[j]:
            if not any(i in below[k] for k in below[j]):
                covers.append((els[i], els[j]))
    return FiniteHeap(diagram, tuple(els), tuple(sorted(covers)))


def random_element(h: PeriodicHeap, rng: random.Random) -> HeapElement:
    return rng.choice(h.base_elements())

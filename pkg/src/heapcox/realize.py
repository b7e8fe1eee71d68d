"""Concrete realizations of the Weyl group actions.

* ``zeta``: order isomorphisms from the ideals of the chain-like heaps to the
  integers, giving affine permutations of ``Z``.
* sign strings: binary-path encodings of height-zero ideals for the spin and
  layered heaps, with the induced actions on strings.
* the 27 lines: orbit labels, generator permutations and intersection numbers
  for the heap over E6^(1).
* edge-labelled Hasse graphs of finite heaps, exported as DOT.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .cartan import RootVector, classify_root, null_root
from .heap import FiniteHeap, PeriodicHeap
from . import lattice as lat
from .lattice import Frontier, GradedIdeal

__all__ = [
    "RealizationError",
    "zeta",
    "zeta_inv",
    "perm_table",
    "SignString",
    "string_encode",
    "string_decode",
    "string_act",
    "all_strings",
    "LINE_LABELS",
    "E6_TABLE",
    "E6_PERMS",
    "e6_orbit_table",
    "e6_generator_perms",
    "incidence",
    "incidence_matrix",
    "pin_e6",
    "LabelledGraph",
    "hasse_graph",
    "emit_dot",
]


class RealizationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# zeta maps for the chain-like heaps

ZETA_KINDS = ("A", "C", "A2", "D")


def _rank(h: PeriodicHeap, kind: str) -> int:
    return h.n - 1


def _zeta_principal(kind: str, l: int, p: int, y: int) -> int:
    if kind == "A":
        return (l + 1) * y + p + 1
    if kind == "C":
        if p == 0:
            return 2 * l * y + 1
        if p == l:
            return 2 * l * y + l + 1
    if kind == "A2":
        if p == 0:
            return 2 * l * (y + 1)
        if p == 1:
            return 2 * l * y + 1
        if p == l:
            return 2 * l * y + l + 1
    if kind == "D":
        if p == 0:
            return 2 * l * (y + 1)
        if p == 1:
            return 2 * l * y + p
        if p in (l - 1, l):
            return 2 * l * y + p + 1
    if kind not in ZETA_KINDS:
        raise RealizationError(f"no zeta map for heap kind {kind!r}")
    # middle vertices of the zigzag
    if y % 2 == 0:
        return l * y + p + 1
    return l * (y + 1) - p + 1


def zeta(h: PeriodicHeap, kind: str, F) -> int:
    """Position of the ideal ``F`` in the refined total order of ideals."""
    if kind not in ZETA_KINDS:
        raise RealizationError(f"no zeta map for heap kind {kind!r}")
    l = _rank(h, kind)
    gens = lat.generators(h, F)
    if len(gens) == 1:
        (p, y), = gens
        return _zeta_principal(kind, l, p, y)
    labels = sorted(g[0] for g in gens)
    by = {g[0]: g[1] for g in gens}
    if kind in ("A2", "D") and labels == [0, 1] and by[1] == by[0] + 1:
        return 2 * l * by[1] + 2
    if kind == "D" and labels == [l - 1, l] and by[l - 1] == by[l]:
        return 2 * l * by[l] + l + 2
    raise RealizationError(f"ideal {lat.format_ideal(h, F)} is outside the refined order")


def zeta_inv(h: PeriodicHeap, kind: str, z: int) -> Frontier:
    if kind not in ZETA_KINDS:
        raise RealizationError(f"no zeta map for heap kind {kind!r}")
    l = _rank(h, kind)
    span = 2 * l if kind != "A" else l + 1
    # middle chains advance twice per period, so scan both scales
    ys = (z // span, z // max(l, 1))
    for y in range(min(ys) - 2, max(ys) + 3):
        for p in range(h.n):
            if _zeta_principal(kind, l, p, y) == z:
                return lat.principal(h, p, y)
        if kind in ("A2", "D") and 2 * l * y + 2 == z:
            return lat.generated(h, [(0, y - 1), (1, y)])
        if kind == "D" and 2 * l * y + l + 2 == z:
            return lat.generated(h, [(l - 1, y), (l, y)])
    raise RealizationError(f"no ideal at position {z}")


def perm_table(h: PeriodicHeap, kind: str, i: int, zlo: int, zhi: int) -> list[tuple[int, int]]:
    """Rows ``(z, s_i(z))`` for ``zlo <= z <= zhi``."""
    rows = []
    for z in range(zlo, zhi + 1):
        F = zeta_inv(h, kind, z)
        rows.append((z, zeta(h, kind, lat.apply_reflection(h, F, i))))
    return rows


# ---------------------------------------------------------------------------
# binary paths and sign strings

STRING_KINDS = ("B-spin", "D-spin", "A-string", "C-string")


@dataclass(frozen=True)
class SignString:
    symbols: str
    variant: str

    def __post_init__(self):
        if set(self.symbols) - {"+", "-"}:
            raise RealizationError(f"bad symbols {self.symbols!r}")
        if self.variant == "D" and self.symbols.count("-") % 2:
            raise RealizationError("D strings need an even number of - signs")
        if self.variant == "A" and self.symbols.count("+") != self.symbols.count("-"):
            raise RealizationError("A strings must be balanced")

    def __str__(self):
        return self.symbols


_VARIANT = {"B-spin": "B", "D-spin": "D", "A-string": "A", "C-string": "C"}


def _string_length(h: PeriodicHeap, kind: str) -> int:
    n = h.n
    return {"B-spin": n - 1, "D-spin": n - 1, "A-string": n, "C-string": n - 1}[kind]


def binary_path(h: PeriodicHeap, kind: str, F) -> list[int]:
    """Path values read off the top of each column of ``F``.

    Spin heaps give ``f(-1), f(0), ..., f(columns - 1)``; layered heaps give
    ``f(0), ..., f(n - 1)``.
    """
    top = lambda p: h.level(p, F[p]) + 1
    if kind == "B-spin":
        l = h.n - 1
        return [0, max(top(0), top(1))] + [top(x + 1) for x in range(1, l)]
    if kind == "D-spin":
        l = h.n - 1
        cols = [max(top(0), top(1))] + [top(x + 1) for x in range(1, l - 2)]
        cols.append(max(top(l - 1), top(l)))
        return [0] + cols
    if kind in ("A-string", "C-string"):
        return [top(p) for p in range(h.n)]
    raise RealizationError(f"no string encoding for heap kind {kind!r}")


def _sign(a: int) -> str:
    return "+" if a > 0 else "-"


def string_encode(h: PeriodicHeap, kind: str, F) -> SignString:
    """Sign string of a height-zero ideal."""
    if lat.height(h, F) != 0:
        raise RealizationError("string_encode expects an ideal of height 0")
    f = binary_path(h, kind, F)
    if kind in ("B-spin", "D-spin"):
        s = "".join(_sign(b - a) for a, b in zip(f, f[1:]))
        if kind == "D-spin":
            l = h.n - 1
            s += "+" if (f[-1] - (l - 1)) % 4 == 0 else "-"
        return SignString(s, _VARIANT[kind])
    if kind == "A-string":
        m = len(f)
        return SignString("".join(_sign(f[(j + 1) % m] - f[j]) for j in range(m)), "A")
    return SignString("".join(_sign(b - a) for a, b in zip(f, f[1:])), "C")


def string_decode(h: PeriodicHeap, kind: str, s) -> Frontier:
    text = s.symbols if isinstance(s, SignString) else str(s)
    SignString(text, _VARIANT[kind])
    if len(text) != _string_length(h, kind):
        raise RealizationError(f"expected {_string_length(h, kind)} symbols, got {len(text)}")
    table = _string_table(h, kind)
    if text not in table:
        raise RealizationError(f"string {text!r} encodes no ideal")
    return table[text]


_TABLES: dict = {}


def _string_table(h: PeriodicHeap, kind: str) -> dict:
    key = (h, kind)
    if key not in _TABLES:
        _TABLES[key] = {string_encode(h, kind, F).symbols: F for F in lat.enumerate_height(h, 0)}
    return _TABLES[key]


def all_strings(kind: str, length: int) -> list[str]:
    """Every string of the variant's shape (the candidate set for transitivity)."""
    out = []
    for t in product("+-", repeat=length):
        s = "".join(t)
        if kind == "D-spin" and s.count("-") % 2:
            continue
        if kind == "A-string" and s.count("+") != s.count("-"):
            continue
        out.append(s)
    return out


def _swap(s: str, i: int, j: int) -> str:
    c = list(s)
    c[i], c[j] = c[j], c[i]
    return "".join(c)


def _flip(s: str, i: int) -> str:
    c = list(s)
    c[i] = "+" if c[i] == "-" else "-"
    return "".join(c)


def string_act(kind: str, i: int, g: tuple[int, str]) -> tuple[int, str]:
    """Combinatorial rules for the generators acting on ``(height, string)``."""
    t, s = g
    s = str(s)
    m = len(s)
    if kind == "B-spin":
        l = m
        if not 0 <= i <= l:
            raise RealizationError(f"generator {i} out of range")
        if i == 0:
            if s[:2] == "++":
                return t + 1, "--" + s[2:]
            if s[:2] == "--":
                return t - 1, "++" + s[2:]
            return t, s
        if i < l:
            return t, _swap(s, i - 1, i)
        return t, _flip(s, l - 1)
    if kind == "D-spin":
        l = m
        if not 0 <= i <= l:
            raise RealizationError(f"generator {i} out of range")
        if i == 0:
            return string_act("B-spin", 0, g)
        if i < l:
            return t, _swap(s, i - 1, i)
        return t, _flip(_flip(_swap(s, l - 2, l - 1), l - 2), l - 1)
    if kind == "A-string":
        if not 0 <= i < m:
            raise RealizationError(f"generator {i} out of range")
        if i == 0:
            head, tail = s[0], s[-1]
            if head == "+" and tail == "-":
                return t + 1, "-" + s[1:-1] + "+"
            if head == "-" and tail == "+":
                return t - 1, "+" + s[1:-1] + "-"
            return t, s
        return t, _swap(s, i - 1, i)
    if kind == "C-string":
        l = m
        if not 0 <= i <= l:
            raise RealizationError(f"generator {i} out of range")
        if i == 0:
            return (t + 1, "-" + s[1:]) if s[0] == "+" else (t - 1, "+" + s[1:])
        if i < l:
            return t, _swap(s, i - 1, i)
        return t, _flip(s, l - 1)
    raise RealizationError(f"no string action for heap kind {kind!r}")


# ---------------------------------------------------------------------------
# the 27 lines

LINE_LABELS = (
    [f"a{i}" for i in range(1, 7)]
    + [f"b{i}" for i in range(1, 7)]
    + [f"c{i}{j}" for i in range(1, 7) for j in range(i + 1, 7)]
)

E6_TABLE = {
    "a1": "1(0)", "a2": "2(1)", "a3": "3(2)",
    "a4": "4(1),6(0)", "a5": "6(0),5(0)", "a6": "6(0)",
    "b1": "1(1),0(0)", "b2": "2(1),0(0)", "b3": "3(2),0(0)",
    "b4": "4(1),0(0)", "b5": "5(0),0(0)", "b6": "0(0)",
    "c12": "6(1)", "c13": "2(1),6(1)", "c14": "3(0)",
    "c15": "4(0)", "c16": "5(0)", "c23": "6(1),1(1)",
    "c24": "1(0),3(0)", "c25": "4(0),1(0)", "c26": "5(0),1(0)",
    "c34": "2(0)", "c35": "4(0),2(0)", "c36": "5(0),2(0)",
    "c45": "3(1)", "c46": "3(1),5(0)", "c56": "4(1)",
}

# Generator -> products of six transpositions on the line labels.
E6_PERMS = {
    1: "(a1 a2)(b1 b2)(c13 c23)(c14 c24)(c15 c25)(c16 c26)",
    2: "(c12 c13)(a2 a3)(b2 b3)(c24 c34)(c25 c35)(c26 c36)",
    3: "(c13 c14)(c23 c24)(a3 a4)(b3 b4)(c35 c45)(c36 c46)",
    4: "(c14 c15)(c24 c25)(c34 c35)(a4 a5)(b4 b5)(c46 c56)",
    5: "(c15 c16)(c25 c26)(c35 c36)(c45 c46)(a5 a6)(b5 b6)",
    6: "(c23 b1)(c13 b2)(c12 b3)(a4 c56)(a5 c46)(a6 c45)",
    0: "(a1 b1)(a2 b2)(a3 b3)(a4 b4)(a5 b5)(a6 b6)",
}

E6_GENERATOR_ORDER = (1, 2, 3, 4, 5, 6, 0)


def parse_cycles(text: str) -> dict[str, str]:
    """Permutation (as a full map on line labels) from cycle notation."""
    perm = {x: x for x in LINE_LABELS}
    for cyc in text.replace(")", "").split("("):
        items = cyc.split()
        for a, b in zip(items, items[1:] + items[:1]):
            perm[a] = b
    return perm


def format_cycles(perm: dict[str, str]) -> str:
    seen = set()
    parts = []
    for x in LINE_LABELS:
        if x in seen or perm[x] == x:
            continue
        cyc = [x]
        seen.add(x)
        y = perm[x]
        while y != x:
            cyc.append(y)
            seen.add(y)
            y = perm[y]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts)


def e6_orbit_table(h: PeriodicHeap) -> dict[str, Frontier]:
    """Line label -> height-zero representative of its orbit."""
    table = {}
    for label in LINE_LABELS:
        F = lat.parse_ideal(h, E6_TABLE[label])
        table[label] = lat.orbit_decompose(h, F).rep
    reps = set(table.values())
    if len(reps) != 27 or reps != set(lat.enumerate_height(h, 0)):
        raise RealizationError("the orbit table does not match this heap")
    return table


def e6_generator_perms(h: PeriodicHeap) -> dict[int, dict[str, str]]:
    table = e6_orbit_table(h)
    back = {F: x for x, F in table.items()}
    perms = {}
    for i in E6_GENERATOR_ORDER:
        perms[i] = {
            x: back[lat.orbit_decompose(h, lat.apply_reflection(h, F, i)).rep]
            for x, F in table.items()
        }
    return perms


def incidence(h: PeriodicHeap, x: str, y: str, table: dict | None = None) -> int:
    table = table or e6_orbit_table(h)
    chi = lat.character(h, table[x], table[y])
    delta = null_root(h.diagram)
    if any(chi[i] * delta[0] != chi[0] * delta[i] for i in range(len(chi))):
        return 0 if classify_root(h.diagram, chi).is_real else 1
    return -1


def incidence_matrix(h: PeriodicHeap) -> list[list[int]]:
    table = e6_orbit_table(h)
    return [[incidence(h, x, y, table) for y in LINE_LABELS] for x in LINE_LABELS]


def _orbit_action(h: PeriodicHeap):
    reps = lat.enumerate_height(h, 0)
    idx = {F: k for k, F in enumerate(reps)}
    act = {
        i: [idx[lat.orbit_decompose(h, lat.apply_reflection(h, F, i)).rep] for F in reps]
        for i in range(h.n)
    }
    return reps, act


def _match_labels(h: PeriodicHeap):
    """Bijections labels -> height-zero ideals intertwining the reference permutations."""
    want = {i: parse_cycles(c) for i, c in E6_PERMS.items()}
    reps, act = _orbit_action(h)
    if len(reps) != 27:
        return []
    out = []
    for start in range(27):
        m = {"a1": start}
        inv = {start: "a1"}
        todo = ["a1"]
        ok = True
        while todo and ok:
            x = todo.pop()
            for i in E6_GENERATOR_ORDER:
                y, k = want[i][x], act[i][m[x]]
                if y in m:
                    ok = m[y] == k
                elif k in inv:
                    ok = False
                else:
                    m[y], inv[k] = k, y
                    todo.append(y)
                if not ok:
                    break
        if ok and len(m) == 27:
            out.append({x: reps[k] for x, k in m.items()})
    return out


def pin_e6(candidates: Sequence[PeriodicHeap], radius: int = 2) -> PeriodicHeap | None:
    """Choose the heap and base points so that the orbit table and the
    generator permutations read exactly as in ``E6_TABLE`` and ``E6_PERMS``."""
    principal_of: dict[int, list[tuple[str, int]]] = {}
    for label, lit in E6_TABLE.items():
        if "," not in lit:
            p, z = lit.rstrip(")").split("(")
            principal_of.setdefault(int(p), []).append((label, int(z)))
    for h in candidates:
        for labels in _match_labels(h):
            options = [[0]]
            for p in range(1, h.n):
                t = h.periods[p]
                opts = [
                    s for s in range(-radius * t, radius * t + 1)
                    if all(
                        lat.orbit_decompose(h, lat.principal(h, p, z + s)).rep == labels[x]
                        for x, z in principal_of.get(p, [])
                    )
                ]
                options.append(opts)
            for shifts in product(*options):
                g = h.reindexed(shifts)
                try:
                    table = e6_orbit_table(g)
                except (RealizationError, lat.LatticeError):
                    continue
                if e6_generator_perms(g) == {i: parse_cycles(c) for i, c in E6_PERMS.items()}:
                    return g
    return None


# ---------------------------------------------------------------------------
# edge-labelled Hasse graphs


@dataclass(frozen=True)
class LabelledGraph:
    nodes: tuple[frozenset, ...]
    edges: tuple[tuple[int, int, int], ...]

    def action(self, i: int) -> list[int]:
        """Generator ``i`` as a permutation of node indices."""
        perm = list(range(len(self.nodes)))
        for a, b, lab in self.edges:
            if lab == i:
                perm[a], perm[b] = b, a
        return perm


def hasse_graph(fh: FiniteHeap) -> LabelledGraph:
    ideals = fh.ideals()
    idx = {I: k for k, I in enumerate(ideals)}
    edges = []
    for I in ideals:
        for e in fh.elements:
            if e in I:
                continue
            J = I | {e}
            if J in idx:
                edges.append((idx[I], idx[J], e[0]))
    edges.sort()
    return LabelledGraph(tuple(ideals), tuple(edges))


def emit_dot(g: LabelledGraph, name: str = "lattice") -> str:
    lines = [f"digraph {name} {{"]
    for k, I in enumerate(g.nodes):
        members = " ".join(f"{p}({z})" for p, z in sorted(I)) or "empty"
        lines.append(f'  n{k} [label="{members}"];')
    for a, b, lab in g.edges:
        lines.append(f'  n{a} -> n{b} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

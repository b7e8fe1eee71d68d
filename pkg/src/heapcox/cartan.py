"""Generalized Cartan matrices, Dynkin diagrams and the root lattice.

Vertex 0 is always the distinguished affine vertex.  All arithmetic is exact
integer arithmetic; rational steps (null-space computation) use ``Fraction``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "CartanError",
    "CartanMatrix",
    "DynkinDiagram",
    "RootVector",
    "RootClass",
    "CATALOG_TAGS",
    "build_diagram",
    "parse_diagram",
    "pairing",
    "reflect_root",
    "null_root",
    "classify_root",
    "act_word_on_root",
    "coxeter_exponent",
]

ALLOWED_ENTRIES = frozenset({2, 0, -1, -2})


class CartanError(ValueError):
    """Invalid matrix, catalog tag, rank or root dimension."""


class RootClass(enum.Enum):
    REAL_POSITIVE = "RealPositive"
    REAL_NEGATIVE = "RealNegative"
    IMAGINARY_POSITIVE = "ImaginaryPositive"
    IMAGINARY_NEGATIVE = "ImaginaryNegative"
    ZERO = "Zero"
    NOT_A_ROOT = "NotARoot"

    @property
    def is_real(self) -> bool:
        return self in (RootClass.REAL_POSITIVE, RootClass.REAL_NEGATIVE)

    @property
    def is_imaginary(self) -> bool:
        return self in (RootClass.IMAGINARY_POSITIVE, RootClass.IMAGINARY_NEGATIVE)


class RootVector(tuple):
    """Integer coefficients over the simple roots."""

    def __new__(cls, coeffs: Iterable[int] = ()):
        coeffs = tuple(coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"root coefficients must be int, got {c!r}")
        return super().__new__(cls, coeffs)

    @classmethod
    def simple(cls, n: int, i: int) -> "RootVector":
        return cls(1 if j == i else 0 for j in range(n))

    @classmethod
    def zero(cls, n: int) -> "RootVector":
        return cls([0] * n)

    def __add__(self, other):
        _check_dims(self, other)
        return RootVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _check_dims(self, other)
        return RootVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return RootVector(-a for a in self)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return RootVector(k * a for a in self)

    __rmul__ = __mul__

    def is_nonneg(self) -> bool:
        return all(a >= 0 for a in self)

    def is_nonpos(self) -> bool:
        return all(a <= 0 for a in self)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self)

    def height(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"RootVector({list(self)})"


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise CartanError(f"dimension mismatch: {len(a)} vs {len(b)}")


@dataclass(frozen=True)
class CartanMatrix:
    """A doubly laced generalized Cartan matrix.

    ``exceptional`` admits the two non-doubly-laced diagrams used only for the
    lattice-of-ideals constructions (G2 affine graph and H3 graph).
    """

    entries: tuple[tuple[int, ...], ...]
    exceptional: bool = False

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise CartanError("empty matrix")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise CartanError("matrix is not square")
            if row[i] != 2:
                raise CartanError(f"diagonal entry a[{i}][{i}] = {row[i]} != 2")
            for j, a in enumerate(row):
                if i == j:
                    continue
                if a > 0:
                    raise CartanError(f"positive off-diagonal entry a[{i}][{j}] = {a}")
                if (a == 0) != (rows[j][i] == 0):
                    raise CartanError(f"zero pattern not symmetric at ({i}, {j})")
                if not self.exceptional and a not in ALLOWED_ENTRIES:
                    raise CartanError(f"entry a[{i}][{j}] = {a} is not doubly laced")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_simply_laced(self) -> bool:
        return all(a in (0, -1, 2) for row in self.entries for a in row)


@dataclass(frozen=True)
class DynkinDiagram:
    """The Dynkin diagram of a Cartan matrix, with an optional catalog tag."""

    matrix: CartanMatrix
    type_tag: str | None = None
    rank: int | None = None
    # Coxeter exponents overriding the matrix (H3 has m(1,2) = 5).
    coxeter_overrides: tuple[tuple[int, int, int], ...] = ()

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def lattice_only(self) -> bool:
        return self.matrix.exceptional

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        A = self.matrix
        return tuple(
            tuple(j for j in range(self.n) if j != i and A[i, j] != 0) for i in range(self.n)
        )

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.matrix[i, j] != 0

    @cached_property
    def edges(self) -> tuple[tuple[int, int, int, tuple[int, ...]], ...]:
        """Edges ``(i, j, lines, arrow_heads)`` with ``i < j``.

        ``lines`` is ``max(|a_ij|, |a_ji|)``; ``arrow_heads`` lists the
        endpoints the arrows point at (vertex ``i`` receives an arrow when
        ``|a_ij| > 1``).
        """
        A = self.matrix
        out = []
        for i, j in combinations(range(self.n), 2):
            if A[i, j] == 0:
                continue
            lines = max(abs(A[i, j]), abs(A[j, i]))
            heads = tuple(v for v, w in ((i, j), (j, i)) if abs(A[v, w]) > 1 and abs(A[v, w]) >= abs(A[w, v]))
            out.append((i, j, lines, heads))
        return tuple(out)

    @classmethod
    def from_edges(cls, n: int, edges, type_tag=None, rank=None) -> "DynkinDiagram":
        """Inverse of :attr:`edges` for doubly laced diagrams."""
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j, lines, heads in edges:
            if lines == 1:
                rows[i][j] = rows[j][i] = -1
            elif lines == 2:
                rows[i][j] = -2 if i in heads else -1
                rows[j][i] = -2 if j in heads else -1
            else:
                raise CartanError(f"unsupported edge multiplicity {lines}")
        return cls(CartanMatrix(tuple(map(tuple, rows))), type_tag, rank)

    def coxeter_m(self, i: int, j: int) -> int | None:
        """Order of ``s_i s_j``; ``None`` for infinite order."""
        for a, b, m in self.coxeter_overrides:
            if {a, b} == {i, j}:
                return m
        if i == j:
            return 1
        return coxeter_exponent(self.matrix[i, j] * self.matrix[j, i])

    def to_text(self) -> str:
        if self.type_tag is not None:
            return f"catalog {self.type_tag} {self.rank}"
        lines = [f"diagram {self.n}"]
        lines += [" ".join(str(a) for a in row) for row in self.matrix.entries]
        return "\n".join(lines)


def coxeter_exponent(product: int) -> int | None:
    return {0: 2, 1: 3, 2: 4, 3: 6}.get(product)


# ---------------------------------------------------------------------------
# catalog

CATALOG_TAGS = {
    "A": "A_l^(1)",
    "B": "B_l^(1)",
    "C": "C_l^(1)",
    "D": "D_l^(1)",
    "A2": "A_{2l-1}^(2)",
    "D2": "D_{l+1}^(2)",
    "E6": "E6^(1)",
    "E7": "E7^(1)",
    "G2": "G2^(1)-graph",
    "H3": "H3-graph",
}

_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4, "A2": 3, "D2": 2}
_FIXED_RANK = {"E6": 6, "E7": 7, "G2": 2, "H3": 3}


def _path(n: int) -> list[list[int]]:
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = rows[i + 1][i] = -1
    return rows


def _link(rows, i, j, a_ij=-1, a_ji=-1):
    rows[i][j] = a_ij
    rows[j][i] = a_ji


def _catalog_rows(tag: str, l: int) -> list[list[int]]:
    if tag == "A":
        if l == 1:
            return [[2, -2], [-2, 2]]
        rows = _path(l + 1)
        _link(rows, 0, l)
        return rows
    if tag == "C":
        rows = _path(l + 1)
        _link(rows, 0, 1, -1, -2)
        _link(rows, l - 1, l, -2, -1)
        return rows
    if tag == "D2":
        rows = _path(l + 1)
        _link(rows, 0, 1, -2, -1)
        _link(rows, l - 1, l, -1, -2)
        return rows
    if tag in ("B", "A2", "D"):
        # 0 and 1 both hang off vertex 2; the chain 2 .. l follows.
        rows = [[2 if i == j else 0 for j in range(l + 1)] for i in range(l + 1)]
        _link(rows, 0, 2)
        _link(rows, 1, 2)
        last = l - 1 if tag == "D" else l
        for i in range(2, last):
            _link(rows, i, i + 1)
        if tag == "B":
            _link(rows, l - 1, l, -1, -2)
        elif tag == "A2":
            _link(rows, l - 1, l, -2, -1)
        else:
            _link(rows, l - 2, l)
        return rows
    if tag == "E6":
        rows = [[2 if i == j else 0 for j in range(7)] for i in range(7)]
        for i, j in [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 0)]:
            _link(rows, i, j)
        return rows
    if tag == "E7":
        rows = _path(7)
        rows = [r + [0] for r in rows] + [[0] * 7 + [2]]
        _link(rows, 3, 7)
        return rows
    if tag == "G2":
        rows = _path(3)
        _link(rows, 1, 2, -1, -3)
        return rows
    if tag == "H3":
        return _path(3)
    raise CartanError(f"unknown catalog tag {tag!r}")


def catalog_diagram(tag: str, rank: int | None = None) -> DynkinDiagram:
    if tag in _FIXED_RANK:
        if rank is not None and rank != _FIXED_RANK[tag]:
            raise CartanError(f"{tag} has fixed rank {_FIXED_RANK[tag]}, got {rank}")
        rank = _FIXED_RANK[tag]
    elif tag in _MIN_RANK:
        if rank is None or rank < _MIN_RANK[tag]:
            raise CartanError(f"rank {rank} out of range for {CATALOG_TAGS[tag]}")
    else:
        raise CartanError(f"unknown catalog tag {tag!r}")
    rows = _catalog_rows(tag, rank)
    exceptional = tag in ("G2", "H3")
    overrides = ((1, 2, 5),) if tag == "H3" else ()
    return DynkinDiagram(CartanMatrix(tuple(map(tuple, rows)), exceptional), tag, rank, overrides)


def build_diagram(source) -> tuple[DynkinDiagram, CartanMatrix]:
    """Build a diagram from a matrix (nested sequences) or ``(tag, rank)``."""
    if isinstance(source, str):
        d = catalog_diagram(source)
    elif isinstance(source, tuple) and len(source) == 2 and isinstance(source[0], str):
        d = catalog_diagram(*source)
    else:
        d = DynkinDiagram(CartanMatrix(tuple(tuple(r) for r in source)))
    return d, d.matrix


def parse_diagram(text: str) -> DynkinDiagram:
    """Parse the line-oriented diagram format (``diagram n`` or ``catalog``)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CartanError("empty diagram text")
    head = lines[0].split()
    if head[0] == "catalog":
        rank = int(head[2]) if len(head) > 2 else None
        return catalog_diagram(head[1], rank)
    if head[0] != "diagram" or len(head) != 2:
        raise CartanError(f"bad diagram header {lines[0]!r}")
    n = int(head[1])
    rows = [tuple(int(x) for x in ln.split()) for ln in lines[1 : n + 1]]
    if len(rows) != n:
        raise CartanError(f"expected {n} matrix rows, got {len(rows)}")
    return DynkinDiagram(CartanMatrix(tuple(rows)))


# ---------------------------------------------------------------------------
# root lattice


def _as_matrix(m) -> CartanMatrix:
    return m.matrix if isinstance(m, DynkinDiagram) else m


def pairing(m, alpha: Sequence[int], i: int) -> int:
    """The pairing of ``alpha`` with the simple coroot ``i``."""
    A = _as_matrix(m)
    if len(alpha) != A.n:
        raise CartanError(f"dimension mismatch: root has {len(alpha)} entries, matrix {A.n}")
    if not 0 <= i < A.n:
        raise CartanError(f"vertex {i} out of range")
    row = A.entries[i]
    return sum(c * a for c, a in zip(alpha, row))


def reflect_root(m, alpha: Sequence[int], i: int) -> RootVector:
    c = pairing(m, alpha, i)
    out = list(alpha)
    out[i] -= c
    return RootVector(out)


def act_word_on_root(m, word: Iterable[int], alpha: Sequence[int]) -> RootVector:
    """Apply the reflections of ``word`` in order, first letter first."""
    v = RootVector(alpha)
    for i in word:
        v = reflect_root(m, v, i)
    return v


def _det(rows: list[list[int]]) -> int:
    # Bareiss fraction-free elimination.
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _principal_minors_positive(A: CartanMatrix, size_limit: int) -> bool:
    n = A.n
    for k in range(1, size_limit + 1):
        for idx in combinations(range(n), k):
            if _det([[A[i, j] for j in idx] for i in idx]) <= 0:
                return False
    return True


def matrix_type(m) -> str:
    """``finite``, ``affine`` or ``indefinite`` (indecomposable matrices)."""
    A = _as_matrix(m)
    if _principal_minors_positive(A, A.n):
        return "finite"
    if _principal_minors_positive(A, A.n - 1) and _det([list(r) for r in A.entries]) == 0:
        return "affine"
    return "indefinite"


def _kernel(A: CartanMatrix) -> list[list[Fraction]]:
    n = A.n
    M = [[Fraction(x) for x in row] for row in A.entries]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [x / piv for x in M[r]]
        for i in range(n):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -M[row][fcol]
        basis.append(v)
    return basis


def null_root(d) -> RootVector:
    """The primitive positive integer vector spanning the kernel of ``A``."""
    A = _as_matrix(d)
    basis = _kernel(A)
    if len(basis) != 1:
        raise CartanError(f"matrix is not affine: kernel has dimension {len(basis)}")
    v = basis[0]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints))
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        raise CartanError("matrix is not affine: kernel generator is not positive")
    return RootVector(ints)


def classify_root(d, alpha: Sequence[int]) -> RootClass:
    """Classify ``alpha`` as a real or imaginary root, zero, or a non-root."""
    A = _as_matrix(d)
    if A.exceptional:
        raise CartanError("root classification is disabled for the exceptional lattice-only diagrams")
    kind = matrix_type(A)
    if kind == "indefinite":
        raise CartanError("indefinite-type diagrams are not supported")
    alpha = RootVector(alpha)
    if len(alpha) != A.n:
        raise CartanError(f"dimension mismatch: root has {len(alpha)} entries, matrix {A.n}")
    if alpha.is_zero():
        return RootClass.ZERO
    if kind == "affine":
        delta = null_root(A)
        k = alpha[0] // delta[0] if alpha[0] % delta[0] == 0 else None
        if k is not None and k != 0 and alpha == delta * k:
            return RootClass.IMAGINARY_POSITIVE if k > 0 else RootClass.IMAGINARY_NEGATIVE
    if alpha.is_nonneg():
        return RootClass.REAL_POSITIVE if _reduces_to_simple(A, alpha) else RootClass.NOT_A_ROOT
    if alpha.is_nonpos():
        return RootClass.REAL_NEGATIVE if _reduces_to_simple(A, -alpha) else RootClass.NOT_A_ROOT
    return RootClass.NOT_A_ROOT


def _reduces_to_simple(A: CartanMatrix, alpha: RootVector) -> bool:
    fuse = 10 * (1 + sum(abs(c) for c in alpha))
    for _ in range(fuse):
        if not alpha.is_nonneg():
            return False
        if sum(alpha) == 1:
            return True
        for i in range(A.n):
            if pairing(A, alpha, i) > 0:
                alpha = reflect_root(A, alpha, i)
                break
        else:
            return False
    raise RuntimeError(f"height reduction did not terminate for {alpha!r}")

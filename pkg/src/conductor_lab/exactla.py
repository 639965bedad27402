"""Exact linear algebra over the rationals.

Rationals are :class:`fractions.Fraction`.  Dense matrices are small, so
:class:`RatMatrix` is an immutable tuple-of-tuples wrapper; elimination is
fraction-free (Bareiss) on integer-scaled rows.

:class:`EchelonBasis` is the sparse, incremental counterpart used when a
span is grown one vector at a time (subalgebra closures, module spans).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Rational = Fraction
SparseVector = Dict[int, Fraction]


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: every value in this package is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"num/den"`` (always with a denominator)."""
    q = to_rational(q)
    return f"{q.numerator}/{q.denominator}"


class RatMatrix:
    """Dense immutable matrix of Fractions."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Iterable[Sequence] = (), cols: Optional[int] = None):
        data = tuple(tuple(to_rational(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged matrix")
            if cols is not None and cols != width:
                raise ValueError("column count does not match entries")
        else:
            width = cols or 0
        self.rows = len(data)
        self.cols = width
        self._entries = data

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @property
    def entries(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._entries

    def __getitem__(self, ij):
        i, j = ij
        return self._entries[i][j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self._entries[i]

    def apply(self, v: Sequence) -> List[Fraction]:
        """Matrix-vector product ``M @ v``."""
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        vec = [to_rational(x) for x in v]
        return [sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in self._entries]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols})"


def _integer_rows(entries) -> List[List[int]]:
    out = []
    for row in entries:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def _bareiss_echelon(entries, ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free forward elimination.

    Returns the nonzero echelon rows (integers) and their pivot columns.
    Every division in the inner loop is exact by Sylvester's identity.
    """
    a = _integer_rows(entries)
    nrows = len(a)
    pivots: List[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            lead = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - lead * row_r[j]) // prev
            row_i[c] = 0
        # rows above r keep their entries; rows below are scaled by piv/prev
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _bareiss_echelon(m.entries, m.cols)
    return len(pivots)


def rref(m: RatMatrix) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return [], []
    ech, pivots = _bareiss_echelon(m.entries, m.cols)
    rows = [[Fraction(x) for x in row] for row in ech]
    for k in range(len(rows) - 1, -1, -1):
        c = pivots[k]
        inv = 1 / rows[k][c]
        rows[k] = [x * inv for x in rows[k]]
        for i in range(k):
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return rows, pivots


def kernel_basis(m: RatMatrix) -> List[List[Fraction]]:
    """Basis of the right kernel ``{v : M v = 0}``; empty when trivial."""
    n = m.cols
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def row_space_membership(m: RatMatrix, v: Sequence) -> bool:
    """True iff ``v`` lies in the span of the rows of ``m``."""
    if len(v) != m.cols:
        raise ValueError("vector length does not match column count")
    if all(to_rational(x) == 0 for x in v):
        return True
    if m.rows == 0:
        return False
    return rank(RatMatrix(list(m.entries) + [list(v)])) == rank(m)


class EchelonBasis:
    """Incrementally grown span of sparse vectors, kept fully reduced.

    Vectors are ``{coordinate: Fraction}`` dicts.  Each stored vector has a
    pivot (its smallest coordinate) with coefficient 1, and no stored vector
    has a nonzero entry at another vector's pivot.
    """

    def __init__(self):
        self._rows: Dict[int, SparseVector] = {}

    def __len__(self):
        return len(self._rows)

    def __contains__(self, v) -> bool:
        return not self.reduce(v)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def vectors(self) -> List[SparseVector]:
        """Stored basis, ordered by pivot."""
        return [dict(self._rows[p]) for p in sorted(self._rows)]

    def reduce(self, v: SparseVector) -> SparseVector:
        w = {k: x for k, x in v.items() if x}
        if not self._rows:
            return w
        for p in sorted(k for k in w if k in self._rows):
            coeff = w.get(p)
            if not coeff:
                continue
            for k, x in self._rows[p].items():
                y = w.get(k, 0) - coeff * x
                if y:
                    w[k] = y
                else:
                    w.pop(k, None)
        return w

    def add(self, v: SparseVector) -> bool:
        """Insert ``v``; return True iff it enlarged the span."""
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        inv = 1 / w[p]
        w = {k: x * inv for k, x in w.items()}
        for q, row in self._rows.items():
            f = row.get(p)
            if f:
                for k, x in w.items():
                    y = row.get(k, 0) - f * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self._rows[p] = w
        return True

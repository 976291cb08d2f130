"""Exact rational sparse matrices: rank, kernel, quotient dimensions.

All elimination is fraction-free (Bareiss style): rows are scaled to
integers once, then pivoting uses the exact cross-multiplication update
``(p*a - b*c) // prev`` whose division is exact because intermediate
entries are minors of the scaled matrix.  No floating point anywhere.

Pivoting is deterministic: columns in increasing order, candidate rows
scanned in index order.  Kernel vectors are emitted one per free column,
free columns in increasing order, with the free coordinate set to 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (q > 0); reject anything else, including floats."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Canonical string form: "p" or "p/q" with q > 1, gcd-reduced."""
    return str(Fraction(value))


Vector = Sequence[Fraction]


@dataclass(frozen=True)
class SparseMatrix:
    """Sparse matrix over the rationals; only nonzero entries are stored."""

    rows: int
    cols: int
    entries: dict  # (row, col) -> nonzero Fraction

    def __post_init__(self):
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ValueError(f"entry index ({i}, {j}) out of range")
            if not v:
                raise ValueError(f"stored zero at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "SparseMatrix":
        entries: dict = {}
        n = 0
        width = cols
        for i, row in enumerate(rows):
            n = i + 1
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError(f"row {i} has length {len(row)}, expected {width}")
            for j, v in enumerate(row):
                v = Fraction(v)
                if v:
                    entries[(i, j)] = v
        return cls(n, width if width is not None else 0, entries)

    @classmethod
    def from_row_dicts(cls, rows: Sequence[dict], cols: int) -> "SparseMatrix":
        entries = {}
        for i, row in enumerate(rows):
            for j, v in row.items():
                v = Fraction(v)
                if v:
                    entries[(i, j)] = v
        return cls(len(rows), cols, entries)

    def row_dicts(self) -> list[dict]:
        rows: list[dict] = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def mul_vector(self, vec: Vector) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} does not match {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for (i, j), v in self.entries.items():
            c = vec[j]
            if c:
                out[i] += v * c
        return out


def _integer_rows(m: SparseMatrix) -> list[dict]:
    """Scale each row by the lcm of its denominators (rank/kernel preserved)."""
    rows = []
    for row in m.row_dicts():
        if row:
            scale = lcm(*(v.denominator for v in row.values()))
            rows.append({j: int(v * scale) for j, v in row.items()})
        else:
            rows.append({})
    return rows


def _bareiss_echelon(rows: list[dict], cols: int) -> tuple[list[int], list[dict]]:
    """In-place fraction-free elimination.

    Returns (pivot_cols, rows); rows[0:len(pivot_cols)] form an integer
    echelon basis with pivot columns strictly increasing.  Every active row
    is updated at every step (required for the Bareiss division to stay
    exact), but zero entries never fill in for rows missing the pivot column.
    """
    nrows = len(rows)
    pivot_cols: list[int] = []
    prev = 1
    r = 0
    for col in range(cols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i].get(col):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[col]
        for i in range(r + 1, nrows):
            row = rows[i]
            c = row.pop(col, 0)
            if c:
                updated: dict = {}
                for j in row.keys() | prow.keys():
                    if j == col:
                        continue
                    val = (p * row.get(j, 0) - c * prow.get(j, 0)) // prev
                    if val:
                        updated[j] = val
                rows[i] = updated
            else:
                for j in list(row):
                    row[j] = p * row[j] // prev
        pivot_cols.append(col)
        prev = p
        r += 1
    return pivot_cols, rows


def _echelon(m: SparseMatrix) -> tuple[list[int], list[dict]]:
    return _bareiss_echelon(_integer_rows(m), m.cols)


def rank(m: SparseMatrix) -> int:
    # Deduplicating and dropping zero rows changes neither the row space
    # nor therefore the rank.
    seen = set()
    rows = []
    for row in _integer_rows(m):
        if not row:
            continue
        key = frozenset(row.items())
        if key not in seen:
            seen.add(key)
            rows.append(row)
    pivots, _ = _bareiss_echelon(rows, m.cols)
    return len(pivots)


def rank_and_kernel(m: SparseMatrix) -> tuple[int, list[tuple[Fraction, ...]]]:
    """Rank plus a deterministic basis of the right kernel.

    Every returned vector v satisfies m·v = 0 exactly; vectors are indexed
    by the free columns in increasing order, the free coordinate being 1.
    """
    pivot_cols, rows = _echelon(m)
    r = len(pivot_cols)
    kernel: list[tuple[Fraction, ...]] = []
    free_cols = [j for j in range(m.cols) if j not in set(pivot_cols)]
    for f in free_cols:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for k in range(r - 1, -1, -1):
            pc = pivot_cols[k]
            row = rows[k]
            s = Fraction(0)
            for j, v in row.items():
                if j > pc and x[j]:
                    s += v * x[j]
            if s:
                x[pc] = -s / row[pc]
        kernel.append(tuple(x))
    return r, kernel


def quotient_dim(ambient_dim: int, relations: Sequence[Vector]) -> int:
    """Dimension of the quotient of an ambient space by the span of relations."""
    if ambient_dim < 0:
        raise ValueError("ambient dimension must be nonnegative")
    for i, rel in enumerate(relations):
        if len(rel) != ambient_dim:
            raise ValueError(
                f"relation {i} has length {len(rel)}, expected ambient dimension {ambient_dim}"
            )
    if not relations:
        return ambient_dim
    return ambient_dim - rank(SparseMatrix.from_rows(relations, ambient_dim))


class SpanBuilder:
    """Incrementally maintained reduced echelon basis of a span of vectors.

    Supports rank queries, membership tests, and a canonical (RREF) basis;
    the basis depends only on the span, not on insertion order.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: dict[int, dict] = {}  # pivot col -> row dict with row[pivot] == 1

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vec) -> dict:
        row = {j: Fraction(v) for j, v in (vec.items() if isinstance(vec, dict) else enumerate(vec)) if v}
        for pc in sorted(self._rows):
            c = row.get(pc)
            if c:
                base = self._rows[pc]
                for j, v in base.items():
                    nv = row.get(j, Fraction(0)) - c * v
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        return row

    def add(self, vec) -> bool:
        """Add a vector; True iff it enlarged the span."""
        row = self._reduce(vec)
        if not row:
            return False
        pc = min(row)
        lead = row[pc]
        row = {j: v / lead for j, v in row.items()}
        for other in self._rows.values():
            c = other.get(pc)
            if c:
                for j, v in row.items():
                    nv = other.get(j, Fraction(0)) - c * v
                    if nv:
                        other[j] = nv
                    else:
                        other.pop(j, None)
        self._rows[pc] = row
        return True

    def contains(self, vec) -> bool:
        return not self._reduce(vec)

    def reduce(self, vec) -> dict:
        """Canonical residual of a vector modulo the span (sparse dict).

        The residual vanishes on all pivot columns, so it is supported on
        the complement; it is zero exactly when the vector lies in the span.
        """
        return self._reduce(vec)

    def basis(self) -> list[tuple[Fraction, ...]]:
        """Canonical dense basis, rows sorted by pivot column."""
        out = []
        for pc in sorted(self._rows):
            row = self._rows[pc]
            dense = [Fraction(0)] * self.dim
            for j, v in row.items():
                dense[j] = v
            out.append(tuple(dense))
        return out

    def pivot_columns(self) -> list[int]:
        return sorted(self._rows)

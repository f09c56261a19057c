"""Exact incremental row reduction with sparse integer rows.

The jet-space computations produce long, very sparse vectors indexed by
monomials.  Rows are stored as ``dict column -> int`` after clearing
denominators; elimination uses cross-multiplication and re-normalises by the
gcd, so no Fraction ever appears in the hot loop and no precision is lost.

Columns must be indexed so that "earlier" means smaller: the reducer always
pivots on the smallest column of a row.  A reducer can chain to a parent,
which lets us reduce vectors modulo an existing image while collecting the
residuals into a separate rank count.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

Row = dict[int, int]


def row_from_fractions(entries: Mapping[int, Fraction]) -> Row:
    """Clear denominators and strip zeros; returns a normalised integer row."""
    nonzero = {c: v for c, v in entries.items() if v}
    if not nonzero:
        return {}
    scale = lcm(*(v.denominator for v in nonzero.values()))
    return normalize_row({c: int(v * scale) for c, v in nonzero.items()})


def normalize_row(row: Row) -> Row:
    """Divide by the gcd of the entries and make the leading entry positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if row[min(row)] < 0:
        g = -g
    if g not in (0, 1):
        row = {c: v // g for c, v in row.items()}
    return row


class RowReducer:
    """Row echelon form built one row at a time.

    ``parent`` chains this reducer behind another: reductions consult the
    parent's pivots too, but rows inserted here never modify the parent.
    That is exactly the shape needed to measure the span of a family of
    vectors modulo a fixed subspace.
    """

    def __init__(self, parent: "RowReducer | None" = None):
        self.parent = parent
        self.pivots: dict[int, Row] = {}

    def _pivot_for(self, col: int) -> Row | None:
        node: RowReducer | None = self
        while node is not None:
            row = node.pivots.get(col)
            if row is not None:
                return row
            node = node.parent
        return None

    def reduce(self, row: Row) -> Row:
        """Eliminate leading entries until none hits a stored pivot."""
        row = normalize_row(dict(row))
        while row:
            lead = min(row)
            pivot = self._pivot_for(lead)
            if pivot is None:
                return row
            a, b = pivot[lead], row[lead]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            merged = {c: v * ma for c, v in row.items()}
            for c, v in pivot.items():
                s = merged.get(c, 0) - v * mb
                if s:
                    merged[c] = s
                else:
                    merged.pop(c, None)
            row = normalize_row(merged)
        return row

    def insert(self, row: Row) -> int | None:
        """Reduce and store; returns the pivot column, or None if dependent."""
        residual = self.reduce(row)
        if not residual:
            return None
        lead = min(residual)
        self.pivots[lead] = residual
        return lead

    def insert_all(self, rows: Iterable[Row]) -> None:
        for row in rows:
            self.insert(row)

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_columns(self) -> list[int]:
        return sorted(self.pivots)


def rational_nullspace(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel of a small dense matrix, exact.

    Free variables are set to 1 one at a time, in column order, so the
    returned basis is deterministic.
    """
    if not matrix:
        return []
    nrows = len(matrix)
    ncols = len(matrix[0])
    m = [row[:] for row in matrix]
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [a / inv for a in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_of_col[c] = r
        r += 1
        if r == nrows:
            break
    basis: list[list[Fraction]] = []
    free = [c for c in range(ncols) if c not in pivot_of_col]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for c, row in pivot_of_col.items():
            vec[c] = -m[row][fc]
        basis.append(vec)
    return basis

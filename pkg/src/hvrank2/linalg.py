"""Exact sparse Gauss-Jordan elimination over Q(i).

Rows are dicts ``{column: Scalar}`` with no zero entries. Column indices
double as pivot priority: smaller indices are eliminated first, so callers
control the echelon form by how they number unknowns.
"""

from __future__ import annotations

from typing import Iterable

from .scalars import Scalar

Row = dict[int, Scalar]


def _axpy(row: Row, c: Scalar, other: Row) -> Row:
    """Return ``row - c*other`` without zero entries."""
    out = dict(row)
    for j, v in other.items():
        s = out.get(j)
        t = c * v
        if s is None:
            out[j] = -t
        else:
            s = s - t
            if s:
                out[j] = s
            else:
                del out[j]
    return out


class Echelon:
    """Incrementally maintained echelon form (pivot entries normalized to 1)."""

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    def add(self, row: Row) -> bool:
        """Insert ``row``; return True if it increased the rank."""
        row = {j: v for j, v in row.items() if v}
        while row:
            c = min(row)
            p = self.pivots.get(c)
            if p is None:
                inv = row[c].inverse()
                self.pivots[c] = {j: v * inv for j, v in row.items()}
                return True
            row = _axpy(row, row[c], p)
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rref(self) -> dict[int, Row]:
        """Reduced row echelon form keyed by pivot column."""
        piv = {c: dict(r) for c, r in self.pivots.items()}
        for c in sorted(piv, reverse=True):
            pc = piv[c]
            for d in piv:
                if d != c and c in piv[d]:
                    piv[d] = _axpy(piv[d], piv[d][c], pc)
        return piv


def row_reduce(rows: Iterable[Row]) -> dict[int, Row]:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rref()


def rank(rows: Iterable[Row]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Iterable[Row], ncols: int) -> list[Row]:
    """Canonical basis of ``{x : A x = 0}`` for ``x`` indexed by ``range(ncols)``.

    The basis is returned in reduced row echelon form with respect to the
    column order, so it depends only on the solution space.
    """
    rref = row_reduce(rows)
    free = [j for j in range(ncols) if j not in rref]
    vectors = []
    for f in free:
        v: Row = {f: Scalar(1)}
        for p, r in rref.items():
            c = r.get(f)
            if c:
                v[p] = -c
        vectors.append(v)
    basis = row_reduce(vectors)
    return [basis[c] for c in sorted(basis)]


def in_row_span(rows: Iterable[Row], target: Row) -> bool:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return not ech.add(target)


def apply(rows: list[Row], x: Row) -> list[Scalar]:
    """Matrix-vector product ``A x`` (used to certify nullspace vectors)."""
    out = []
    for r in rows:
        s = Scalar(0)
        for j, v in r.items():
            xj = x.get(j)
            if xj:
                s = s + v * xj
        out.append(s)
    return out

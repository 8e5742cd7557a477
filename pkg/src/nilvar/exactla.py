"""Exact linear algebra over the rationals.

Every dimension this package reports is ultimately the rank of a matrix,
and ranks computed in floating point lie silently.  So: matrices carry
Fraction entries, ranks go through fraction-free Bareiss elimination on
integers (denominators cleared row by row), and linear systems are solved
by Fraction Gauss-Jordan.  Sizes stay modest (a few hundred rows), so
dense lists of rows are fine.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _entry(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError(f"refusing float entry {v!r}; use Fraction or int")
    return Fraction(v)


class RationalMatrix:
    """A dense matrix of Fractions, stored as a list of row lists.

    Entries may be given as int, Fraction or "p/q" strings; floats are
    rejected.  Instances are mutable (rows is plain data) but the methods
    never modify their operands.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows, ncols=None):
        self.rows = [[_entry(v) for v in row] for row in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError(f"ragged rows, widths {sorted(widths)}")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError(f"expected {ncols} columns, got {self.ncols}")
        else:
            self.ncols = 0 if ncols is None else ncols

    @classmethod
    def zeros(cls, nrows, ncols):
        m = cls.__new__(cls)
        m.rows = [[Fraction(0)] * ncols for _ in range(nrows)]
        m.nrows, m.ncols = nrows, ncols
        return m

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.rows[i][i] = Fraction(1)
        return m

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols})"

    def copy(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.ncols)

    def transpose(self) -> "RationalMatrix":
        m = RationalMatrix.__new__(RationalMatrix)
        m.rows = [list(col) for col in zip(*self.rows)] if self.nrows else []
        m.nrows, m.ncols = self.ncols, self.nrows
        if not m.rows:
            m.rows = [[] for _ in range(self.ncols)]
        return m

    def mul(self, other: "RationalMatrix") -> "RationalMatrix":
        """Matrix product self @ other, skipping zero entries (the module
        matrices downstream are mostly zeros)."""
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.ncols} vs {other.nrows}")
        out = RationalMatrix.zeros(self.nrows, other.ncols)
        for i, row in enumerate(self.rows):
            acc = out.rows[i]
            for k, v in enumerate(row):
                if v:
                    orow = other.rows[k]
                    for j, w in enumerate(orow):
                        if w:
                            acc[j] += v * w
        return out

    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)

    # -- ranks -------------------------------------------------------------

    def _int_rows(self):
        """Rows scaled to integers (each row by the lcm of denominators)."""
        out = []
        for row in self.rows:
            m = lcm(*(v.denominator for v in row)) if row else 1
            out.append([int(v * m) for v in row])
        return out

    def rank(self) -> int:
        """Rank by fraction-free Bareiss elimination on the integer-scaled
        rows, with full pivoting preferring +-1 pivots (keeps the exact
        divisions cheap)."""
        m = self._int_rows()
        nr, nc = self.nrows, self.ncols
        r = 0
        prev = 1
        while r < nr:
            # pick a pivot in the live submatrix m[r:][r:]
            best = None
            for i in range(r, nr):
                row = m[i]
                for j in range(r, nc):
                    v = row[j]
                    if v:
                        if v == 1 or v == -1:
                            best = (i, j)
                            break
                        if best is None or abs(v) < abs(m[best[0]][best[1]]):
                            best = (i, j)
                if best and m[best[0]][best[1]] in (1, -1):
                    break
            if best is None:
                break
            bi, bj = best
            m[r], m[bi] = m[bi], m[r]
            if bj != r:
                for row in m:
                    row[r], row[bj] = row[bj], row[r]
            piv = m[r][r]
            for i in range(r + 1, nr):
                row, prow = m[i], m[r]
                f = row[r]
                if f:
                    for j in range(r + 1, nc):
                        row[j] = (row[j] * piv - f * prow[j]) // prev
                    row[r] = 0
                elif prev != 1:
                    for j in range(r + 1, nc):
                        row[j] = (row[j] * piv) // prev
                else:
                    for j in range(r + 1, nc):
                        row[j] = row[j] * piv
            prev = piv
            r += 1
        return r

    def nullity(self) -> int:
        return self.ncols - self.rank()


def hstack(mats) -> RationalMatrix:
    mats = list(mats)
    nr = {m.nrows for m in mats}
    if len(nr) != 1:
        raise ValueError(f"row counts differ: {sorted(nr)}")
    out = RationalMatrix.__new__(RationalMatrix)
    out.rows = [sum((m.rows[i] for m in mats), []) for i in range(nr.pop())]
    out.nrows = len(out.rows)
    out.ncols = sum(m.ncols for m in mats)
    return out


def vstack(mats) -> RationalMatrix:
    mats = list(mats)
    nc = {m.ncols for m in mats}
    if len(nc) != 1:
        raise ValueError(f"column counts differ: {sorted(nc)}")
    out = RationalMatrix.__new__(RationalMatrix)
    out.rows = [list(row) for m in mats for row in m.rows]
    out.nrows = len(out.rows)
    out.ncols = nc.pop()
    return out


def pivot_columns(mat: RationalMatrix) -> list[int]:
    """Indices of a left-to-right greedy maximal independent set of
    columns (the pivot columns of the reduced echelon form).  Fraction
    Gauss without column swaps -- deliberately a different algorithm from
    rank(), so the two can cross-check each other.
    """
    work = [list(row) for row in mat.rows]
    pivots = []
    r = 0
    for c in range(mat.ncols):
        pr = next((i for i in range(r, mat.nrows) if work[i][c]), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = 1 / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(mat.nrows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [v - f * w for v, w in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == mat.nrows:
            break
    return pivots


def complement_standard_vectors(mat: RationalMatrix) -> list[int]:
    """Indices i such that the standard vectors e_i extend the column
    space of mat to all of K^nrows; greedy left to right, so the result
    is deterministic.  len(result) = nrows - rank(mat).
    """
    aug = hstack([mat, RationalMatrix.identity(mat.nrows)])
    return [c - mat.ncols for c in pivot_columns(aug) if c >= mat.ncols]


def solve_consistent(a: RationalMatrix, b: RationalMatrix):
    """Solves a X = b exactly.  Returns X with free variables set to 0,
    or None when the system is inconsistent."""
    if a.nrows != b.nrows:
        raise ValueError(f"row counts differ: {a.nrows} vs {b.nrows}")
    work = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)]
    n, na, total = a.nrows, a.ncols, a.ncols + b.ncols
    pivots = []
    r = 0
    for c in range(na):
        pr = next((i for i in range(r, n) if work[i][c]), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = 1 / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(n):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [v - f * w for v, w in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if any(work[i][na:]):
            return None
    x = RationalMatrix.zeros(a.ncols, b.ncols)
    for row_idx, c in enumerate(pivots):
        x.rows[c] = work[row_idx][na:]
    return x

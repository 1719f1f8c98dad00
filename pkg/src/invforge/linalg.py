"""Exact rational linear algebra: rank, canonical nullspace, affine solve.

The work happens in a fraction-free incremental eliminator over integer
rows (cross-multiplied updates with content stripping, Bareiss style); the
reduced echelon form is produced once at the end by exact back-substitution
into rationals.  The RREF of a row space is unique, so every result here is
deterministic no matter the insertion order of the rows.

Dense matrices are small in this artifact; the engines feed the eliminator
sparse rows directly through the module-level ``*_sparse`` helpers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional


def _int_row(row: dict) -> dict:
    """Scale a sparse rational row to integers with content 1."""
    den = 1
    for c in row.values():
        d = c.denominator if isinstance(c, Fraction) else 1
        den = den * d // math.gcd(den, d)
    g = 0
    vals = {}
    for j, c in row.items():
        v = int(c * den)
        if v:
            vals[j] = v
            g = math.gcd(g, abs(v))
    if g > 1:
        vals = {j: v // g for j, v in vals.items()}
    return vals


class Eliminator:
    """Incremental row reduction; columns are 0..ncols-1 in fixed order."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots = {}  # pivot column -> integer row (content 1, lead > 0)

    def add_row(self, row: dict) -> None:
        row = _int_row(row)
        pivots = self.pivots
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                if row[c] < 0:
                    row = {j: -v for j, v in row.items()}
                pivots[c] = row
                return
            a, b = p[c], row[c]
            g = math.gcd(a, abs(b))
            a //= g
            b //= g
            new = {}
            for j, v in row.items():
                new[j] = v * a
            for j, v in p.items():
                s = new.get(j, 0) - v * b
                if s:
                    new[j] = s
                elif j in new:
                    del new[j]
            g = 0
            for v in new.values():
                g = math.gcd(g, abs(v))
            if g > 1:
                new = {j: v // g for j, v in new.items()}
            row = new

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rref(self) -> list:
        """Reduced echelon rows as (pivot_col, {col: Fraction}), ascending."""
        rows = {c: dict(r) for c, r in self.pivots.items()}
        cols = sorted(rows)
        for c in reversed(cols):
            pc = rows[c]
            for c2 in cols:
                if c2 >= c:
                    break
                r2 = rows[c2]
                if c not in r2:
                    continue
                a, b = pc[c], r2[c]
                g = math.gcd(a, abs(b))
                a //= g
                b //= g
                new = {j: v * a for j, v in r2.items()}
                for j, v in pc.items():
                    s = new.get(j, 0) - v * b
                    if s:
                        new[j] = s
                    elif j in new:
                        del new[j]
                g = 0
                for v in new.values():
                    g = math.gcd(g, abs(v))
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
                rows[c2] = new
        out = []
        for c in cols:
            r = rows[c]
            lead = r[c]
            out.append((c, {j: Fraction(v, lead) for j, v in r.items()}))
        return out


def nullspace_sparse(ncols: int, rows: Iterable[dict]) -> list:
    """Canonical nullspace basis of the matrix given by sparse rows.

    One basis vector per free column, in ascending free-column order; the
    vector carries 1 on its free column and 0 on every other free column.
    """
    elim = Eliminator(ncols)
    for row in rows:
        if row:
            elim.add_row(row)
    rref = elim.rref()
    pivot_cols = {c for c, _ in rref}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for c, r in rref:
            v = r.get(f)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def solve_affine_sparse(ncols: int, rows: Iterable[dict]) -> Optional[list]:
    """Particular solution of an affine system, or None if inconsistent.

    Each row dict maps column -> coefficient with the right-hand side stored
    under column index ``ncols``.  Free variables come back as 0.
    """
    rhs = ncols
    elim = Eliminator(ncols + 1)
    for row in rows:
        if row:
            elim.add_row(row)
    if rhs in elim.pivots:
        return None
    sol = [Fraction(0)] * ncols
    for c, r in elim.rref():
        sol[c] = r.get(rhs, Fraction(0))
    return sol


def rank_sparse(ncols: int, rows: Iterable[dict]) -> int:
    elim = Eliminator(ncols)
    for row in rows:
        if row:
            elim.add_row(row)
    return elim.rank


@dataclass(frozen=True)
class RationalMatrix:
    """Dense exact matrix; entries row-major, length rows*cols."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, data) -> "RationalMatrix":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        return cls(rows, cols, tuple(c for r in data for c in r))

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def _sparse_rows(self):
        for i in range(self.rows):
            row = {j: self.entries[i * self.cols + j]
                   for j in range(self.cols)
                   if self.entries[i * self.cols + j]}
            if row:
                yield row

    def rank(self) -> int:
        return rank_sparse(self.cols, self._sparse_rows())

    def nullspace(self) -> list:
        return nullspace_sparse(self.cols, self._sparse_rows())

    def solve_affine(self, b) -> Optional[list]:
        b = list(b)
        if len(b) != self.rows:
            raise ValueError("right-hand side length does not match rows")
        def rows_with_rhs():
            for i in range(self.rows):
                row = {j: self.entries[i * self.cols + j]
                       for j in range(self.cols)
                       if self.entries[i * self.cols + j]}
                if b[i]:
                    row[self.cols] = b[i]
                if row:
                    yield row
        return solve_affine_sparse(self.cols, rows_with_rhs())


def rank(m: RationalMatrix) -> int:
    return m.rank()


def nullspace(m: RationalMatrix) -> list:
    return m.nullspace()


def solve_affine(m: RationalMatrix, b) -> Optional[list]:
    return m.solve_affine(b)

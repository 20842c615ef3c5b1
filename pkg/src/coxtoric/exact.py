"""Exact integer matrix normal forms and rational linear algebra.

All arithmetic is arbitrary precision: matrix entries are Python ints,
vector arithmetic uses fractions.Fraction. There is no floating point
anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMat:
    """Dense integer matrix, row-major entries."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMat":
        rs = [tuple(int(x) for x in row) for row in rows]
        if rs:
            width = len(rs[0])
            if any(len(r) != width for r in rs):
                raise ValueError("ragged rows")
        else:
            width = 0 if cols is None else cols
        return cls(len(rs), width, tuple(x for r in rs for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMat":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "IntMat":
        return IntMat(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j]
                            for j in range(self.cols) for i in range(self.rows)))

    def mul(self, other: "IntMat") -> "IntMat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        rows = []
        orows = other.to_rows()
        for i in range(self.rows):
            r = self.row(i)
            acc = [0] * other.cols
            for k, a in enumerate(r):
                if a:
                    ok = orows[k]
                    for j in range(other.cols):
                        acc[j] += a * ok[j]
            rows.append(acc)
        return IntMat.from_rows(rows, cols=other.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def dot(u: Sequence, v: Sequence):
    """Exact dot product of two equal-length vectors."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum(a * b for a, b in zip(u, v))


def _sub_scaled(target: list[int], source: Sequence[int], q: int) -> None:
    for j in range(len(target)):
        target[j] -= q * source[j]


def hermite_normal_form(m: IntMat) -> tuple[IntMat, IntMat]:
    """Row-style Hermite normal form.

    Returns (h, u) with u unimodular, u*m = h, h in row echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    Zero rows sink to the bottom.
    """
    if m.rows == 0 or m.cols == 0:
        return m, IntMat.identity(m.rows)
    h = [list(r) for r in m.to_rows()]
    u = [list(r) for r in IntMat.identity(m.rows).to_rows()]
    nr, nc = m.rows, m.cols
    r = 0
    for c in range(nc):
        if r == nr:
            break
        while True:
            nz = [i for i in range(r, nr) if h[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(h[i][c]))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
                u[r], u[i0] = u[i0], u[r]
            pivot = h[r][c]
            clean = True
            for i in range(r + 1, nr):
                if h[i][c]:
                    q = h[i][c] // pivot
                    if q:
                        _sub_scaled(h[i], h[r], q)
                        _sub_scaled(u[i], u[r], q)
                    if h[i][c]:
                        clean = False
            if clean:
                break
        if r < nr and h[r][c]:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            p = h[r][c]
            for i in range(r):
                q = h[i][c] // p
                if q:
                    _sub_scaled(h[i], h[r], q)
                    _sub_scaled(u[i], u[r], q)
            r += 1
    return IntMat.from_rows(h, cols=nc), IntMat.from_rows(u, cols=nr)


def kernel_lattice(m: IntMat) -> IntMat:
    """Basis (as rows) of the saturated integer kernel {v : m.v = 0}.

    Computed from the HNF of the transpose: the unimodular rows aligned
    with zero rows of the echelon part span the kernel, and the span is
    automatically saturated (the quotient lattice is torsion-free).
    """
    h, u = hermite_normal_form(m.transpose())
    rk = sum(1 for i in range(h.rows) if any(h.row(i)))
    return IntMat.from_rows([u.row(i) for i in range(rk, u.rows)], cols=m.cols)


def det(m: IntMat) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.to_rows()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def invariant_factors(m: IntMat) -> tuple[int, ...]:
    """Nonzero Smith normal form diagonal of m, as positive integers d1 | d2 | ...."""
    a = [list(r) for r in m.to_rows()]
    nr, nc = m.rows, m.cols
    factors: list[int] = []
    t = 0
    while True:
        pos = [(i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not pos:
            break
        i0, j0 = min(pos, key=lambda p: abs(a[p[0]][p[1]]))
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // pivot
                    _sub_scaled(a[i], a[t], q)
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // pivot
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if dirty:
                continue
            # pivot now alone in its row and column; enforce divisibility
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(len(a[offender])):
                a[t][j] += a[offender][j]
        factors.append(abs(a[t][t]))
        t += 1
        if t == nr or t == nc:
            break
    return tuple(factors)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals of a matrix given as rows (ints or Fractions)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    nc = len(mat[0])
    rk = 0
    for c in range(nc):
        piv = None
        for i in range(rk, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        inv = 1 / mat[rk][c]
        mat[rk] = [x * inv for x in mat[rk]]
        for i in range(len(mat)):
            if i != rk and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rk])]
        rk += 1
        if rk == len(mat):
            break
    return rk


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (matrix, pivot column list)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    if not mat:
        return mat, pivots
    nc = len(mat[0])
    rk = 0
    for c in range(nc):
        piv = None
        for i in range(rk, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        inv = 1 / mat[rk][c]
        mat[rk] = [x * inv for x in mat[rk]]
        for i in range(len(mat)):
            if i != rk and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rk])]
        pivots.append(c)
        rk += 1
        if rk == len(mat):
            break
    return mat[:rk], pivots


def nullspace(rows: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Basis of {x : rows . x = 0} over Q (one basis vector per free column)."""
    if not rows:
        raise ValueError("nullspace needs at least one row to fix the dimension")
    nc = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(tuple(v))
    return basis


def rational_solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One exact solution x of rows . x = rhs, or None if inconsistent."""
    if len(rows) != len(rhs):
        raise ValueError("dimension mismatch")
    if not rows:
        return []
    nc = len(rows[0])
    aug = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    for row in red:
        if all(x == 0 for x in row[:nc]) and row[nc] != 0:
            return None
    x = [Fraction(0)] * nc
    for i, p in enumerate(pivots):
        if p == nc:
            return None
        x[p] = red[i][nc]
    return x

"""Exact integer linear algebra over Z.

Everything here is done with Python's arbitrary-precision integers, so
results are exact for any input size.  The matrices that show up in this
package are presentation matrices of first homology groups (at most a
handful of rows), so the algorithms favour clarity over asymptotics:
Smith normal form by repeated pivoting on a smallest entry, determinants
by fraction-free Bareiss elimination.

Conventions:
  * smith_normal_form(A) returns D = U*A*V with U, V unimodular, the
    diagonal nonnegative, nonzero entries first, and d1 | d2 | ... .
  * cokernel(A) treats the columns of A as relations among A.rows
    generators, i.e. it computes Z^rows / col-span(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored row-major.  Empty shapes are fine."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> "IntMatrix":
        m = len(diag) if rows is None else rows
        n = len(diag) if cols is None else cols
        entries = [0] * (m * n)
        for k, d in enumerate(diag):
            entries[k * n + k] = d
        return cls(m, n, tuple(entries))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self.entry(i, j)
                               for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.entry(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix difference")
        return IntMatrix(self.rows, self.cols,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))


@dataclass(frozen=True)
class SmithForm:
    """Result of smith_normal_form: U*A*V has diagonal d and zeros elsewhere."""

    d: tuple[int, ...]
    U: IntMatrix
    V: IntMatrix

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        return IntMatrix.diagonal(self.d, rows, cols)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    Z^free_rank + Z/t1 + ... + Z/tk with each ti >= 2 and t1 | t2 | ... | tk.
    The constructor enforces canonical form; use direct_sum to combine
    groups whose factors are not already canonical together.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for t in self.torsion:
            if not isinstance(t, int) or t < 2:
                raise ValueError("torsion coefficients must be integers >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion coefficients must form a divisibility chain")

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls(0)

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank)

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        """Z/n, with the conventions Z/0 = Z and Z/1 = 0; sign is ignored."""
        n = abs(n)
        if n == 0:
            return cls(1)
        if n == 1:
            return cls(0)
        return cls(0, (n,))

    def order(self) -> int | None:
        """Number of elements, or None when the group is infinite."""
        if self.free_rank > 0:
            return None
        p = 1
        for t in self.torsion:
            p *= t
        return p

    def generator_count(self) -> int:
        """Minimal number of generators."""
        return self.free_rank + len(self.torsion)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    """Direct sum, renormalised to invariant-factor form."""
    rank = sum(g.free_rank for g in groups)
    coeffs = [t for g in groups for t in g.torsion]
    if not coeffs:
        return AbelianGroup(rank)
    sf = smith_normal_form(IntMatrix.diagonal(coeffs))
    return AbelianGroup(rank, tuple(t for t in sf.d if t >= 2))


def smith_normal_form(A: IntMatrix) -> SmithForm:
    """Smith normal form with unimodular transforms.

    Returns SmithForm(d, U, V) with U*A*V diagonal, diagonal entries
    nonnegative, all nonzero entries first, and each dividing the next.
    """
    m, n = A.rows, A.cols
    D = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i: int, j: int) -> None:
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, k: int) -> None:
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst: int, src: int, k: int) -> None:
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    def negate_row(i: int) -> None:
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    limit = min(m, n)
    while t < limit:
        # Pick a smallest nonzero entry of the trailing block as pivot.
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = abs(D[i][j])
                if a != 0 and (best is None or a < best):
                    best, pivot = a, (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        # Reduce column t, then row t.  Remainders shrink strictly, so if
        # anything survives we re-pick a pivot and go again; termination is
        # the usual gcd descent.
        for i in range(t + 1, m):
            q = D[i][t] // D[t][t]
            if q:
                add_row(i, t, -q)
        if any(D[i][t] for i in range(t + 1, m)):
            continue
        for j in range(t + 1, n):
            q = D[t][j] // D[t][t]
            if q:
                add_col(j, t, -q)
        if any(D[t][j] for j in range(t + 1, n)):
            continue

        # Enforce divisibility: fold a violating row into row t and redo.
        violator = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t] != 0:
                    violator = i
                    break
            if violator is not None:
                break
        if violator is not None:
            add_row(t, violator, 1)
            continue

        if D[t][t] < 0:
            negate_row(t)
        t += 1

    diag = [D[k][k] for k in range(limit)]
    return SmithForm(tuple(diag), IntMatrix.from_rows(U), IntMatrix.from_rows(V))


def cokernel(A: IntMatrix) -> AbelianGroup:
    """Z^rows modulo the subgroup generated by the columns of A.

    This is the group presented by A with one generator per row and one
    relation per column; every homology computation in this package goes
    through here.
    """
    sf = smith_normal_form(A)
    nonzero = sum(1 for x in sf.d if x != 0)
    return AbelianGroup(A.rows - nonzero, tuple(x for x in sf.d if x >= 2))


def determinant(A: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination.  Exact."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    M = A.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def group_order(group: AbelianGroup) -> int | None:
    """Order of a finitely generated abelian group; None when infinite."""
    return group.order()

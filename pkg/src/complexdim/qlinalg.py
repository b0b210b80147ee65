"""Exact linear algebra over the multi-quadratic field, over Q and over Z.

Matrices are plain lists of rows.  Pivoting always takes the first nonzero
entry in scan order, so every result is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import NoSolution
from .exactnum import RealElement

MatrixF = list[list[RealElement]]
MatrixQ = list[list[Fraction]]
MatrixZ = list[list[int]]

__all__ = [
    "DependenceReport",
    "hermite_basis",
    "integer_kernel",
    "nullspace_field",
    "rank_field",
    "rank_int",
    "rank_rational",
    "rational_dependence",
    "rref",
    "select_basis_columns",
    "solve_field",
    "surd_coordinates",
    "to_field",
]


def to_field(rows: Sequence[Sequence[object]]) -> MatrixF:
    return [[RealElement.coerce(x) for x in row] for row in rows]


def _shape(M: Sequence[Sequence[object]]) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def rref(M: Sequence[Sequence[RealElement]]) -> tuple[MatrixF, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    rows, cols = _shape(M)
    A = [list(r) for r in M]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank_field(M: Sequence[Sequence[RealElement]]) -> int:
    return len(rref(M)[1])


def select_basis_columns(M: Sequence[Sequence[RealElement]]) -> list[int]:
    """Greedy left-to-right maximal independent set of columns (0-based)."""
    return rref(M)[1]


def solve_field(A: Sequence[Sequence[RealElement]], b: Sequence[RealElement]) -> list[RealElement]:
    """Exact solution of ``A x = b``; free variables are set to zero.

    Raises :class:`NoSolution` when ``b`` is outside the column space.
    """
    rows, cols = _shape(A)
    if len(b) != rows:
        raise ValueError("dimension mismatch")
    aug = [list(A[i]) + [RealElement.coerce(b[i])] for i in range(rows)]
    R, pivots = rref(aug)
    if cols in pivots:
        raise NoSolution("right-hand side is not in the column space")
    x = [RealElement() for _ in range(cols)]
    for i, c in enumerate(pivots):
        x[c] = R[i][cols]
    for i in range(rows):
        if sum((A[i][j] * x[j] for j in range(cols)), RealElement()) != b[i]:
            raise NoSolution("back-substitution check failed")
    return x


def nullspace_field(A: Sequence[Sequence[RealElement]], cols: int | None = None) -> list[list[RealElement]]:
    """Basis of the right null space, one vector per free column."""
    rows, c = _shape(A)
    cols = c if cols is None else cols
    if rows == 0:
        return [[RealElement.rational(int(i == j)) for i in range(cols)] for j in range(cols)]
    R, pivots = rref(A)
    basis = []
    for free in (j for j in range(cols) if j not in pivots):
        v = [RealElement() for _ in range(cols)]
        v[free] = RealElement.rational(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][free]
        basis.append(v)
    return basis


def rank_int(M: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    rows, cols = _shape(M)
    A = [list(map(int, r)) for r in M]
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, rows):
            a = A[i][c]
            # exact division is the Bareiss invariant
            A[i] = [(p * A[i][j] - a * A[r][j]) // prev for j in range(cols)]
        prev = p
        r += 1
    return r


def rank_rational(M: Sequence[Sequence[Fraction | int]]) -> int:
    return rank_field(to_field(M))


def _rational_rref(M: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows, cols = _shape(M)
    A = [list(r) for r in M]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


@dataclass(frozen=True)
class DependenceReport:
    independent_indices: tuple[int, ...]
    # position j -> coefficients over independent_indices (same order)
    expressions: dict[int, tuple[Fraction, ...]] = field(default_factory=dict)


def rational_dependence(vectors: Sequence[Sequence[Fraction | int]]) -> DependenceReport:
    """Greedy left-to-right maximal Q-independent subset of ``vectors``.

    Every dependent vector gets the coefficients expressing it over the
    independent ones; each expression is checked exactly before returning.
    """
    vecs = [[Fraction(x) for x in v] for v in vectors]
    if not vecs:
        return DependenceReport((), {})
    dim = len(vecs[0])
    if any(len(v) != dim for v in vecs):
        raise ValueError("vectors must have the same length")
    # columns are the input vectors; pivot columns are the greedy choice
    A = [[vecs[j][i] for j in range(len(vecs))] for i in range(dim)]
    R, pivots = _rational_rref(A)
    expressions = {}
    for j in range(len(vecs)):
        if j in pivots:
            continue
        coeffs = tuple(R[i][j] for i in range(len(pivots)))
        recon = [sum((c * vecs[p][i] for c, p in zip(coeffs, pivots)), Fraction(0)) for i in range(dim)]
        if recon != vecs[j]:
            raise AssertionError("dependence expression does not reproduce its vector")
        expressions[j] = coeffs
    return DependenceReport(tuple(pivots), expressions)


def surd_coordinates(values: Sequence[RealElement]) -> tuple[tuple[int, ...], list[list[Fraction]]]:
    """Q-coefficient vectors of ``values`` over their common surd support.

    Position 0 of every vector is the rational part (radicand 1).
    """
    support = sorted({m for v in values for m in v.radicands} | {1})
    return tuple(support), [[v.coefficient(m) for m in support] for v in values]


# -- integer lattices ---------------------------------------------------------


def _row_reduce_int(rows: list[list[int]], ncols: int) -> int:
    """In-place integer row echelon form on the first ``ncols`` columns.

    Only unimodular row operations are used, so the Z-span of the rows (and of
    any trailing tracking columns) is preserved.  Returns the number of
    nonzero leading rows.
    """
    r = 0
    n = len(rows)
    for c in range(ncols):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if rows[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[piv] = rows[piv], rows[r]
            done = True
            for i in range(r + 1, n):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if any(rows[i][c] for i in range(r, n)):
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
            r += 1
    return r


def hermite_basis(vectors: Sequence[Sequence[int]]) -> MatrixZ:
    """Z-basis (Hermite normal form rows) of the lattice spanned by ``vectors``."""
    rows = [list(map(int, v)) for v in vectors]
    if not rows:
        return []
    r = _row_reduce_int(rows, len(rows[0]))
    return rows[:r]


def integer_kernel(B: Sequence[Sequence[int]], cols: int | None = None) -> MatrixZ:
    """Z-basis of ``{x in Z^cols : B x = 0}``."""
    nrows, c = _shape(B)
    cols = c if cols is None else cols
    # one row per column of B, augmented with an identity tracker
    rows = [[int(B[i][j]) for i in range(nrows)] + [int(j == k) for k in range(cols)] for j in range(cols)]
    r = _row_reduce_int(rows, nrows)
    kernel = [row[nrows:] for row in rows[r:]]
    return hermite_basis(kernel)

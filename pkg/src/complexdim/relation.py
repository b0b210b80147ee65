"""Float-mode front end: LLL reduction and integer relation detection.

Everything here is heuristic in the sense that decimals cannot certify
rational independence; results produced through this module carry a
``heuristic`` flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Sequence

import numpy as np

from .dimension import MHReport, RationalStructure, assemble_mh
from .errors import PrecisionExhausted, RankDeficient

DEFAULT_DELTA = 0.99
DEFAULT_SCALE_DIGITS = 12
DEFAULT_MAX_COEFF = 10**6
# |sum c_i x_i| <= 10**-s * ||c||_1 * SAFETY certifies a relation
SAFETY = 2

RealLike = float | int | Fraction | Decimal | str


@dataclass(frozen=True)
class LLLResult:
    basis: list[list[int]]
    transform: list[list[int]]  # basis == transform @ input


def _exact(x: RealLike) -> Fraction:
    if isinstance(x, (Decimal, str)):
        return Fraction(Decimal(x))
    return Fraction(x)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def lll_reduce_with_transform(basis: Sequence[Sequence[int | Fraction]], delta: float | Fraction = DEFAULT_DELTA) -> LLLResult:
    """Integral LLL (all Gram-Schmidt data kept as integers).

    Rows of ``basis`` are the lattice vectors.  Rational input is scaled to
    integers and scaled back, so the transform is always integral.
    """
    rows = [[Fraction(x) for x in r] for r in basis]
    n = len(rows)
    if n == 0:
        return LLLResult([], [])
    den = math.lcm(*(x.denominator for r in rows for x in r))
    b = [[int(x * den) for x in r] for r in rows]
    dl = Fraction(delta).limit_denominator(10**6)
    if not Fraction(1, 4) < dl <= 1:
        raise ValueError("delta must lie in (1/4, 1]")
    dn, dd = dl.numerator, dl.denominator
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    # d[i + 1] is the Gram determinant of the first i + 1 rows; d[0] = 1
    d = [1] + [0] * n
    lam = [[0] * n for _ in range(n)]

    def gram_row(k: int) -> None:
        for j in range(k + 1):
            u = _dot(b[k], b[j])
            for i in range(j):
                u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
            if j < k:
                lam[k][j] = u
            else:
                if u == 0:
                    raise RankDeficient("input vectors are linearly dependent")
                d[k + 1] = u

    def reduce(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            U[k] = [x - q * y for x, y in zip(U[k], U[l])]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k: int, kmax: int) -> None:
        b[k], b[k - 1] = b[k - 1], b[k]
        U[k], U[k - 1] = U[k - 1], U[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lk = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lk * lk) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lk * t) // d[k]
            lam[i][k - 1] = (B * t + lk * lam[i][k]) // d[k + 1]
        d[k] = B

    gram_row(0)
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            gram_row(k)
        reduce(k, k - 1)
        # Lovasz: d_k d_{k-2} >= delta d_{k-1}^2 - lambda^2, in integer form
        if dd * d[k + 1] * d[k - 1] < dn * d[k] ** 2 - dd * lam[k][k - 1] ** 2:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                reduce(k, l)
            k += 1
    if den != 1:
        out = [[Fraction(x, den) for x in r] for r in b]
        out = [[int(x) if x.denominator == 1 else x for x in r] for r in out]
    else:
        out = b
    return LLLResult(out, U)


def lll_reduce(basis: Sequence[Sequence[int | Fraction]], delta: float | Fraction = DEFAULT_DELTA) -> list[list[int]]:
    return lll_reduce_with_transform(basis, delta).basis


@dataclass(frozen=True)
class RelationResult:
    coefficients: tuple[int, ...]
    residual: float


def relation_residual(xs: Sequence[RealLike], coeffs: Sequence[int]) -> float:
    return float(abs(sum((c * _exact(x) for c, x in zip(coeffs, xs)), Fraction(0))))


def _normalize(c: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*c)
    c = [x // g for x in c]
    first = next(x for x in c if x)
    return tuple(-x for x in c) if first < 0 else tuple(c)


def find_integer_relation(
    xs: Sequence[RealLike],
    scale_digits: int = DEFAULT_SCALE_DIGITS,
    max_coeff: int = DEFAULT_MAX_COEFF,
    delta: float = DEFAULT_DELTA,
) -> RelationResult | None:
    """Small integer vector c with ``sum c_i x_i ~ 0``, or None.

    Reduces the lattice spanned by ``(e_i, round(10**s x_i))`` and returns
    the shortest reduced vector whose residual passes
    ``|sum c_i x_i| <= 10**-s * ||c||_1 * SAFETY`` with ``max |c_i| <= max_coeff``.
    """
    if len(xs) < 2:
        raise ValueError("need at least two numbers")
    if scale_digits < 6:
        raise ValueError("scale_digits must be >= 6")
    scale = 10**scale_digits
    exact = [_exact(x) for x in xs]
    n = len(exact)
    rows = [[int(i == j) for j in range(n)] + [round(x * scale)] for i, x in enumerate(exact)]
    reduced = lll_reduce(rows, delta)
    reduced.sort(key=lambda r: sum(v * v for v in r))
    for row in reduced:
        c = row[:n]
        if not any(c) or max(map(abs, c)) > max_coeff:
            continue
        resid = abs(sum((ci * x for ci, x in zip(c, exact)), Fraction(0)))
        if resid * scale <= sum(map(abs, c)) * SAFETY:
            c = _normalize(c)
            return RelationResult(c, float(resid))
    return None


def numeric_rational_structure(
    coords: Sequence[Sequence[RealLike]],
    scale_digits: int = DEFAULT_SCALE_DIGITS,
    max_coeff: int = DEFAULT_MAX_COEFF,
    delta: float = DEFAULT_DELTA,
) -> list[RationalStructure]:
    """Float analogue of the exact dependence analysis, one entry per vector.

    Coordinates are scanned left to right; each one is tested for an integer
    relation with 1 and the coordinates already accepted as independent.
    """
    out = []
    tiny = Fraction(1, 10**scale_digits)
    for alpha in coords:
        values = [_exact(a) for a in alpha]
        independent: list[int] = []
        t: dict[int, Fraction] = {}
        gamma: dict[tuple[int, int], Fraction] = {}
        for j, a in enumerate(values):
            if abs(a) < tiny:
                t[j] = Fraction(0)
                gamma.update({(j, i): Fraction(0) for i in independent})
                continue
            pool = [Fraction(1)] + [values[i] for i in independent] + [a]
            # a relation among m+1 numbers with coefficients above C_eff is
            # indistinguishable from noise at this precision
            cap = min(max_coeff, max(2, int(10 ** ((scale_digits - 2) / len(pool)))))
            rel = find_integer_relation(pool, scale_digits, cap, delta)
            if rel is None:
                independent.append(j)
                continue
            c = rel.coefficients
            if c[-1] == 0:
                raise PrecisionExhausted(
                    f"coordinates {independent} accepted as independent satisfy a relation"
                )
            t[j] = Fraction(-c[0], c[-1])
            for i, ci in zip(independent, c[1:-1]):
                gamma[(j, i)] = Fraction(-ci, c[-1])
        # gamma must mention every (dependent, independent) pair
        for j in t:
            for i in independent:
                gamma.setdefault((j, i), Fraction(0))
        out.append(RationalStructure(tuple(independent), t, gamma))
    return out


@dataclass
class FloatDimension:
    report: MHReport
    basis_indices: tuple[int, ...]
    q: int
    heuristic: bool = True

    @property
    def p(self) -> int:
        return self.report.rank

    @property
    def r(self) -> int:
        return self.q - self.report.rank


def float_span_reduce(generators: Sequence[Sequence[float]], tol: float = 1e-9) -> tuple[tuple[int, ...], list[list[float]]]:
    """Greedy basis among the generators and least-squares coordinates."""
    G = np.asarray(generators, dtype=float)
    scale = max(1.0, float(np.abs(G).max())) if G.size else 1.0
    basis: list[int] = []
    for k in range(G.shape[0]):
        cand = basis + [k]
        if np.linalg.matrix_rank(G[cand].T, tol=tol * scale) == len(cand):
            basis.append(k)
    coords = []
    Bm = G[basis].T
    for k in range(G.shape[0]):
        if k in basis:
            coords.append([float(i == basis.index(k)) for i in range(len(basis))])
        elif basis:
            x, *_ = np.linalg.lstsq(Bm, G[k], rcond=None)
            coords.append(x.tolist())
        else:
            coords.append([])
    return tuple(basis), coords


def float_build_mh(
    generators: Sequence[Sequence[float]],
    scale_digits: int = DEFAULT_SCALE_DIGITS,
    max_coeff: int = DEFAULT_MAX_COEFF,
    delta: float = DEFAULT_DELTA,
) -> MHReport:
    """M_H from decimal generators; the report is flagged heuristic."""
    basis, coords = float_span_reduce(generators)
    others = [k for k in range(len(coords)) if k not in basis]
    # round coordinates to the working precision before relation search
    rounded = [[Decimal(repr(round(x, scale_digits))) for x in coords[k]] for k in others]
    structures = numeric_rational_structure(rounded, scale_digits, max_coeff, delta)
    from .exactnum import RealElement

    exact_coords = [tuple(RealElement.rational(Fraction(Decimal(repr(x)))) for x in c) for c in coords]
    return assemble_mh(basis, exact_coords, dict(zip(others, structures)), heuristic=True)

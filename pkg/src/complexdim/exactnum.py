"""Exact arithmetic in multi-quadratic fields Q(sqrt(d) : d squarefree).

A :class:`RealElement` is a finite Q-linear combination of square roots of
squarefree positive integers.  Square roots of distinct squarefree integers
are linearly independent over Q (a classical theorem, used here as an
axiom), so the canonical term map is unique and zero testing is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import DivisionByZero

Rational = Fraction
Number = Union[int, Fraction, "RealElement"]

__all__ = [
    "Approx",
    "RealElement",
    "Rational",
    "eval_float",
    "inverse",
    "is_zero",
    "normalize_radicand",
    "prime_factors",
]


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in _factor(n))


def normalize_radicand(n: int) -> tuple[int, int]:
    """Split ``n`` as ``s**2 * m`` with ``m`` squarefree; returns ``(s, m)``."""
    if n < 1:
        raise ValueError(f"radicand must be positive, got {n}")
    s = m = 1
    for p, e in _factor(n):
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


def _is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in _factor(n))


class RealElement:
    """Immutable element of Q(sqrt(d) : d squarefree).

    ``terms`` maps squarefree radicands (1 stands for the rational unit) to
    nonzero rational coefficients.  Any positive radicand may be passed to the
    constructor; it is normalized, so ``RealElement({8: 1}) == 2*sqrt(2)``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int | Fraction] | None = None):
        acc: dict[int, Fraction] = {}
        for rad, coeff in (terms or {}).items():
            if not isinstance(rad, int) or rad < 1:
                raise ValueError(f"radicand must be a positive integer, got {rad!r}")
            s, m = normalize_radicand(rad)
            acc[m] = acc.get(m, Fraction(0)) + Fraction(coeff) * s
        self._terms = tuple(sorted((m, c) for m, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def _raw(cls, items: Iterable[tuple[int, Fraction]]) -> RealElement:
        # items must already be squarefree radicands
        obj = object.__new__(cls)
        obj._terms = tuple(sorted((m, c) for m, c in items if c != 0))
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, value: int | Fraction) -> RealElement:
        return cls._raw([(1, Fraction(value))])

    @classmethod
    def sqrt(cls, n: int) -> RealElement:
        s, m = normalize_radicand(n)
        return cls._raw([(m, Fraction(s))])

    @classmethod
    def coerce(cls, value: Number) -> RealElement:
        if isinstance(value, RealElement):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot convert {type(value).__name__} to RealElement")

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(dict(self._terms))

    @property
    def radicands(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self._terms)

    def coefficient(self, radicand: int) -> Fraction:
        for m, c in self._terms:
            if m == radicand:
                return c
        return Fraction(0)

    def is_rational(self) -> bool:
        return all(m == 1 for m, _ in self._terms)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.coefficient(1)

    # -- ring operations -------------------------------------------------

    def __add__(self, other: Number) -> RealElement:
        try:
            other = RealElement.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms:
            acc[m] = acc.get(m, 0) + c
        return RealElement._raw(acc.items())

    __radd__ = __add__

    def __neg__(self) -> RealElement:
        return RealElement._raw((m, -c) for m, c in self._terms)

    def __pos__(self) -> RealElement:
        return self

    def __sub__(self, other: Number) -> RealElement:
        try:
            other = RealElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> RealElement:
        return RealElement.coerce(other) - self

    def __mul__(self, other: Number) -> RealElement:
        if isinstance(other, (int, Fraction)):
            return RealElement._raw((m, c * other) for m, c in self._terms)
        if not isinstance(other, RealElement):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for a, ca in self._terms:
            for b, cb in other._terms:
                g = math.gcd(a, b)
                m = (a // g) * (b // g)
                acc[m] = acc.get(m, 0) + ca * cb * g
        return RealElement._raw(acc.items())

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> RealElement:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero()
            return RealElement._raw((m, c / other) for m, c in self._terms)
        if not isinstance(other, RealElement):
            return NotImplemented
        return self * inverse(other)

    def __rtruediv__(self, other: Number) -> RealElement:
        return RealElement.coerce(other) * inverse(self)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RealElement):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == RealElement.rational(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coefficient(1))
            else:
                self._hash = hash(self._terms)
        return self._hash

    def __float__(self) -> float:
        if not self._terms:
            return 0.0
        return float(eval_float(self, 20).value)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"RealElement({render(self)!r})"


def render(a: RealElement) -> str:
    """Render as an expression in the parser's grammar (ASCII minus)."""
    if not a._terms:
        return "0"
    parts = []
    for i, (m, c) in enumerate(a._terms):
        neg = c < 0
        mag = -c if neg else c
        if m == 1:
            body = str(mag)
        elif mag == 1:
            body = f"sqrt({m})"
        else:
            body = f"{mag}*sqrt({m})"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def is_zero(a: RealElement) -> bool:
    return not a._terms


def _solve_rational(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan solve of a square nonsingular rational system."""
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def inverse(a: RealElement) -> RealElement:
    """Exact multiplicative inverse.

    Works in the subalgebra spanned by sqrt(m) for m ranging over squarefree
    products of the primes dividing a's radicands (dimension 2**|P|), where
    multiplication by ``a`` is a Q-linear map; solves ``a*x = 1`` there.
    """
    if not a._terms:
        raise DivisionByZero("inverse of zero")
    if a.is_rational():
        return RealElement.rational(1 / a.coefficient(1))
    primes = sorted({p for m in a.radicands for p in prime_factors(m)})
    basis = sorted(
        math.prod(s) for r in range(len(primes) + 1) for s in combinations(primes, r)
    )
    index = {m: i for i, m in enumerate(basis)}
    dim = len(basis)
    matrix = [[Fraction(0)] * dim for _ in range(dim)]
    for j, b in enumerate(basis):
        for m, c in (a * RealElement._raw([(b, Fraction(1))]))._terms:
            matrix[index[m]][j] = c
    rhs = [Fraction(0)] * dim
    rhs[index[1]] = Fraction(1)
    x = _solve_rational(matrix, rhs)
    return RealElement._raw(zip(basis, x))


@dataclass(frozen=True)
class Approx:
    """Decimal approximation with an absolute error bound."""

    value: Decimal
    error: Decimal

    def __float__(self) -> float:
        return float(self.value)


def eval_float(a: RealElement, digits: int) -> Approx:
    """Decimal value within ``10**-digits`` of ``a`` (exact for zero)."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if not a._terms:
        return Approx(Decimal(0), Decimal(0))
    weight = sum(abs(c) for _, c in a._terms)
    # guard digits keep the truncation error below a quarter ulp of the result
    prec = digits + max(1, math.ceil(math.log10(4 * weight + 1))) + 1
    scale = 10**prec
    total = Fraction(0)
    for m, c in a._terms:
        root = math.isqrt(m * scale * scale) if m != 1 else scale
        total += c * Fraction(root, scale)
    trunc_err = Fraction(sum(abs(c) for m, c in a._terms if m != 1), scale)
    rounded = round(total * 10**digits)
    err = trunc_err + abs(total - Fraction(rounded, 10**digits))
    with localcontext() as ctx:
        ctx.prec = max(28, digits + len(str(abs(rounded))) + 5)
        value = Decimal(rounded).scaleb(-digits)
        error = Decimal(err.numerator) / Decimal(err.denominator)
    return Approx(value, error)

"""Closed additive groups ``E + D`` and homomorphisms ``f = f1 (+) f2``.

A closed group is stored as a basis of the vector space ``E`` and free
generators of the discrete group ``D``.  A homomorphism is given by its
action on those: ``A`` maps E-coordinates to codomain E-coordinates (any
exact reals) and ``B`` maps D-coordinates to codomain D-coordinates (an
integer matrix, so ``f2(D)`` lands in ``D'``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dimension import ComplexDim
from .errors import DegenerateImage
from .exactnum import RealElement
from .qlinalg import (
    MatrixF,
    MatrixZ,
    hermite_basis,
    integer_kernel,
    nullspace_field,
    rank_field,
    rank_int,
    select_basis_columns,
    to_field,
)

Vector = tuple[RealElement, ...]


def _combine(coeffs: Sequence[RealElement | int], vectors: Sequence[Vector], n: int) -> Vector:
    out = [RealElement() for _ in range(n)]
    for c, v in zip(coeffs, vectors):
        if c:
            out = [a + c * b for a, b in zip(out, v)]
    return tuple(out)


def _as_columns(vectors: Sequence[Vector], n: int) -> MatrixF:
    return [[v[i] for v in vectors] for i in range(n)]


@dataclass(frozen=True)
class ClosedGroup:
    ambient_dim: int
    E_basis: tuple[Vector, ...] = ()
    D_gens: tuple[Vector, ...] = ()

    def __post_init__(self) -> None:
        E = tuple(tuple(RealElement.coerce(x) for x in v) for v in self.E_basis)
        D = tuple(tuple(RealElement.coerce(x) for x in v) for v in self.D_gens)
        object.__setattr__(self, "E_basis", E)
        object.__setattr__(self, "D_gens", D)
        for v in E + D:
            if len(v) != self.ambient_dim:
                raise ValueError(f"vector of length {len(v)} in R^{self.ambient_dim}")
        if rank_field(_as_columns(E + D, self.ambient_dim)) != len(E) + len(D):
            raise ValueError("E basis and D generators must be jointly independent")

    def cdim(self) -> ComplexDim:
        return ComplexDim(len(self.E_basis), len(self.D_gens))


def cdim(G: ClosedGroup) -> ComplexDim:
    return G.cdim()


def _integer(x: object) -> int:
    v = RealElement.coerce(x)
    if not v.is_rational() or v.as_rational().denominator != 1:
        raise ValueError("B must be integral")
    return int(v.as_rational())


@dataclass(frozen=True)
class ClosedHom:
    domain: ClosedGroup
    codomain: ClosedGroup
    A: MatrixF
    B: MatrixZ

    def __post_init__(self) -> None:
        e, e2 = len(self.domain.E_basis), len(self.codomain.E_basis)
        d, d2 = len(self.domain.D_gens), len(self.codomain.D_gens)
        A = to_field(self.A) if e2 else []
        B = [[_integer(x) for x in row] for row in self.B] if d2 else []
        if len(A) != e2 or any(len(r) != e for r in A):
            raise ValueError(f"A must be {e2}x{e}")
        if len(B) != d2 or any(len(r) != d for r in B):
            raise ValueError(f"B must be {d2}x{d}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def n_E(self) -> int:
        return len(self.domain.E_basis)

    @property
    def n_D(self) -> int:
        return len(self.domain.D_gens)

    def __call__(self, e_coords: Sequence[RealElement | int], d_coords: Sequence[int]) -> Vector:
        """``f(sum x_i E_i + sum p_j D_j)`` as a codomain vector."""
        cod = self.codomain
        a_img = [sum((self.A[r][i] * e_coords[i] for i in range(self.n_E)), RealElement()) for r in range(len(cod.E_basis))]
        b_img = [sum(self.B[r][j] * int(d_coords[j]) for j in range(self.n_D)) for r in range(len(cod.D_gens))]
        return _combine(a_img + b_img, cod.E_basis + cod.D_gens, cod.ambient_dim)


def _column(M: Sequence[Sequence], j: int) -> list:
    return [row[j] for row in M]


def image(f: ClosedHom) -> ClosedGroup:
    cod = f.codomain
    n = cod.ambient_dim
    E_img = [_combine(_column(f.A, i), cod.E_basis, n) for i in range(f.n_E)]
    keep = select_basis_columns(_as_columns(E_img, n)) if E_img else []
    E_new = tuple(E_img[i] for i in keep)
    lattice = hermite_basis([_column(f.B, j) for j in range(f.n_D)]) if f.B else []
    D_new = tuple(_combine(row, cod.D_gens, n) for row in lattice)
    try:
        return ClosedGroup(n, E_new, D_new)
    except ValueError as exc:
        raise DegenerateImage(str(exc)) from exc


def kernel(f: ClosedHom) -> ClosedGroup:
    dom = f.domain
    n = dom.ambient_dim
    E_null = nullspace_field(f.A, f.n_E) if f.n_E else []
    D_null = integer_kernel(f.B, f.n_D) if f.n_D else []
    return ClosedGroup(
        n,
        tuple(_combine(v, dom.E_basis, n) for v in E_null),
        tuple(_combine(v, dom.D_gens, n) for v in D_null),
    )


def is_injective(f: ClosedHom) -> bool:
    a_ok = f.n_E == 0 or rank_field(f.A) == f.n_E
    b_ok = f.n_D == 0 or rank_int(f.B) == f.n_D
    return a_ok and b_ok


def is_surjective(f: ClosedHom) -> bool:
    e2, d2 = len(f.codomain.E_basis), len(f.codomain.D_gens)
    a_ok = e2 == 0 or (f.n_E > 0 and rank_field(f.A) == e2)
    if d2 == 0:
        return a_ok
    # the columns of B must generate all of Z^d2, i.e. their HNF is the identity
    lattice = hermite_basis([_column(f.B, j) for j in range(f.n_D)]) if f.n_D else []
    identity = [[int(i == j) for j in range(d2)] for i in range(d2)]
    return a_ok and lattice == identity


def is_invertible(f: ClosedHom) -> bool:
    return is_injective(f) and is_surjective(f)

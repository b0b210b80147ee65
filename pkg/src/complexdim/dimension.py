"""Complex dimension of the closure of a finitely generated subgroup of R^n.

For ``H = sum_k Z u_k`` the pipeline is:

1. pick a basis of vect(H) among the generators (greedy, left to right) and
   rewrite every generator in that basis, ``u_k = sum_i alpha_{k,i} u_i``;
2. for each non-basis generator choose ``I_k``: coordinates such that
   ``{1} + {alpha_{k,j} : j in I_k}`` is a maximal Q-independent family, and
   write the others as ``alpha_{k,i} = t_{k,i} + sum_j gamma_{i,j} alpha_{k,j}``;
3. clear denominators with ``d_k`` and form the integer columns
   ``u'_{k,j} = d_k e_j + sum_{i not in I_k} d_k gamma_{i,j} e_i``;
4. the closure has complex dimension ``L + i(q - L)`` with ``L`` the rank of
   the matrix ``M_H`` of all ``u'`` columns and ``q = dim vect(H)``.

Everything is computed in span coordinates (length ``q``).  All indices in
this Python API are 0-based; the CLI converts to 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import InternalInvariantViolation, InvalidForcedI
from .exactnum import RealElement
from .qlinalg import (
    MatrixZ,
    hermite_basis,
    rank_field,
    rank_int,
    rational_dependence,
    rref,
    select_basis_columns,
    solve_field,
    surd_coordinates,
)
from .realparse import parse

Vector = tuple[RealElement, ...]


@dataclass(frozen=True, order=True)
class ComplexDim:
    """``p + r i``: p is the largest vector subspace, p + r the span."""

    p: int
    r: int

    @property
    def modulus_squared(self) -> int:
        return self.p * self.p + self.r * self.r

    @property
    def modulus(self) -> float:
        return math.hypot(self.p, self.r)

    def __str__(self) -> str:
        return f"{self.p} + {self.r}i"


@dataclass(frozen=True)
class GroupSpec:
    """The group ``sum_k Z u_k`` in R^n, with optional ``I_k`` overrides."""

    ambient_dim: int
    generators: tuple[Vector, ...]
    forced_I: Mapping[int, frozenset[int]] | None = None

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        gens = tuple(tuple(RealElement.coerce(x) for x in g) for g in self.generators)
        if not gens:
            raise ValueError("at least one generator is required")
        for k, g in enumerate(gens):
            if len(g) != self.ambient_dim:
                raise ValueError(f"generator {k} has length {len(g)}, expected {self.ambient_dim}")
        object.__setattr__(self, "generators", gens)
        if self.forced_I is not None:
            forced = {int(k): frozenset(int(j) for j in v) for k, v in self.forced_I.items()}
            for k in forced:
                if not 0 <= k < len(gens):
                    raise InvalidForcedI(f"forced I refers to unknown generator {k}")
            object.__setattr__(self, "forced_I", forced)

    @classmethod
    def from_strings(
        cls,
        rows: Iterable[Iterable[str]],
        forced_I: Mapping[int, Iterable[int]] | None = None,
    ) -> GroupSpec:
        gens = tuple(tuple(parse(s) for s in row) for row in rows)
        n = len(gens[0]) if gens else 0
        forced = None if forced_I is None else {k: frozenset(v) for k, v in forced_I.items()}
        return cls(n, gens, forced)

    @property
    def m(self) -> int:
        return len(self.generators)

    def matrix(self) -> list[list[RealElement]]:
        """n x m matrix whose columns are the generators."""
        return [[g[i] for g in self.generators] for i in range(self.ambient_dim)]

    def with_generators(self, extra: Iterable[Sequence[RealElement]]) -> GroupSpec:
        return GroupSpec(self.ambient_dim, self.generators + tuple(tuple(v) for v in extra))

    def subset(self, indices: Iterable[int]) -> GroupSpec:
        return GroupSpec(self.ambient_dim, tuple(self.generators[k] for k in indices))

    def radicands(self) -> set[int]:
        return {m for g in self.generators for x in g for m in x.radicands}


@dataclass(frozen=True)
class RationalStructure:
    """Rational dependence data of one coordinate vector alpha_k.

    ``t[i]`` and ``gamma[(i, j)]`` (i dependent, j in I) satisfy
    ``alpha_i = t[i] + sum_j gamma[(i, j)] * alpha_j``.
    """

    I: tuple[int, ...]
    t: Mapping[int, Fraction]
    gamma: Mapping[tuple[int, int], Fraction]


@dataclass
class MHReport:
    basis_indices: tuple[int, ...]
    q: int
    coords: dict[int, Vector]
    I: dict[int, tuple[int, ...]]
    d: dict[int, int]
    t: dict[int, dict[int, Fraction]]
    gamma: dict[int, dict[tuple[int, int], Fraction]]
    m_coeffs: dict[int, dict[tuple[int, int], int]]
    p_coeffs: dict[int, dict[int, int]]
    u_prime: dict[int, dict[int, tuple[int, ...]]]
    columns: list[tuple[int, int]]
    MH: MatrixZ
    rank: int
    heuristic: bool = False

    @property
    def complex_dim(self) -> ComplexDim:
        return ComplexDim(self.rank, self.q - self.rank)

    def column_vectors(self) -> list[tuple[int, ...]]:
        return [self.u_prime[k][j] for k, j in self.columns]


# -- span reduction -------------------------------------------------------------


def span_dim(G: GroupSpec) -> int:
    return rank_field(G.matrix())


def reduce_to_span(G: GroupSpec) -> tuple[tuple[int, ...], list[Vector]]:
    """Basis generators and the coordinates of every generator in that basis.

    One reduced row echelon pass over the generator matrix gives both: the
    pivot columns are the greedy basis and the top rows of every column are
    its coordinates.  Each coordinate vector is re-checked by substitution.
    """
    M = G.matrix()
    R, pivots = rref(M)
    basis = tuple(pivots)
    q = len(basis)
    coords = [tuple(R[i][k] for i in range(q)) for k in range(G.m)]
    for k, g in enumerate(G.generators):
        if k in basis:
            continue
        recon = [sum((c * G.generators[b][l] for c, b in zip(coords[k], basis)), RealElement()) for l in range(G.ambient_dim)]
        if recon != list(g):
            raise InternalInvariantViolation(f"generator {k} is not reproduced by its coordinates")
    return basis, coords


# -- rational structure of one coordinate vector ----------------------------


def _structure_from_choice(alpha: Sequence[RealElement], chosen: Sequence[int]) -> RationalStructure | None:
    """Express every coordinate over ``{1} + alpha[chosen]``; None if impossible."""
    _, vecs = surd_coordinates([RealElement.rational(1), *alpha])
    positions = [0] + [j + 1 for j in chosen]
    order = positions + [p for p in range(len(vecs)) if p not in positions]
    report = rational_dependence([vecs[p] for p in order])
    if report.independent_indices != tuple(range(len(positions))):
        return None
    t: dict[int, Fraction] = {}
    gamma: dict[tuple[int, int], Fraction] = {}
    for pos_in_order, coeffs in report.expressions.items():
        i = order[pos_in_order] - 1
        t[i] = coeffs[0]
        for j, c in zip(chosen, coeffs[1:]):
            gamma[(i, j)] = c
    return RationalStructure(tuple(chosen), t, gamma)


def rational_structure(alpha: Sequence[RealElement], forced: Iterable[int] | None = None) -> RationalStructure:
    """Greedy I (or a validated forced one) plus the t and gamma coefficients."""
    _, vecs = surd_coordinates([RealElement.rational(1), *alpha])
    greedy = rational_dependence(vecs)
    greedy_I = tuple(p - 1 for p in greedy.independent_indices if p > 0)
    if forced is None:
        chosen = greedy_I
    else:
        chosen = tuple(sorted(forced))
        if any(not 0 <= j < len(alpha) for j in chosen):
            raise InvalidForcedI(f"forced I {list(chosen)} has out-of-range coordinates")
        if len(chosen) != len(greedy_I):
            raise InvalidForcedI(
                f"forced I {list(chosen)} has size {len(chosen)}, a maximal choice has size {len(greedy_I)}"
            )
    structure = _structure_from_choice(alpha, chosen)
    if structure is None:
        raise InvalidForcedI(f"1 and the coordinates {list(chosen)} are not rationally independent")
    return structure


def legal_index_sets(alpha: Sequence[RealElement]) -> list[tuple[int, ...]]:
    """Every choice of I that yields a maximal independent family with 1."""
    size = len(rational_structure(alpha).I)
    return [
        c for c in combinations(range(len(alpha)), size) if _structure_from_choice(alpha, c) is not None
    ]


# -- M_H ------------------------------------------------------------------------


def _lcm_denominators(values: Iterable[Fraction]) -> int:
    d = 1
    for v in values:
        d = math.lcm(d, v.denominator)
    return d


def assemble_mh(
    basis_indices: Sequence[int],
    coords: Sequence[Vector],
    structures: Mapping[int, RationalStructure],
    generators: Sequence[Vector] | None = None,
    common_denominator: bool = False,
    heuristic: bool = False,
) -> MHReport:
    """Build the u' columns and M_H from per-generator rational structures.

    The reconstruction identity
    ``d_k alpha_k = sum_{j in I} alpha_{k,j} u'_{k,j} + sum_{i not in I} p_{k,i} e_i``
    is checked exactly for every generator (and, when ``generators`` is
    given, also in ambient coordinates).
    """
    q = len(basis_indices)
    ks = sorted(structures)
    d = {k: _lcm_denominators([*structures[k].t.values(), *structures[k].gamma.values()]) for k in ks}
    if common_denominator and ks:
        common = math.lcm(*d.values())
        d = {k: common for k in ks}
    report = MHReport(
        basis_indices=tuple(basis_indices),
        q=q,
        coords={k: tuple(coords[k]) for k in ks},
        I={}, d=d, t={}, gamma={}, m_coeffs={}, p_coeffs={}, u_prime={},
        columns=[], MH=[[] for _ in range(q)], rank=0, heuristic=heuristic,
    )
    for k in ks:
        s = structures[k]
        dk = d[k]
        outside = [i for i in range(q) if i not in s.I]
        m_k = {(i, j): _as_int(dk * s.gamma.get((i, j), Fraction(0))) for i in outside for j in s.I}
        p_k = {i: _as_int(dk * s.t.get(i, Fraction(0))) for i in outside}
        cols = {}
        for j in s.I:
            col = [0] * q
            col[j] = dk
            for i in outside:
                col[i] = m_k[(i, j)]
            cols[j] = tuple(col)
            report.columns.append((k, j))
        report.I[k] = tuple(s.I)
        report.t[k] = dict(s.t)
        report.gamma[k] = dict(s.gamma)
        report.m_coeffs[k] = m_k
        report.p_coeffs[k] = p_k
        report.u_prime[k] = cols
        if not heuristic:
            _check_reconstruction(k, coords[k], s.I, dk, cols, p_k, basis_indices, generators)
    for k, j in report.columns:
        for i in range(q):
            report.MH[i].append(report.u_prime[k][j][i])
    report.rank = rank_int(report.MH)
    return report


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise InternalInvariantViolation(f"{x} is not integral after clearing denominators")
    return x.numerator


def _check_reconstruction(k, alpha, I, dk, cols, p_k, basis_indices, generators) -> None:
    q = len(alpha)
    lhs = [dk * a for a in alpha]
    rhs = [RealElement() for _ in range(q)]
    for j in I:
        for i in range(q):
            rhs[i] = rhs[i] + alpha[j] * cols[j][i]
    for i, p in p_k.items():
        rhs[i] = rhs[i] + p
    if lhs != rhs:
        raise InternalInvariantViolation(f"reconstruction identity fails for generator {k}")
    if generators is None:
        return
    n = len(generators[k])
    ambient = [RealElement() for _ in range(n)]
    for i, c in enumerate(rhs):
        if c:
            g = generators[basis_indices[i]]
            for l in range(n):
                ambient[l] = ambient[l] + c * g[l]
    if ambient != [dk * x for x in generators[k]]:
        raise InternalInvariantViolation(f"ambient reconstruction fails for generator {k}")


def build_MH(G: GroupSpec, common_denominator: bool = False) -> MHReport:
    basis, coords = reduce_to_span(G)
    forced = G.forced_I or {}
    for k in forced:
        if k in basis:
            raise InvalidForcedI(f"generator {k} is a basis generator; I is only defined for the others")
    structures = {
        k: rational_structure(coords[k], forced.get(k))
        for k in range(G.m)
        if k not in basis
    }
    return assemble_mh(basis, coords, structures, G.generators, common_denominator)


def complex_dimension_closure(G: GroupSpec) -> ComplexDim:
    return build_MH(G).complex_dim


def is_dense_in_span(G: GroupSpec) -> bool:
    report = build_MH(G)
    return report.rank == report.q


def is_dense_in_ambient(G: GroupSpec) -> bool:
    report = build_MH(G)
    return report.rank == report.q == G.ambient_dim


# -- densify ----------------------------------------------------------------------


def _squarefree_from(start: int) -> Iterable[int]:
    from .exactnum import normalize_radicand

    n = start
    while True:
        if normalize_radicand(n)[0] == 1:
            yield n
        n += 1


def densify(G: GroupSpec) -> tuple[Vector, GroupSpec]:
    """A generator u with ``G + Z u`` dense in vect(G).

    ``u = sum_k sqrt(s_k) * (basis generator k)`` with ``s_1 < s_2 < ...`` the
    smallest squarefree integers >= 2 whose surds appear in no input entry.
    """
    basis, _ = reduce_to_span(G)
    if not basis:
        raise ValueError("densify needs a group with nonzero span")
    used = G.radicands()
    fresh = []
    for s in _squarefree_from(2):
        if s not in used:
            fresh.append(s)
            if len(fresh) == len(basis):
                break
    u = [RealElement() for _ in range(G.ambient_dim)]
    for s, k in zip(fresh, basis):
        root = RealElement.sqrt(s)
        u = [a + root * b for a, b in zip(u, G.generators[k])]
    extended = G.with_generators([u])
    got = complex_dimension_closure(extended)
    if got != ComplexDim(len(basis), 0):
        raise InternalInvariantViolation(f"densified group has dimension {got}")
    return tuple(u), extended


# -- closure structure ------------------------------------------------------------


@dataclass
class ClosureStructure:
    """Candidate decomposition closure(H) = F + D in span coordinates.

    ``F_basis`` are integer span-coordinate vectors (a subset of the M_H
    columns), ``discrete_gens`` rational span-coordinate vectors spanning a
    lattice in the complement ``W`` spanned by the unit vectors listed in
    ``complement_indices``.  ``*_ambient`` are the same vectors in R^n.
    """

    F_basis: list[tuple[int, ...]]
    discrete_gens: list[tuple[Fraction, ...]]
    complement_indices: tuple[int, ...]
    F_ambient: list[Vector] = field(default_factory=list)
    discrete_ambient: list[Vector] = field(default_factory=list)
    candidate: bool = True

    @property
    def complex_dim(self) -> ComplexDim:
        return ComplexDim(len(self.F_basis), len(self.discrete_gens))


def _solve_rational_square(cols: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rhs)
    A = [[RealElement.rational(cols[j][i]) for j in range(n)] for i in range(n)]
    return [x.as_rational() for x in solve_field(A, [RealElement.rational(v) for v in rhs])]


def closure_structure(G: GroupSpec) -> ClosureStructure:
    report = build_MH(G)
    q = report.q
    cols = report.column_vectors()
    field_cols = [[RealElement.rational(c[i]) for c in cols] for i in range(q)]
    F = [cols[j] for j in select_basis_columns(field_cols)] if cols else []
    # complete F to a basis of Q^q with unit vectors, greedily
    units = [tuple(int(i == j) for i in range(q)) for j in range(q)]
    full = F + units
    full_mat = [[RealElement.rational(v[i]) for v in full] for i in range(q)]
    chosen = select_basis_columns(full_mat)
    complement = tuple(c - len(F) for c in chosen if c >= len(F))
    square = [list(map(Fraction, v)) for v in F] + [list(map(Fraction, units[c])) for c in complement]
    # rational parts of all generators; basis generators are unit vectors
    _, coords = reduce_to_span(G)
    rational_parts = []
    for k in range(G.m):
        if k in report.basis_indices:
            rational_parts.append([Fraction(int(i == report.basis_indices.index(k))) for i in range(q)])
        else:
            t = report.t[k]
            rational_parts.append([t.get(i, Fraction(0)) for i in range(q)])
    projections = []
    for tau in rational_parts:
        x = _solve_rational_square(square, tau) if q else []
        projections.append(x[len(F):])
    D: list[tuple[Fraction, ...]] = []
    if complement:
        denom = _lcm_denominators(v for p in projections for v in p)
        lattice = hermite_basis([[int(v * denom) for v in p] for p in projections])
        if len(lattice) != len(complement):
            raise InternalInvariantViolation("projected generators do not span the complement")
        for row in lattice:
            vec = [Fraction(0)] * q
            for c, v in zip(complement, row):
                vec[c] = Fraction(v, denom)
            D.append(tuple(vec))
    return ClosureStructure(
        F_basis=F,
        discrete_gens=D,
        complement_indices=complement,
        F_ambient=[span_to_ambient(G, report.basis_indices, v) for v in F],
        discrete_ambient=[span_to_ambient(G, report.basis_indices, v) for v in D],
    )


def span_to_ambient(G: GroupSpec, basis_indices: Sequence[int], v: Sequence[int | Fraction | RealElement]) -> Vector:
    out = [RealElement() for _ in range(G.ambient_dim)]
    for c, k in zip(v, basis_indices):
        if c:
            out = [a + c * b for a, b in zip(out, G.generators[k])]
    return tuple(out)

"""Random instance generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from complexdim import GroupSpec, RealElement
from complexdim.morphism import ClosedGroup, ClosedHom, is_injective, is_invertible, is_surjective

SQUAREFREE_100 = [n for n in range(1, 101) if all(n % (p * p) for p in range(2, 11))]


def rationals(max_num: int = 2**63 - 1, max_den: int = 2**16):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def real_elements(radicands=SQUAREFREE_100, max_terms: int = 4, max_num: int = 2**63 - 1):
    return st.dictionaries(
        st.sampled_from(radicands), rationals(max_num), max_size=max_terms
    ).map(RealElement)


def random_entry(rng: random.Random, radicands=(2, 3, 5, 7), max_num: int = 20) -> RealElement:
    u = rng.random()
    if u < 0.3:
        return RealElement()
    if u < 0.55:
        return RealElement.rational(Fraction(rng.randint(-max_num, max_num), rng.randint(1, 5)))
    terms = {}
    for _ in range(rng.randint(1, 2)):
        terms[rng.choice((1,) + tuple(radicands))] = Fraction(rng.randint(-max_num, max_num) or 1, rng.randint(1, 5))
    return RealElement(terms)


def random_spec(rng: random.Random, max_n: int = 4, max_m: int = 8, **kw) -> GroupSpec:
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    return GroupSpec(n, tuple(tuple(random_entry(rng, **kw) for _ in range(n)) for _ in range(m)))


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> list[list[int]]:
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n == 1:
            P[0][0] = -P[0][0]
            continue
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        P[i] = [a + c * b for a, b in zip(P[i], P[j])]
        if rng.random() < 0.3:
            P[i], P[j] = P[j], P[i]
    return P


def apply_matrix(P, G: GroupSpec) -> GroupSpec:
    n = G.ambient_dim
    gens = tuple(
        tuple(sum((P[i][j] * g[j] for j in range(n)), RealElement()) for i in range(n))
        for g in G.generators
    )
    return GroupSpec(n, gens)


def random_closed_group(rng: random.Random, n: int, e: int, d: int) -> ClosedGroup:
    """E + D in R^n from columns of a random invertible surd matrix."""
    assert e + d <= n
    while True:
        vecs = [tuple(random_entry(rng, max_num=4) for _ in range(n)) for _ in range(e + d)]
        try:
            return ClosedGroup(n, tuple(vecs[:e]), tuple(vecs[e:]))
        except ValueError:
            continue


# Worked examples (0-based generator and coordinate indices).
EXAMPLE1_ROWS = [
    ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"],
    ["1", "sqrt(2)", "1"], ["0", "1", "sqrt(3)"], ["sqrt(2)", "sqrt(3)", "1"], ["1", "sqrt(2)", "sqrt(2)"],
]
EXAMPLE1_FORCED = {3: {1}, 4: {2}, 5: {0, 1}, 6: {1}}
EXAMPLE1_MH = [
    [0, 0, 1, 0, 0],
    [1, 0, 0, 1, 1],
    [0, 1, 0, 0, 1],
]
EXAMPLE2_ROWS = [
    ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"],
    ["1", "sqrt(2)", "1"], ["sqrt(2)", "1", "sqrt(2)"], ["2*sqrt(2)", "2", "3*sqrt(2)"], ["1", "3*sqrt(2)", "sqrt(2)"],
]
EXAMPLE2_FORCED = {3: {1}, 4: {0}, 5: {0}, 6: {1}}
EXAMPLE2_MH = [
    [0, 1, 2, 0],
    [1, 0, 0, 3],
    [0, 1, 3, 1],
]


def example1(forced: bool = True) -> GroupSpec:
    return GroupSpec.from_strings(EXAMPLE1_ROWS, EXAMPLE1_FORCED if forced else None)


def example2(forced: bool = True) -> GroupSpec:
    return GroupSpec.from_strings(EXAMPLE2_ROWS, EXAMPLE2_FORCED if forced else None)


def unit_vectors(n: int) -> list[list[str]]:
    return [["1" if i == j else "0" for i in range(n)] for j in range(n)]


def planted_relation(rng: random.Random, digits: int = 12):
    """Decimal inputs (as strings) satisfying a random relation, and that relation."""
    n = rng.randint(2, 6)
    c = [rng.randint(-100, 100) for _ in range(n)]
    if c[-1] == 0:
        c[-1] = rng.choice([-1, 1]) * rng.randint(1, 100)
    xs = [rng.uniform(-1, 1) for _ in range(n - 1)]
    xs.append(-sum(ci * xi for ci, xi in zip(c, xs)) / c[-1])
    return [f"{x:.{digits}f}" for x in xs], c


def verify_lll(inp, out, transform, delta=Fraction(99, 100)):
    """Independent LLL check: size reduction, Lovasz, and unimodular transform.

    Returns a list of violated conditions (empty when the output is valid).
    """
    problems = []
    n = len(inp)
    # out == transform @ inp with an integer transform of determinant +-1
    prod = [[sum(Fraction(transform[i][k]) * inp[k][j] for k in range(n)) for j in range(len(inp[0]))] for i in range(n)]
    if prod != [[Fraction(x) for x in row] for row in out]:
        problems.append("transform")
    if any(not isinstance(x, int) for row in transform for x in row):
        problems.append("integrality")
    if abs(_det(transform)) != 1:
        problems.append("unimodular")
    # Gram-Schmidt from scratch
    bstar: list[list[Fraction]] = []
    norms: list[Fraction] = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        v = [Fraction(x) for x in out[i]]
        for j in range(i):
            mu[i][j] = sum(a * b for a, b in zip(out[i], bstar[j])) / norms[j]
            v = [a - mu[i][j] * b for a, b in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(sum(a * a for a in v))
    if any(abs(mu[i][j]) > Fraction(1, 2) for i in range(n) for j in range(i)):
        problems.append("size")
    for k in range(1, n):
        if norms[k] < (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            problems.append("lovasz")
            break
    return problems


def _det(M) -> Fraction:
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            f = A[i][c] / A[c][c]
            A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return det


def random_lll_basis(rng: random.Random, max_dim: int = 6, bound: int = 10**6):
    while True:
        n = rng.randint(1, max_dim)
        B = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if _det(B) != 0:
            return B


def random_hom(rng, kind):
    """Hom between random closed groups satisfying ``kind``, by rejection."""
    while True:
        n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
        e1, e2 = rng.randint(0, n1), rng.randint(0, n2)
        d1, d2 = rng.randint(0, n1 - e1), rng.randint(0, n2 - e2)
        if kind == "injective" and (e1 > e2 or d1 > d2):
            continue
        if kind == "surjective" and (e2 > e1 or d2 > d1):
            continue
        if kind == "invertible" and (e1, d1) != (e2, d2):
            continue
        dom = random_closed_group(rng, n1, e1, d1)
        cod = random_closed_group(rng, n2, e2, d2)
        A = [[RealElement.rational(rng.randint(-3, 3)) / rng.randint(1, 3) for _ in range(e1)] for _ in range(e2)]
        B = [[rng.randint(-3, 3) for _ in range(d1)] for _ in range(d2)]
        f = ClosedHom(dom, cod, A, B)
        ok = {"injective": is_injective, "surjective": is_surjective, "invertible": is_invertible}[kind](f)
        if ok:
            return f

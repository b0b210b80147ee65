import math
import random
from fractions import Fraction

import pytest

from complexdim import GroupSpec, build_MH, eval_float
from complexdim.errors import RankDeficient
from complexdim.relation import (
    find_integer_relation,
    float_build_mh,
    lll_reduce,
    lll_reduce_with_transform,
    numeric_rational_structure,
    relation_residual,
)

from helpers import EXAMPLE1_ROWS, planted_relation, random_lll_basis, verify_lll


class TestLLL:
    def test_identity(self):
        I = [[int(i == j) for j in range(3)] for i in range(3)]
        assert lll_reduce(I) == I

    def test_rank_deficient(self):
        with pytest.raises(RankDeficient):
            lll_reduce([[1, 2], [2, 4]])

    def test_bad_delta(self):
        with pytest.raises(ValueError):
            lll_reduce([[1]], delta=0.2)

    def test_rational_input(self):
        res = lll_reduce_with_transform([[Fraction(1, 2), 0], [Fraction(7, 3), 1]])
        assert verify_lll([[Fraction(1, 2), 0], [Fraction(7, 3), 1]], res.basis, res.transform) == []

    def test_random_bases_pass_verifier(self):
        rng = random.Random(2024)
        for _ in range(150):
            B = random_lll_basis(rng)
            res = lll_reduce_with_transform(B)
            assert verify_lll(B, res.basis, res.transform) == [], B

    @staticmethod
    def _gauss_shortest(u, v):
        # Lagrange-Gauss reduction returns an exact shortest vector in 2D
        n = lambda w: w[0] ** 2 + w[1] ** 2
        if n(u) > n(v):
            u, v = v, u
        while True:
            q = round(Fraction(u[0] * v[0] + u[1] * v[1], n(u)))
            v = [v[0] - q * u[0], v[1] - q * u[1]]
            if n(v) >= n(u):
                return n(u)
            u, v = v, u

    def test_shortest_vector_2d(self):
        rng = random.Random(8)
        alpha = 1 / (0.99 - 0.25)
        for trial in range(200):
            if trial % 3 == 0:
                B = [[1, 0], [rng.randint(1, 10**6), 1]]
            else:
                B = [[rng.randint(-1000, 1000) for _ in range(2)] for _ in range(2)]
                if B[0][0] * B[1][1] == B[0][1] * B[1][0]:
                    continue
            red = lll_reduce(B)
            b1 = red[0][0] ** 2 + red[0][1] ** 2
            assert b1 <= alpha * self._gauss_shortest(*B)


class TestFindRelation:
    def test_sqrt2(self):
        res = find_integer_relation([1, "1.41421356237309", "2.41421356237309"], 10)
        assert res.coefficients == (1, 1, -1)

    def test_golden_ratio(self):
        res = find_integer_relation([1, "1.61803398874989", "2.61803398874989"], 10)
        assert res.coefficients == (1, 1, -1)

    def test_not_found(self):
        assert find_integer_relation([1, "1.41421356237310"], 12, max_coeff=100) is None

    def test_preconditions(self):
        with pytest.raises(ValueError):
            find_integer_relation([1], 12)
        with pytest.raises(ValueError):
            find_integer_relation([1, 2], 5)

    def test_normalized(self):
        res = find_integer_relation([-2, 4], 12)
        assert res.coefficients == (2, 1)
        assert math.gcd(*res.coefficients) == 1

    def test_planted(self):
        rng = random.Random(77)
        hits = 0
        for _ in range(200):
            xs, _ = planted_relation(rng)
            res = find_integer_relation(xs, 12)
            hits += res is not None and res.residual <= 1e-8 and relation_residual(xs, res.coefficients) <= 1e-8
        assert hits >= 198


class TestNumericStructure:
    def test_independent_pair(self):
        (st,) = numeric_rational_structure([["1.41421356237310", "1.73205080756888"]])
        assert st.I == (0, 1)

    def test_sqrt2_alone(self):
        (st,) = numeric_rational_structure([["1", "1.41421356237310"]])
        assert st.I == (1,)
        assert st.t == {0: 1}

    def test_all_rational(self):
        sts = numeric_rational_structure([["0.5", "0.25"], ["3", "0"]])
        assert all(st.I == () for st in sts)

    def test_relation_recovered(self):
        (st,) = numeric_rational_structure([["1.41421356237310", "2.82842712474619"]])
        assert st.I == (0,)
        assert st.gamma[(1, 0)] == 2

    def test_example1_matches_exact(self):
        G = GroupSpec.from_strings(EXAMPLE1_ROWS)
        exact = build_MH(G)
        floats = [[float(eval_float(x, 20).value) for x in g] for g in G.generators]
        approx = float_build_mh(floats)
        assert approx.heuristic
        assert approx.I == exact.I
        assert approx.MH == exact.MH

    def test_float_rank_agrees_with_exact(self):
        from helpers import random_entry

        rng = random.Random(31)
        for _ in range(50):
            n = rng.randint(1, 3)
            m = rng.randint(n, n + 3)
            gens = [tuple(int(i == j) for j in range(n)) for i in range(n)]
            gens += [tuple(random_entry(rng, radicands=(2, 3), max_num=5) for _ in range(n)) for _ in range(m - n)]
            G = GroupSpec(n, tuple(gens))
            floats = [[float(eval_float(x, 20).value) for x in g] for g in G.generators]
            assert float_build_mh(floats).rank == build_MH(G).rank

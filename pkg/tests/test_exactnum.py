from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from complexdim import RealElement, eval_float, inverse, is_zero, normalize_radicand, parse
from complexdim.errors import DivisionByZero

from helpers import real_elements

r = RealElement.sqrt
ONE = RealElement.rational(1)


@pytest.mark.parametrize("n, expected", [(8, (2, 2)), (1, (1, 1)), (12, (2, 3)), (72, (6, 2)), (30, (1, 30))])
def test_normalize_radicand(n, expected):
    assert normalize_radicand(n) == expected


def test_normalize_radicand_rejects_zero():
    with pytest.raises(ValueError):
        normalize_radicand(0)


class TestAdd:
    def test_examples(self):
        assert (1 + r(2)) + r(2) == 1 + 2 * r(2)
        assert r(2) + r(3) == RealElement({2: 1, 3: 1})
        a = 3 - Fraction(1, 2) * r(6)
        assert is_zero(a + (-a))

    def test_zero_coefficients_dropped(self):
        assert (r(2) - r(2)).terms == {}


class TestMul:
    def test_examples(self):
        assert r(2) * r(3) == r(6)
        assert r(6) * r(10) == 2 * r(15)
        assert (1 + r(2)) * (1 + r(2)) == 3 + 2 * r(2)

    def test_square_of_root(self):
        assert r(7) * r(7) == 7


class TestInverse:
    def test_examples(self):
        assert inverse(RealElement.rational(2)) == Fraction(1, 2)
        assert inverse(r(2)) == Fraction(1, 2) * r(2)
        assert inverse(1 + r(2)) == -1 + r(2)

    def test_zero(self):
        with pytest.raises(DivisionByZero):
            inverse(RealElement())
        with pytest.raises(ZeroDivisionError):
            ONE / RealElement()

    def test_three_primes(self):
        a = 1 + r(2) + r(3) + r(5) + r(30)
        assert a * inverse(a) == 1

    @settings(max_examples=300)
    @given(real_elements(radicands=[1, 2, 3, 5, 6, 10, 15, 30], max_num=10**6).filter(bool))
    def test_mul_inverse_is_one(self, a):
        assert a * inverse(a) == ONE


class TestIsZero:
    def test_examples(self):
        assert is_zero(RealElement())
        assert is_zero(r(2) - r(2))
        assert is_zero(1 - r(2) + r(2) - 1)
        assert not is_zero(r(2))


class TestEvalFloat:
    def test_sqrt2(self):
        a = eval_float(r(2), 10)
        assert abs(a.value - Decimal("1.4142135624")) <= Decimal("1e-10")
        assert a.error < Decimal("1e-10")

    def test_zero_exact(self):
        a = eval_float(RealElement(), 7)
        assert a.value == 0 and a.error == 0

    def test_one_plus_sqrt2(self):
        a = eval_float(1 + r(2), 5)
        assert abs(a.value - Decimal("2.41421")) < Decimal("1e-5")

    @given(real_elements(radicands=[1, 2, 3, 5, 7, 11], max_num=1000), st.integers(1, 30))
    def test_error_bound(self, a, digits):
        # oracle: 60-digit evaluation
        ref = eval_float(a, 60)
        got = eval_float(a, digits)
        assert abs(got.value - ref.value) < Decimal(10) ** -digits

    @settings(max_examples=200)
    @given(real_elements(radicands=[1, 2, 3, 5, 7], max_num=1000), real_elements(radicands=[1, 2, 3, 5, 7], max_num=1000))
    def test_product_within_bounds(self, a, b):
        digits = 20
        ea, eb, eab = eval_float(a, digits), eval_float(b, digits), eval_float(a * b, digits)
        bound = eab.error + abs(ea.value) * eb.error + abs(eb.value) * ea.error + ea.error * eb.error
        assert abs(eab.value - ea.value * eb.value) <= bound + Decimal(10) ** -(digits + 5)


class TestRingLaws:
    elems = real_elements(radicands=[1] + list(range(2, 101)), max_terms=3)

    @settings(max_examples=1000)
    @given(elems, elems, elems)
    def test_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(elems)
    def test_identities(self, a):
        assert a + 0 == a
        assert a * 1 == a
        assert is_zero(a * 0)


class TestCanonicalForm:
    def test_equal_expressions(self):
        assert parse("sqrt(8)") == parse("2*sqrt(2)") == parse("sqrt(2) + sqrt(2)")
        assert parse("sqrt(12) * sqrt(3)") == RealElement.rational(6)

    def test_constructor_normalizes(self):
        assert RealElement({8: 1, 2: -2}) == 0
        assert RealElement({18: Fraction(1, 3)}) == r(2)

    def test_hash_consistency(self):
        assert hash(RealElement.rational(3)) == hash(3)
        assert len({r(2) + r(3), r(3) + r(2)}) == 1

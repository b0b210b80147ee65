from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from complexdim import RealElement, parse
from complexdim.errors import DivisionByZero, DomainError, ExprSyntaxError, InputError
from complexdim.realparse import render

from helpers import real_elements

r = RealElement.sqrt


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1 + sqrt(2)", 1 + r(2)),
        ("sqrt(8)", 2 * r(2)),
        ("sqrt(2)*sqrt(2) - 2", RealElement()),
        ("3/2*sqrt(3) + 1/2", Fraction(1, 2) + Fraction(3, 2) * r(3)),
        ("−sqrt(2)", -r(2)),
        ("-2*-3", RealElement.rational(6)),
        ("(1 + sqrt(2)) * (1 - sqrt(2))", RealElement.rational(-1)),
        ("  7  ", RealElement.rational(7)),
        ("1 - 2 - 3", RealElement.rational(-4)),
    ],
)
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize(
    "text, exc, position",
    [
        ("sqrt(-1)", DomainError, 5),
        ("sqrt(0)", DomainError, 5),
        ("1/0", DivisionByZero, 2),
        ("1 +", ExprSyntaxError, 3),
        ("sqrt 2", ExprSyntaxError, 5),
        ("x", ExprSyntaxError, 0),
        ("1 $ 2", ExprSyntaxError, 2),
        ("(1", ExprSyntaxError, 2),
        ("1/2/3", ExprSyntaxError, 3),
    ],
)
def test_errors(text, exc, position):
    with pytest.raises(exc) as info:
        parse(text)
    assert info.value.position == position


def test_syntax_error_lists_expected_tokens():
    with pytest.raises(ExprSyntaxError) as info:
        parse("1 + *")
    assert "'sqrt'" in info.value.expected


@given(real_elements(radicands=[1, 2, 3, 5, 6, 7, 10, 30], max_num=10**12))
def test_round_trip(a):
    assert parse(render(a)) == a


_ints = st.integers(0, 50).map(str)
_atoms = st.one_of(
    _ints,
    st.tuples(_ints, st.integers(1, 9)).map(lambda t: f"{t[0]}/{t[1]}"),
    st.integers(1, 30).map(lambda n: f"sqrt({n})"),
)
_exprs = st.recursive(
    _atoms,
    lambda inner: st.one_of(
        st.tuples(inner, st.sampled_from(["+", "-", "*"]), inner).map(lambda t: f"{t[0]} {t[1]} {t[2]}"),
        inner.map(lambda e: f"({e})"),
        inner.map(lambda e: f"-{e}"),
    ),
    max_leaves=8,
)


@given(_exprs)
def test_grammar_strings_parse(text):
    parse(text)


@given(_exprs, st.data())
def test_corrupted_strings_raise_defined_errors(text, data):
    i = data.draw(st.integers(0, len(text)))
    junk = data.draw(st.sampled_from(["(", ")", "*", "/", "$", "sqrt", "/0", "--", ""]))
    corrupted = text[:i] + junk + text[i:]
    try:
        parse(corrupted)
    except InputError:
        pass

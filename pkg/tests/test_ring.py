"""Polynomial, series and binomial kernel tests."""

import pytest
from hypothesis import given, strategies as st

from hankelshift import (
    MINUS_INFINITY,
    NonExactDivision,
    NonUnitConstantTerm,
    Poly,
    Series,
    binomial,
    choose2_parity,
    sign_choose2,
)
from hankelshift.sequences import Catalan, CentralBinomial, catalan_number

from anchors import CATALAN

small_ints = st.integers(min_value=-50, max_value=50)
polys = st.lists(small_ints, max_size=8).map(Poly)


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(6, 3) == 20
    assert binomial(3, -1) == 0
    assert binomial(2, 5) == 0
    assert binomial(0, 0) == 1
    # generalized negative upper index, needed for the Narayana formula at n=0
    assert binomial(-1, 0) == 1
    assert binomial(-1, 3) == -1
    assert binomial(-2, 2) == 3


def test_sign_choose2():
    for n in range(0, 30):
        parity = (n * (n - 1) // 2) % 2
        assert choose2_parity(n) == parity
        assert sign_choose2(n) == (-1) ** parity


def test_poly_add_examples():
    assert Poly((1, 1)) + Poly((1, -1)) == Poly.const(2)
    p = Poly((3, 0, 7))
    assert Poly() + p == p
    assert Poly((1, 3, 1)) + Poly((0, 0, 1)) == Poly((1, 3, 2))


def test_poly_mul_examples():
    one_plus_t = Poly((1, 1))
    assert one_plus_t * one_plus_t == Poly((1, 2, 1))
    assert Poly((4, 2)) * Poly() == Poly()
    assert one_plus_t * Poly((1, 0, 1)) == Poly((1, 1, 1, 1))


def test_poly_exact_div_examples():
    assert Poly((1, 3, 3, 1)).exact_div(Poly((1, 1))) == Poly((1, 2, 1))
    assert Poly().exact_div(Poly((1, 1))) == Poly()
    assert Poly((0, 1, 6, 6, 1)).exact_div(Poly((0, 1))) == Poly((1, 6, 6, 1))


def test_poly_exact_div_rejects_inexact():
    with pytest.raises(NonExactDivision):
        Poly((1, 1)).exact_div(Poly((0, 1)))
    with pytest.raises(NonExactDivision):
        Poly((2, 1)).exact_div(Poly((0, 2)))
    with pytest.raises(NonExactDivision):
        Poly((1,)).exact_div(Poly())


def test_degree_sentinel():
    assert Poly().degree is MINUS_INFINITY
    assert Poly().degree < 0
    assert Poly().degree < -10 ** 9
    assert not Poly().degree >= 0
    assert Poly((0, 1)).degree == 1


@given(polys, polys)
def test_poly_mul_div_round_trip(a, b):
    if b.is_zero:
        return
    assert (a * b).exact_div(b) == a


@given(polys, polys)
def test_poly_degree_additive(a, b):
    if a.is_zero or b.is_zero:
        assert (a * b).is_zero
    else:
        assert (a * b).degree == a.degree + b.degree


@given(polys)
def test_poly_str_parse_round_trip(p):
    assert Poly.parse(str(p)) == p


def test_poly_canonical_strings():
    assert str(Poly()) == "0"
    assert str(Poly.const(-3)) == "-3"
    assert str(Poly((1, 3, 1))) == "1+3*t+t^2"
    assert str(Poly((0, 0, 0, -4, -4, -4))) == "-4*t^3-4*t^4-4*t^5"
    assert str(Poly((0, -1, -1))) == "-t-t^2"
    assert str(Poly((1, -1))) == "1-t"


def test_series_mul_catalan_square():
    cat = Catalan().series(10)
    square = cat * cat
    assert [square[n].constant for n in range(9)] == CATALAN[1:10]


def test_series_mul_identity():
    cat = Catalan().series(12)
    assert cat * Series.one(12) == cat


def test_series_mul_central_binomial_square():
    cb = CentralBinomial().series(32)
    lhs = Series([Poly.const(1), Poly.const(-4)], order=32) * (cb * cb)
    assert lhs == Series.one(32)


def test_series_reciprocal_of_catalan():
    rec = Catalan().series(10).reciprocal()
    assert [rec[n].constant for n in range(7)] == [1, -1, -1, -2, -5, -14, -42]


def test_series_reciprocal_of_one():
    assert Series.one(6).reciprocal() == Series.one(6)


def test_series_reciprocal_requires_unit():
    with pytest.raises(NonUnitConstantTerm):
        CentralBinomial().series(4).scale(2).reciprocal()


def test_series_reciprocal_identity_for_families():
    from hankelshift.sequences import ConvCatalan, MNumbers, NarayanaB, NarayanaC

    families = (
        [Catalan(), CentralBinomial(), NarayanaC(), NarayanaB()]
        + [MNumbers(b) for b in (-2, -1, 0, 1, 2, 3)]
        + [ConvCatalan(k) for k in (2, 3, 4)]
    )
    for family in families:
        series = family.series(64)
        assert series * series.reciprocal() == Series.one(64), family.label


def test_series_pow_examples():
    cat = Catalan().series(8)
    assert [cat.pow(3)[n].constant for n in range(5)] == [1, 3, 9, 28, 90]
    assert [cat.pow(4)[n].constant for n in range(5)] == [1, 4, 14, 48, 165]
    assert cat.pow(1) == cat
    with pytest.raises(ValueError):
        cat.pow(0)


def test_series_pow_coefficient_formula():
    cat = Catalan().series(41)
    for k in range(1, 9):
        powk = cat.pow(k)
        for n in range(41):
            assert powk[n] == binomial(2 * n + k - 1, n) - binomial(2 * n + k - 1, n - 1)


def test_series_order_is_min_of_operands():
    a = Catalan().series(10)
    b = Catalan().series(6)
    assert (a * b).order == 6
    assert (a + b).order == 6
    assert (a - b).order == 6


def test_series_constant_term_and_truncate():
    cat = Catalan().series(6)
    assert cat.constant_term == Poly.const(1)
    assert cat.truncate(3).coeffs == cat.coeffs[:3]
    with pytest.raises(ValueError):
        cat.truncate(7)


def test_catalan_number_against_list():
    assert [catalan_number(n) for n in range(len(CATALAN))] == CATALAN

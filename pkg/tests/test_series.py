from fractions import Fraction
import pytest
from hypothesis import given
from hypothesis import strategies as st
from core.errors import (
    NotInvertibleError,
    OrderMismatchError,
    OrderOutOfRangeError,
    RingMismatchError,
    SeriesError,
)
from models.series import QQ, Poly, TruncatedSeries, poly_ring
from tests.strategies import poly_series, rational_series

Y = poly_ring("y", 4)


def test_poly_arithmetic():
    y = Y.generator()
    square = (1 - y) ** 2
    assert square.coeffs == (1, -2, 1)
    assert str(square) == "1 - 2*y + y^2"
    assert str(1 - Y.generator()) == "1 - y"
    assert (y ** 5).is_zero()
    assert y * Fraction(1, 2) == Poly([0, Fraction(1, 2)], Y)


def test_poly_inverse():
    y = Y.generator()
    inverse = (1 - y).inverse()
    assert inverse.coeffs == (1, 1, 1, 1, 1)
    assert (1 - y) * inverse == 1
    with pytest.raises(NotInvertibleError):
        y.inverse()


def test_poly_ring_mismatch():
    with pytest.raises(RingMismatchError):
        Y.generator() + poly_ring("u", 4).generator()
    with pytest.raises(RingMismatchError):
        QQ.generator()


def test_series_basics():
    s = TruncatedSeries(5, [1, 2, 3])
    assert s.coeffs == (1, 2, 3, 0, 0, 0)
    assert s[2] == 3
    with pytest.raises(OrderOutOfRangeError):
        s.coeff(6)
    assert str(TruncatedSeries(3, [1, 1])) == "1 + q"
    assert str(TruncatedSeries(3, [1, -1])) == "1 - q"
    assert str(TruncatedSeries(3, [0, -1, 0, -2])) == "-q - 2·q^3"
    assert str(TruncatedSeries(2, [Fraction(-1, 2), 0, 1])) == "-1/2 + q^2"
    assert TruncatedSeries.monomial(4, 2, 3).coeffs == (0, 0, 3, 0, 0)


def test_series_product_and_inverse():
    one_minus_q = TruncatedSeries(6, [1, -1])
    geometric = one_minus_q.inverse()
    assert geometric.coeffs == (1,) * 7
    assert one_minus_q * geometric == TruncatedSeries.one(6)
    assert (one_minus_q ** 2).coeffs[:3] == (1, -2, 1)
    assert (geometric / 2)[3] == Fraction(1, 2)


def test_series_errors():
    with pytest.raises(OrderMismatchError):
        TruncatedSeries(3, [1]) + TruncatedSeries(4, [1])
    with pytest.raises(RingMismatchError):
        TruncatedSeries(3, [1]) + TruncatedSeries(3, [1], Y)
    with pytest.raises(NotInvertibleError):
        TruncatedSeries(3, [0, 1]).inverse()
    with pytest.raises(NotInvertibleError):
        TruncatedSeries(3, [1]) / 0
    with pytest.raises(SeriesError):
        TruncatedSeries(-1)
    with pytest.raises(SeriesError):
        TruncatedSeries(3, [0.5])


def test_series_over_poly_ring():
    y = Y.generator()
    s = TruncatedSeries(3, [1, y, y * y], Y)
    t = TruncatedSeries(3, [1, -y], Y)
    product = s * t
    assert product[1] == 0
    assert product[2] == 0
    assert product[3] == -(y ** 3)
    assert (s / Poly([1, 1], Y))[0] == Poly([1, -1, 1, -1, 1], Y)


def test_promote_and_truncate():
    s = TruncatedSeries(4, [1, 2, 3, 4, 5])
    promoted = s.promote(Y)
    assert promoted.ring == Y
    assert promoted[3] == 4
    assert s.truncate(2).coeffs == (1, 2, 3)
    with pytest.raises(OrderOutOfRangeError):
        s.truncate(5)
    smaller = TruncatedSeries(1, [Y.generator() ** 3], Y).truncate_degree(2)
    assert smaller[0] == 0
    assert smaller.ring == poly_ring("y", 2)


def test_first_difference():
    a = TruncatedSeries(5, [1, 1, 2])
    b = TruncatedSeries(5, [1, 1, 3])
    assert a.first_difference(b) == 2
    assert a.first_difference(a) is None
    assert TruncatedSeries(5, [0, 0, 7]).valuation() == 2


def test_series_str_over_poly_ring():
    y = Y.generator()
    assert str(TruncatedSeries(2, [1, -y, 1 - y], Y)) == "1 - y·q + (1 - y)·q^2"


@given(rational_series(), rational_series(), rational_series())
def test_ring_laws_over_rationals(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a


@given(poly_series(Y, order=4), poly_series(Y, order=4), poly_series(Y, order=4))
def test_ring_laws_over_poly_ring(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(rational_series(), st.integers(0, 4), st.integers(0, 4))
def test_integer_powers_add(s, a, b):
    assert s ** a * s ** b == s ** (a + b)


@given(poly_series(Y), poly_series(Y), st.integers(0, 3))
def test_degree_cap_commutes_with_product(a, b, cap):
    direct = a.truncate_degree(cap) * b.truncate_degree(cap)
    assert (a * b).truncate_degree(cap) == direct


@given(poly_series(Y, unit=True), st.integers(0, 3))
def test_degree_cap_commutes_with_inverse(s, cap):
    assert s.inverse().truncate_degree(cap) == s.truncate_degree(cap).inverse()

from fractions import Fraction
import pytest
from hypothesis import given
from hypothesis import strategies as st
from core.errors import NotInvertibleError, SeriesError
from models.series import QQ, TruncatedSeries, poly_ring
from services.enumeration import partition_count
from services.qseries import (
    counts_series,
    euler,
    exp_series,
    geometric,
    log_series,
    pochhammer_finite,
    pochhammer_inf,
    pochhammer_product,
    pow_exponent,
    substitute_monomial,
    substitute_power,
)
from tests.strategies import rational_series

ORDER = 16


def test_euler_matches_pentagonal_numbers():
    expected = [0] * (ORDER + 1)
    for k in range(-4, 5):
        e = k * (3 * k - 1) // 2
        if e <= ORDER:
            expected[e] = (-1) ** (k % 2)
    assert euler(ORDER).coeffs == tuple(expected)


def test_inverse_euler_counts_partitions():
    inverse = euler(ORDER).inverse()
    assert list(inverse.coeffs) == [partition_count(n) for n in range(ORDER + 1)]


def test_pochhammer_distinct_parts():
    # (-q;q)_inf counts partitions into distinct parts
    distinct = pochhammer_inf(-1, 1, 1, 10)
    assert list(distinct.coeffs) == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]


def test_pochhammer_finite_and_product():
    assert pochhammer_finite(1, 1, 1, 2, 5).coeffs == (1, -1, -1, 1, 0, 0)
    assert pochhammer_finite(1, 2, 3, 0, 4) == TruncatedSeries.one(4)
    both = pochhammer_product([(1, 1), (-1, 1)], 1, 8)
    assert both == pochhammer_inf(1, 2, 2, 8)


def test_pochhammer_rejects_bad_exponents():
    with pytest.raises(SeriesError):
        pochhammer_inf(1, 0, 1, 4)
    with pytest.raises(SeriesError):
        pochhammer_inf(1, 1, 0, 4)
    with pytest.raises(SeriesError):
        pochhammer_finite(1, 1, 1, -1, 4)


def test_geometric():
    assert geometric(3, 7).coeffs == (1, 0, 0, 1, 0, 0, 1, 0)
    assert geometric(2, 6) * TruncatedSeries(6, [1, 0, -1]) == TruncatedSeries.one(6)
    with pytest.raises(NotInvertibleError):
        geometric(0, 4)


def test_substitute_power_reaches_higher_order():
    source = geometric(1, 3)
    assert substitute_power(source, 2).coeffs == (1, 0, 1, 0)
    assert substitute_power(source, 3, order=9) == geometric(3, 9)


def test_substitute_monomial():
    x_ring = poly_ring("x", 6)
    x = x_ring.generator()
    image = substitute_monomial(geometric(1, 4), 2, x_ring, 2, order=8)
    assert image[0] == 1
    assert image[1] == 0
    assert image[2] == x ** 2
    assert image[6] == x ** 6
    assert image[8] == 0
    with pytest.raises(SeriesError):
        substitute_monomial(geometric(1, 4), 2, QQ, 1)


def test_log_exp_inverse_pair():
    s = TruncatedSeries(8, [1, 2, Fraction(1, 3), -1])
    assert exp_series(log_series(s)) == s
    with pytest.raises(SeriesError):
        log_series(TruncatedSeries(4, [2, 1]))
    with pytest.raises(SeriesError):
        exp_series(TruncatedSeries(4, [1, 1]))


def test_rational_power():
    square_root = pow_exponent(geometric(1, 10), Fraction(1, 2))
    assert square_root * square_root == geometric(1, 10)
    assert pow_exponent(euler(10), -1) == euler(10).inverse()


def test_polynomial_exponent():
    u_ring = poly_ring("u", 3)
    u = u_ring.generator()
    # (1 - q)^(-u) has q^1 coefficient u
    power = pow_exponent(TruncatedSeries(5, [1, -1]), -u)
    assert power.ring == u_ring
    assert power[1] == u
    assert power[2] == (u + u * u) / 2


def test_counts_series():
    assert counts_series([1, 1, 2, 3, 5, 7], 3).coeffs == (1, 1, 2, 3)


exponents = st.fractions(min_value=-2, max_value=2, max_denominator=3)


@given(rational_series(order=5, constant=1), exponents, exponents)
def test_rational_powers_add(s, a, b):
    assert pow_exponent(s, a) * pow_exponent(s, b) == pow_exponent(s, a + b)


@given(rational_series(order=5, constant=1), st.integers(0, 4))
def test_rational_power_matches_integer_power(s, a):
    assert pow_exponent(s, a) == s ** a

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union
from core.errors import NotInvertibleError, SeriesError
from models.series import QQ, CoefficientRing, Coefficient, Poly, TruncatedSeries

logger = logging.getLogger(__name__)

Exponent = Union[int, Fraction, Poly]


def _ring_of(c, ring: Optional[CoefficientRing]) -> CoefficientRing:
    if ring is not None:
        return ring
    return c.ring if isinstance(c, Poly) else QQ


def _times_binomial(coeffs: List, c, e: int):
    # In place: coeffs <- coeffs * (1 - c q^e)
    for n in range(len(coeffs) - 1, e - 1, -1):
        if coeffs[n - e] != 0:
            coeffs[n] = coeffs[n] - c * coeffs[n - e]


def pochhammer_inf(c, a: int, m: int, order: int, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """
    (c q^a; q^m)_inf = prod_{j >= 0} (1 - c q^(a + jm)), keeping the factors with a + jm <= order.
    """
    if a < 1:
        raise SeriesError(f"Pochhammer start exponent must be positive, got {a}")
    if m < 1:
        raise SeriesError(f"Pochhammer step must be positive, got {m}")
    ring = _ring_of(c, ring)
    c = ring.coerce(c)
    coeffs = list(TruncatedSeries.one(order, ring).coeffs)
    for e in range(a, order + 1, m):
        _times_binomial(coeffs, c, e)
    return TruncatedSeries(order, coeffs, ring)


def pochhammer_finite(c, a: int, m: int, count: int, order: int,
                      ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """(c q^a; q^m)_count, the first count factors of pochhammer_inf"""
    if count < 0:
        raise SeriesError(f"Factor count must be nonnegative, got {count}")
    ring = _ring_of(c, ring)
    c = ring.coerce(c)
    coeffs = list(TruncatedSeries.one(order, ring).coeffs)
    for j in range(count):
        e = a + j * m
        if e > order:
            break
        if e < 1:
            raise SeriesError(f"Factor exponent must be positive, got {e}")
        _times_binomial(coeffs, c, e)
    return TruncatedSeries(order, coeffs, ring)


def pochhammer_product(terms: Iterable[Tuple[Coefficient, int]], m: int, order: int,
                       ring: CoefficientRing = QQ) -> TruncatedSeries:
    """(c_1 q^a_1, c_2 q^a_2, ...; q^m)_inf"""
    result = TruncatedSeries.one(order, ring)
    for c, a in terms:
        result = result * pochhammer_inf(c, a, m, order, ring)
    return result


def euler(order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """(q;q)_inf"""
    return pochhammer_inf(1, 1, 1, order, ring)


def geometric(a: int, order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """1/(1 - q^a)"""
    if a < 1:
        raise NotInvertibleError(f"1/(1 - q^{a}) has no power series expansion")
    coeffs = [ring.one() if n % a == 0 else ring.zero() for n in range(order + 1)]
    return TruncatedSeries(order, coeffs, ring)


def substitute_power(s: TruncatedSeries, k: int, order: Optional[int] = None) -> TruncatedSeries:
    """
    q -> q^k. The result has the given order (default: the input's); a series known to
    order N/k is enough for a result at order N.
    """
    if k < 1:
        raise SeriesError(f"Substitution power must be positive, got {k}")
    order = s.order if order is None else order
    coeffs = [s.ring.zero()] * (order + 1)
    for n in range(min(s.order, order // k) + 1):
        coeffs[n * k] = s.coeffs[n]
    return TruncatedSeries(order, coeffs, s.ring)


def substitute_monomial(s: TruncatedSeries, k: int, ring: CoefficientRing, v_power: int,
                        order: Optional[int] = None) -> TruncatedSeries:
    """
    q -> v^v_power * q^k, landing in the polynomial ring (e.g. f(x^2 q^(2t))).
    """
    if not ring.is_polynomial:
        raise SeriesError("Monomial substitution needs a polynomial target ring")
    if k < 1 or v_power < 0:
        raise SeriesError(f"Invalid substitution q -> v^{v_power} q^{k}")
    source = s.promote(ring) if not s.ring.is_polynomial else s
    if source.ring != ring:
        raise SeriesError(f"Cannot substitute a series over {s.ring} into {ring}")
    order = s.order if order is None else order
    v = ring.generator()
    coeffs = [ring.zero()] * (order + 1)
    for n in range(min(s.order, order // k) + 1):
        coeffs[n * k] = source.coeffs[n] * v ** (v_power * n)
    return TruncatedSeries(order, coeffs, ring)


def _constant_is_one(s: TruncatedSeries) -> bool:
    return s.coeffs[0] == 1


def log_series(s: TruncatedSeries) -> TruncatedSeries:
    """
    Formal logarithm of a series with constant term 1, from n*L_n = n*s_n - sum k*L_k*s_(n-k).
    """
    if not _constant_is_one(s):
        raise SeriesError("log needs constant term 1")
    logs = [s.ring.zero()]
    for n in range(1, s.order + 1):
        total = s.coeffs[n] * n
        for k in range(1, n):
            if logs[k] != 0 and s.coeffs[n - k] != 0:
                total = total - logs[k] * s.coeffs[n - k] * k
        logs.append(total / n)
    return TruncatedSeries(s.order, logs, s.ring)


def exp_series(s: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with constant term 0, from n*E_n = sum k*a_k*E_(n-k)"""
    if s.coeffs[0] != 0:
        raise SeriesError("exp needs constant term 0")
    exps = [s.ring.one()]
    for n in range(1, s.order + 1):
        total = s.ring.zero()
        for k in range(1, n + 1):
            if s.coeffs[k] != 0:
                total = total + s.coeffs[k] * exps[n - k] * k
        exps.append(total / n)
    return TruncatedSeries(s.order, exps, s.ring)


def pow_exponent(s: TruncatedSeries, w: Exponent) -> TruncatedSeries:
    """s^w = exp(w log s) for rational w or w in QQ[v]; s must start with 1"""
    if not _constant_is_one(s):
        raise SeriesError("Powers with general exponents need constant term 1")
    if isinstance(w, Poly) and not s.ring.is_polynomial:
        s = s.promote(w.ring)
    return exp_series(log_series(s) * w)


def coeff(s: TruncatedSeries, n: int) -> Coefficient:
    return s.coeff(n)


def counts_series(counts: Sequence[int], order: int) -> TruncatedSeries:
    """Series whose q^n coefficient is counts[n]"""
    return TruncatedSeries(order, [Fraction(c) for c in counts[: order + 1]], QQ)

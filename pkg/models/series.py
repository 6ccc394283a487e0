from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union
from core.errors import (
    NotInvertibleError,
    OrderMismatchError,
    OrderOutOfRangeError,
    RingMismatchError,
    SeriesError,
)

Scalar = Union[int, Fraction]


def _fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise SeriesError(f"Expected an exact rational, got {value!r}")


def format_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class CoefficientRing:
    """
    Either QQ (variable is None) or QQ[v]/(v^(cap+1)) for one named formal variable.
    """

    variable: Optional[str] = None
    cap: Optional[int] = None

    def __post_init__(self):
        if (self.variable is None) != (self.cap is None):
            raise SeriesError("Polynomial rings need both a variable name and a degree cap")
        if self.cap is not None and self.cap < 0:
            raise SeriesError(f"Degree cap must be nonnegative, got {self.cap}")

    @property
    def is_polynomial(self) -> bool:
        return self.variable is not None

    def zero(self):
        return Poly((), self) if self.is_polynomial else Fraction(0)

    def one(self):
        return Poly((Fraction(1),), self) if self.is_polynomial else Fraction(1)

    def generator(self) -> "Poly":
        if not self.is_polynomial:
            raise RingMismatchError("QQ has no formal variable")
        return Poly((Fraction(0), Fraction(1)), self)

    def coerce(self, value):
        """Bring a scalar or a polynomial of this ring into canonical coefficient form"""
        if isinstance(value, Poly):
            if value.ring != self:
                raise RingMismatchError(f"Coefficient from {value.ring} used in {self}")
            return value
        value = _fraction(value)
        return Poly((value,), self) if self.is_polynomial else value

    def __str__(self) -> str:
        return "QQ" if not self.is_polynomial else f"QQ[{self.variable}]/{self.variable}^{self.cap + 1}"


QQ = CoefficientRing()


def poly_ring(variable: str, cap: int) -> CoefficientRing:
    return CoefficientRing(variable, cap)


class Poly:
    """Polynomial in the ring's variable with exact rational coefficients, truncated at the ring cap"""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable[Scalar], ring: CoefficientRing):
        if not ring.is_polynomial:
            raise RingMismatchError("Poly needs a polynomial ring")
        values = [_fraction(c) for c in coeffs][: ring.cap + 1]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def _lift(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(f"Cannot combine {self.ring} with {other.ring}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly((other,), self.ring)
        return None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly((self.coefficient(k) + other.coefficient(k) for k in range(size)), self.ring)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly((-c for c in self.coeffs), self.ring)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        cap = self.ring.cap
        out = [Fraction(0)] * min(cap + 1, max(len(self.coeffs) + len(other.coeffs) - 1, 0))
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > cap:
                    break
                out[i + j] += a * b
        return Poly(out, self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise NotInvertibleError("Division by zero")
            return Poly((c / other for c in self.coeffs), self.ring)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise SeriesError(f"Poly powers must be nonnegative integers, got {exponent!r}")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "Poly":
        c0 = self.constant
        if c0 == 0:
            raise NotInvertibleError(f"Polynomial {self} has zero constant term")
        cap = self.ring.cap
        inv = [Fraction(0)] * (cap + 1)
        inv[0] = 1 / c0
        for n in range(1, cap + 1):
            total = sum((self.coefficient(k) * inv[n - k] for k in range(1, n + 1)), Fraction(0))
            inv[n] = -total / c0
        return Poly(inv, self.ring)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.degree <= 0 and self.constant == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        var = self.ring.variable
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            monomial = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not monomial:
                body = format_fraction(abs(c))
            elif abs(c) == 1:
                body = monomial
            else:
                body = f"{format_fraction(abs(c))}*{monomial}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> List[str]:
        return [format_fraction(c) for c in self.coeffs]


Coefficient = Union[Fraction, Poly]


def coefficient_to_json(value: Coefficient) -> Any:
    if isinstance(value, Poly):
        return value.to_json()
    return format_fraction(value)


def coefficient_to_str(value: Coefficient) -> str:
    return str(value) if isinstance(value, Poly) else format_fraction(value)


class TruncatedSeries:
    """
    Power series in q kept up to q^order inclusive, with coefficients in a fixed ring.

    Every operation returns a new series truncated at the same order; both operands of a
    binary operation must share order and ring.
    """

    __slots__ = ("order", "coeffs", "ring")

    def __init__(self, order: int, coeffs: Sequence[Any] = (), ring: CoefficientRing = QQ):
        if order < 0:
            raise SeriesError(f"Series order must be nonnegative, got {order}")
        values = [ring.coerce(c) for c in list(coeffs)[: order + 1]]
        values.extend(ring.zero() for _ in range(order + 1 - len(values)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(values))
        object.__setattr__(self, "ring", ring)

    @classmethod
    def zero(cls, order: int, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        return cls(order, (), ring)

    @classmethod
    def one(cls, order: int, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        return cls(order, (ring.one(),), ring)

    @classmethod
    def monomial(cls, order: int, power: int, value=1, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        coeffs = [ring.zero()] * (order + 1)
        if 0 <= power <= order:
            coeffs[power] = ring.coerce(value)
        return cls(order, coeffs, ring)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def _check(self, other: "TruncatedSeries"):
        if other.ring != self.ring:
            raise RingMismatchError(f"Cannot combine series over {self.ring} and {other.ring}")
        if other.order != self.order:
            raise OrderMismatchError(f"Cannot combine series of order {self.order} and {other.order}")

    def _scalar(self, value):
        if isinstance(value, Poly) or (isinstance(value, (int, Fraction)) and not isinstance(value, bool)):
            return self.ring.coerce(value)
        return None

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise OrderOutOfRangeError(f"Coefficient {n} is outside 0..{self.order}")
        return self.coeffs[n]

    def __getitem__(self, n: int):
        return self.coeff(n)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)), self.ring)
        value = self._scalar(other)
        if value is None:
            return NotImplemented
        return TruncatedSeries(self.order, (self.coeffs[0] + value,) + self.coeffs[1:], self.ring)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, (-c for c in self.coeffs), self.ring)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries(self.order, (a - b for a, b in zip(self.coeffs, other.coeffs)), self.ring)
        value = self._scalar(other)
        if value is None:
            return NotImplemented
        return self + (-value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries(self.order, _convolve(self.coeffs, other.coeffs, self.order, self.ring), self.ring)
        value = self._scalar(other)
        if value is None:
            return NotImplemented
        return TruncatedSeries(self.order, (c * value for c in self.coeffs), self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        value = self._scalar(other)
        if value is None:
            return NotImplemented
        if isinstance(value, Poly):
            return self * value.inverse()
        if value == 0:
            raise NotInvertibleError("Division by zero")
        return TruncatedSeries(self.order, (c / value for c in self.coeffs), self.ring)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise SeriesError(f"Use pow_exponent for non-integer powers, got {exponent!r}")
        result = TruncatedSeries.one(self.order, self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if (isinstance(c0, Poly) and c0.constant == 0) or (not isinstance(c0, Poly) and c0 == 0):
            raise NotInvertibleError("Constant term is not invertible")
        inv0 = c0.inverse() if isinstance(c0, Poly) else 1 / c0
        out = [inv0]
        for n in range(1, self.order + 1):
            total = self.ring.zero()
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    total = total + self.coeffs[k] * out[n - k]
            out.append(-(total * inv0))
        return TruncatedSeries(self.order, out, self.ring)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.ring == other.ring and self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.ring, self.coeffs))

    def promote(self, ring: CoefficientRing) -> "TruncatedSeries":
        """Explicit QQ -> QQ[v] embedding"""
        if ring == self.ring:
            return self
        if self.ring.is_polynomial:
            raise RingMismatchError(f"Only QQ series can be promoted, this one is over {self.ring}")
        return TruncatedSeries(self.order, (Poly((c,), ring) for c in self.coeffs), ring)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderOutOfRangeError(f"Cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1], self.ring)

    def truncate_degree(self, cap: int) -> "TruncatedSeries":
        """Drop v-degrees above cap, moving the series into the smaller ring"""
        if not self.ring.is_polynomial:
            return self
        if cap > self.ring.cap:
            raise SeriesError(f"Cannot raise the degree cap from {self.ring.cap} to {cap}")
        ring = poly_ring(self.ring.variable, cap)
        return TruncatedSeries(self.order, (Poly(c.coeffs, ring) for c in self.coeffs), ring)

    def valuation(self) -> Optional[int]:
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return None

    def first_difference(self, other: "TruncatedSeries") -> Optional[int]:
        self._check(other)
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n
        return None

    def to_json(self) -> List[Any]:
        return [coefficient_to_json(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, ring={self.ring}, {self})"

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            negative = _is_negative(c)
            magnitude = -c if negative else c
            text = coefficient_to_str(magnitude)
            if isinstance(c, Poly) and len([x for x in c.coeffs if x]) > 1:
                text = f"({text})"
            if n == 0:
                body = text
            else:
                power = "q" if n == 1 else f"q^{n}"
                body = power if text == "1" else f"{text}·{power}"
            terms.append(("-" if negative else "+", body))
        if not terms:
            return "0"
        first_sign, text = terms[0]
        text = ("-" if first_sign == "-" else "") + text
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _is_negative(value: Coefficient) -> bool:
    # A polynomial coefficient counts as negative only when it is a single negative term
    if isinstance(value, Poly):
        nonzero = [x for x in value.coeffs if x]
        return len(nonzero) == 1 and nonzero[0] < 0
    return value < 0


def _convolve(a: Tuple, b: Tuple, order: int, ring: CoefficientRing) -> List:
    out = [ring.zero() for _ in range(order + 1)]
    nonzero_b = [(j, y) for j, y in enumerate(b) if y != 0]
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in nonzero_b:
            if i + j > order:
                break
            out[i + j] = out[i + j] + x * y
    return out

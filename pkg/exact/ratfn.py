"""
Rational functions over the Laurent ring, kept in a unique canonical form.
"""

import logging
from fractions import Fraction
from typing import Dict, Mapping, Union

from .laurent import LaurentScalar, check_session, laurent_gcd, poly_content

logger = logging.getLogger(__name__)

Scalar = Union[LaurentScalar, "RatScalar"]


class RatScalar:
    """
    Immutable quotient num/den of Laurent polynomials.

    Canonical form: den is a polynomial in v with lowest exponent 0, integer
    coefficients with content 1 and a positive leading coefficient, and
    gcd(num, den) is a unit. Equal values have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentScalar, den: Union[LaurentScalar, None] = None):
        if den is None:
            den = LaurentScalar.one(num.den)
        check_session(num.den, den.den)
        if den.is_zero:
            raise ZeroDivisionError("RatScalar with zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def of(cls, value) -> "RatScalar":
        if isinstance(value, RatScalar):
            return value
        return cls(value)

    @property
    def session(self) -> int:
        return self.num.den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_laurent(self) -> bool:
        return self.den.is_constant()

    def to_laurent(self) -> LaurentScalar:
        """
        Return the value as a Laurent polynomial.

        Raises:
            ValueError: If the denominator is not a unit
        """
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num.scale(1 / self.den.leading_coeff())

    def is_monomial(self) -> bool:
        return self.is_laurent() and self.num.is_monomial()

    def q_exponent(self) -> Fraction:
        return self.to_laurent().q_exponent()

    def exact_div(self, other) -> "RatScalar":
        return self / other

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other):
        other = _lift(other, self.session)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatScalar(self.num + other.num, self.den)
        return RatScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatScalar":
        return RatScalar(-self.num, self.den)

    def __sub__(self, other):
        other = _lift(other, self.session)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other, self.session)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _lift(other, self.session)
        if other is NotImplemented:
            return NotImplemented
        return RatScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other, self.session)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("RatScalar division by zero")
        return RatScalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _lift(other, self.session)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, power: int) -> "RatScalar":
        if power < 0:
            if self.is_zero:
                raise ZeroDivisionError("RatScalar division by zero")
            return RatScalar(self.den ** (-power), self.num ** (-power))
        return RatScalar(self.num ** power, self.den ** power)

    def __eq__(self, other) -> bool:
        other = _lift(other, self.session) if not isinstance(other, RatScalar) else other
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        if self.is_laurent():
            return hash(self.to_laurent())
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.to_laurent())
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatScalar({self})"

    def to_json(self) -> Dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "RatScalar":
        return cls(LaurentScalar.from_json(data["num"]), LaurentScalar.from_json(data["den"]))


def _lift(value, session: int):
    if isinstance(value, RatScalar):
        check_session(session, value.session)
        return value
    if isinstance(value, LaurentScalar):
        check_session(session, value.den)
        return RatScalar(value)
    if isinstance(value, (int, Fraction)):
        return RatScalar(LaurentScalar.const(session, value))
    return NotImplemented


def _canonical(num: LaurentScalar, den: LaurentScalar):
    session = num.den
    if num.is_zero:
        return num, LaurentScalar.one(session)
    if not den.is_monomial():
        g = laurent_gcd(num, den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
    if den.is_monomial():
        return num.exact_div(den), LaurentScalar.one(session)
    shift = -den.min_exp
    num, den = num.shift(shift), den.shift(shift)
    factor = 1 / poly_content([den])
    if den.leading_coeff() < 0:
        factor = -factor
    return num.scale(factor), den.scale(factor)


def as_scalar(value, session: int):
    """Lift ints, Fractions and scalars into the session's scalar types."""
    if isinstance(value, (LaurentScalar, RatScalar)):
        return value
    return LaurentScalar.const(session, value)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> RatScalar:
    """
    Exact scalar arithmetic returning the canonical rational form.

    Args:
        a: Left operand
        b: Right operand
        op: One of "add", "sub", "mul", "div"

    Returns:
        RatScalar: Canonical result

    Raises:
        ZeroDivisionError: For division by zero
        SessionMismatchError: If the operands use different session denominators
        ValueError: For an unknown op
    """
    left = RatScalar.of(a)
    right = RatScalar.of(b)
    if op == "add":
        return left + right
    if op == "sub":
        return left - right
    if op == "mul":
        return left * right
    if op == "div":
        return left / right
    raise ValueError(f"Unknown scalar operation '{op}'. Available: add, sub, mul, div")

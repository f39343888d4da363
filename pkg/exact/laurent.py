"""
Exact Laurent polynomials in a fractional power of q.

A scalar lives in Q[v, v^-1] with v = q^(1/D). The denominator D is fixed per
session (D = 2n for base rank n) and every scalar carries it, so exponents are
plain integers and no rescaling happens at runtime.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple, Union

import sympy

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class SessionMismatchError(ValueError):
    """Raised when scalars built for different session denominators meet."""


class InexactDivisionError(ArithmeticError):
    """Raised when a Laurent polynomial does not divide another exactly."""


def check_session(expected: int, actual: int) -> None:
    """Raise SessionMismatchError unless both denominators agree."""
    if expected != actual:
        raise SessionMismatchError(
            f"Session denominators differ: {expected} vs {actual}"
        )


def session_denominator(n: int) -> int:
    """Session denominator for base rank parameter n."""
    if n < 1:
        raise ValueError(f"Rank parameter must be positive, got {n}")
    return 2 * n


def format_q_exponent(exp: Fraction) -> str:
    """Render q^exp, e.g. "q", "q^2", "q^(-4/3)", "1"."""
    if exp == 0:
        return "1"
    if exp == 1:
        return "q"
    if exp.denominator == 1 and exp > 0:
        return f"q^{exp.numerator}"
    return f"q^({exp})"


class LaurentScalar:
    """
    Immutable element of Q[v, v^-1], v = q^(1/den).

    Terms map integer exponents of v to nonzero rational coefficients; the
    empty map is zero.
    """

    __slots__ = ("den", "_terms", "_hash")

    def __init__(self, den: int, terms: Union[Mapping[int, Number], None] = None):
        if den <= 0:
            raise ValueError(f"Session denominator must be positive, got {den}")
        self.den = den
        clean: Dict[int, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    clean[int(exp)] = Fraction(coeff)
        self._terms = clean
        self._hash = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, den: int) -> "LaurentScalar":
        return cls(den)

    @classmethod
    def one(cls, den: int) -> "LaurentScalar":
        return cls(den, {0: 1})

    @classmethod
    def const(cls, den: int, value: Number) -> "LaurentScalar":
        return cls(den, {0: value})

    @classmethod
    def monomial(cls, den: int, exp: int, coeff: Number = 1) -> "LaurentScalar":
        """Return coeff * v^exp."""
        return cls(den, {exp: coeff})

    @classmethod
    def q_power(cls, den: int, exponent: Union[Number, str], coeff: Number = 1) -> "LaurentScalar":
        """
        Return coeff * q^exponent.

        Raises:
            ValueError: If exponent * den is not an integer
        """
        exp = Fraction(exponent) * den
        if exp.denominator != 1:
            raise ValueError(
                f"Exponent q^({Fraction(exponent)}) is outside the lattice (1/{den})Z"
            )
        return cls(den, {exp.numerator: coeff})

    @classmethod
    def from_q_terms(cls, den: int, terms: Mapping[Union[Number, str], Number]) -> "LaurentScalar":
        """Build from a map of q-exponents to coefficients."""
        total = cls.zero(den)
        for exponent, coeff in terms.items():
            total = total + cls.q_power(den, exponent, coeff)
        return total

    # ------------------------------------------------------------------
    # inspection

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[int, Fraction]]:
        """Terms with ascending exponents."""
        return sorted(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def is_laurent(self) -> bool:
        return True

    def to_laurent(self) -> "LaurentScalar":
        return self

    @property
    def min_exp(self) -> int:
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        return max(self._terms)

    def leading_coeff(self) -> Fraction:
        """Coefficient at the highest exponent."""
        return self._terms[self.max_exp]

    def coeff(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def q_exponent(self) -> Fraction:
        """
        Exponent s of a monomial c*q^s.

        Raises:
            ValueError: If the scalar is not a monomial
        """
        if not self.is_monomial():
            raise ValueError(f"{self} is not a monomial")
        return Fraction(self.min_exp, self.den)

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other) -> "LaurentScalar":
        if isinstance(other, LaurentScalar):
            check_session(self.den, other.den)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentScalar(self.den, {0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return LaurentScalar(self.den, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar(self.den, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentScalar(self.den)
        terms: Dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return LaurentScalar(self.den, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentScalar":
        if power < 0:
            if not self.is_monomial():
                raise InexactDivisionError(f"{self} is not invertible in the Laurent ring")
            (exp, coeff), = self._terms.items()
            return LaurentScalar(self.den, {exp * power: coeff ** power})
        result = LaurentScalar.one(self.den)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by v^k."""
        return LaurentScalar(self.den, {e + k: c for e, c in self._terms.items()})

    def scale(self, factor: Number) -> "LaurentScalar":
        return LaurentScalar(self.den, {e: c * factor for e, c in self._terms.items()})

    def exact_div(self, other: "LaurentScalar") -> "LaurentScalar":
        """
        Divide exactly in the Laurent ring.

        Raises:
            ZeroDivisionError: If other is zero
            InexactDivisionError: If the quotient is not a Laurent polynomial
        """
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"Cannot divide LaurentScalar by {type(other).__name__}")
        if other.is_zero:
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero:
            return self
        if other.is_monomial():
            (exp, coeff), = other._terms.items()
            return LaurentScalar(
                self.den, {e - exp: c / coeff for e, c in self._terms.items()}
            )
        lowest = self.min_exp - other.min_exp
        top_exp = other.max_exp
        top_coeff = other._terms[top_exp]
        remainder = dict(self._terms)
        quotient: Dict[int, Fraction] = {}
        while remainder:
            exp = max(remainder)
            q_exp = exp - top_exp
            if q_exp < lowest:
                raise InexactDivisionError(f"{other} does not divide {self}")
            q_coeff = remainder[exp] / top_coeff
            quotient[q_exp] = q_coeff
            for e, c in other._terms.items():
                key = e + q_exp
                value = remainder.get(key, 0) - q_coeff * c
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return LaurentScalar(self.den, quotient)

    def __truediv__(self, other):
        from .ratfn import RatScalar

        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Laurent division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, LaurentScalar):
            other = self._coerce(other)
            if other.is_monomial():
                return self.exact_div(other)
            return RatScalar(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        from .ratfn import RatScalar

        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatScalar(other, LaurentScalar.one(self.den)) / RatScalar(self, LaurentScalar.one(self.den))

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentScalar):
            return self.den == other.den and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.den, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ------------------------------------------------------------------
    # rendering and serialization

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for exp, coeff in sorted(self._terms.items(), reverse=True):
            q_exp = Fraction(exp, self.den)
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if q_exp == 0:
                body = str(mag)
            elif mag == 1:
                body = format_q_exponent(q_exp)
            else:
                body = f"{mag}*{format_q_exponent(q_exp)}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentScalar(den={self.den}, {self})"

    def to_json(self) -> Dict:
        return {
            "den": self.den,
            "terms": [[e, f"{c.numerator}/{c.denominator}"] for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentScalar":
        return cls(
            int(data["den"]), {int(e): Fraction(c) for e, c in data["terms"]}
        )


def q_of(den: int) -> LaurentScalar:
    """The scalar q in a session."""
    return LaurentScalar.q_power(den, 1)


def _to_sympy_poly(terms: Mapping[int, Fraction], stride: int, gen):
    return sympy.Poly.from_dict(
        {(e // stride,): sympy.Rational(c.numerator, c.denominator) for e, c in terms.items()},
        gen,
        domain=sympy.QQ,
    )


@lru_cache(maxsize=1)
def _generator():
    return sympy.Symbol("v")


def laurent_gcd(a: LaurentScalar, b: LaurentScalar) -> LaurentScalar:
    """
    Greatest common divisor up to units.

    Returns the monic polynomial (lowest exponent 0) generating the ideal
    (a, b) in Q[v, v^-1]; one for coprime inputs, zero only when both are.
    """
    b = a._coerce(b)
    den = a.den
    if a.is_zero and b.is_zero:
        return LaurentScalar.zero(den)
    if a.is_zero or b.is_zero:
        nonzero = b if a.is_zero else a
        shifted = nonzero.shift(-nonzero.min_exp)
        return shifted.scale(1 / shifted.leading_coeff())
    if a.is_monomial() or b.is_monomial():
        return LaurentScalar.one(den)
    pa = a.shift(-a.min_exp)
    pb = b.shift(-b.min_exp)
    stride = 0
    for e in list(pa._terms) + list(pb._terms):
        stride = math.gcd(stride, e)
    stride = stride or 1
    gen = _generator()
    g = _to_sympy_poly(pa._terms, stride, gen).gcd(_to_sympy_poly(pb._terms, stride, gen))
    terms = {}
    for (exp,), coeff in g.terms():
        coeff = sympy.Rational(coeff)
        terms[exp * stride] = Fraction(int(coeff.p), int(coeff.q))
    result = LaurentScalar(den, terms)
    return result.scale(1 / result.leading_coeff())


def poly_content(values: Iterable[LaurentScalar]) -> Fraction:
    """Positive rational content (gcd of numerators over lcm of denominators)."""
    num = 0
    den = 1
    for value in values:
        for coeff in value._terms.values():
            num = math.gcd(num, coeff.numerator)
            den = den * coeff.denominator // math.gcd(den, coeff.denominator)
    if num == 0:
        return Fraction(1)
    return Fraction(num, den)

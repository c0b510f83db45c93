from fractions import Fraction
from typing import Optional, Tuple, Union
import logging

import sympy
from sympy import QQ, ZZ
from sympy.polys.rings import PolyElement, ring

from app.core.exceptions import ArithmeticDomainError

logger = logging.getLogger(__name__)

ZZ_RING, _ZZ_G = ring("g", ZZ)
QQ_RING, _QQ_G = ring("g", QQ)


def _poly_terms(poly: PolyElement) -> Tuple[Tuple[int, int], ...]:
    """Descending (exponent, coefficient) pairs of a univariate polynomial"""
    return tuple(sorted(((monom[0], int(coeff)) for monom, coeff in poly.terms()), reverse=True))


def _poly_text(poly: PolyElement) -> str:
    terms = _poly_terms(poly)
    if not terms:
        return "0"
    parts = []
    for index, (exponent, coeff) in enumerate(terms):
        magnitude = abs(coeff)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = "g" if exponent == 1 else f"g^{exponent}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        if index == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts)


def _poly_latex(poly: PolyElement) -> str:
    terms = _poly_terms(poly)
    if not terms:
        return "0"
    parts = []
    for index, (exponent, coeff) in enumerate(terms):
        magnitude = abs(coeff)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = "g" if exponent == 1 else f"g^{{{exponent}}}"
            body = power if magnitude == 1 else f"{magnitude} {power}"
        if index == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts)


class RatFunc:
    """
    Element of Q(g) kept as a fully reduced quotient of integer polynomials.

    The denominator has a positive leading coefficient and zero is 0/1, so equal
    values always share one representation.
    """
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[PolyElement, int] = 0, den: Union[PolyElement, int] = 1,
                 _reduced: bool = False):
        num = ZZ_RING(num)
        den = ZZ_RING(den)
        if not den:
            raise ArithmeticDomainError("division by zero")
        if not _reduced:
            if not num:
                den = ZZ_RING.one
            else:
                num, den = num.cancel(den)
            if den.LC < 0:
                num, den = -num, -den
        self.num = num
        self.den = den
        self._hash = None

    # construction

    @classmethod
    def from_int(cls, value: int) -> "RatFunc":
        return cls(ZZ_RING(int(value)), ZZ_RING.one, _reduced=True)

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int, str]) -> "RatFunc":
        value = Fraction(value)
        return cls(ZZ_RING(value.numerator), ZZ_RING(value.denominator), _reduced=True)

    @classmethod
    def genus(cls) -> "RatFunc":
        return cls(_ZZ_G, ZZ_RING.one, _reduced=True)

    @classmethod
    def from_expr(cls, expr: sympy.Expr) -> "RatFunc":
        """Convert a sympy expression in the symbol g"""
        numer, denom = sympy.fraction(sympy.cancel(sympy.sympify(expr)))
        q_num = QQ_RING(sympy.expand(numer))
        q_den = QQ_RING(sympy.expand(denom))
        num_scale, q_num = q_num.clear_denoms()
        den_scale, q_den = q_den.clear_denoms()
        num = q_num.set_ring(ZZ_RING) * int(den_scale)
        den = q_den.set_ring(ZZ_RING) * int(num_scale)
        return cls(num, den)

    @staticmethod
    def coerce(value) -> Optional["RatFunc"]:
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, bool):
            return None
        if isinstance(value, int):
            return RatFunc.from_int(value)
        if isinstance(value, Fraction):
            return RatFunc.from_fraction(value)
        return None

    # predicates

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == self.den

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() <= 0

    def is_negative(self) -> bool:
        return bool(self.num) and self.num.LC < 0

    # arithmetic

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = RatFunc.coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = RatFunc.coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ArithmeticDomainError("division by zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = RatFunc.coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFunc(self.num ** exponent, self.den ** exponent, _reduced=True)

    # comparison

    def __eq__(self, other):
        other = RatFunc.coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((_poly_terms(self.num), _poly_terms(self.den)))
        return self._hash

    def sort_key(self) -> tuple:
        return (_poly_terms(self.den), _poly_terms(self.num))

    # evaluation

    def eval(self, g0: Union[Fraction, int, str]) -> Fraction:
        """
        Exact value at a rational genus; a vanishing denominator is a pole
        """
        point = Fraction(g0)
        denominator = sum((Fraction(c) * point ** e for e, c in _poly_terms(self.den)), Fraction(0))
        if denominator == 0:
            raise ArithmeticDomainError(f"pole at g = {point}")
        numerator = sum((Fraction(c) * point ** e for e, c in _poly_terms(self.num)), Fraction(0))
        return numerator / denominator

    def specialize(self, g0: Union[Fraction, int, str]) -> "RatFunc":
        return RatFunc.from_fraction(self.eval(g0))

    def to_expr(self) -> sympy.Expr:
        return self.num.as_expr() / self.den.as_expr()

    # printing

    def needs_parentheses(self) -> bool:
        """True when the text form has a top-level sum and cannot be a factor as is"""
        return self.den == ZZ_RING.one and len(self.num.terms()) > 1

    def __str__(self):
        num_text = _poly_text(self.num)
        if self.den == ZZ_RING.one:
            return num_text
        if len(self.num.terms()) > 1:
            num_text = f"({num_text})"
        den_terms = _poly_terms(self.den)
        den_text = _poly_text(self.den)
        if len(den_terms) > 1 or (den_terms[0][0] > 0 and den_terms[0][1] != 1):
            den_text = f"({den_text})"
        return f"{num_text}/{den_text}"

    def __repr__(self):
        return f"RatFunc({self})"

    def to_latex(self) -> str:
        if self.den == ZZ_RING.one:
            return _poly_latex(self.num)
        if self.is_negative():
            return f"-\\frac{{{_poly_latex(-self.num)}}}{{{_poly_latex(self.den)}}}"
        return f"\\frac{{{_poly_latex(self.num)}}}{{{_poly_latex(self.den)}}}"

    def poly_strings(self) -> Tuple[str, str]:
        return _poly_text(self.num), _poly_text(self.den)


ZERO = RatFunc.from_int(0)
ONE = RatFunc.from_int(1)
G = RatFunc.genus()
# 2g - 2, the degree of the canonical class and the value of kappa_0
CANONICAL_DEGREE = RatFunc(2 * _ZZ_G - 2, 1, _reduced=True)


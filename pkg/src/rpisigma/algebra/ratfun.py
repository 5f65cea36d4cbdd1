"""Rational functions K(x) with canonical normalization.

Invariants: the denominator is monic and coprime to the numerator; zero is
stored as 0/1.
"""

from __future__ import annotations

from fractions import Fraction

from .constants import Constant
from .poly import Poly, poly_gcd


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Poly.constant(num.field, 1)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = Poly.constant(num.field, 1)
        elif den.degree == 0:
            lead = den.coeffs[0]
            if lead != den.field.one:
                num = num * lead.inverse()
                den = Poly.constant(num.field, 1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead = den.lc()
            if lead != den.field.one:
                inv = lead.inverse()
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @staticmethod
    def from_poly(p):
        return RatFun(p)

    @staticmethod
    def constant(field, c):
        return RatFun(Poly.constant(field, c))

    @staticmethod
    def x(field):
        return RatFun(Poly.x(field))

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if not self.num:
            return self.field.zero
        return self.num.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun(other)
        if isinstance(other, (int, Fraction, Constant)):
            return RatFun.constant(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n):
        if n < 0:
            if not self:
                raise ZeroDivisionError("negative power of zero")
            return RatFun(self.den ** (-n), self.num ** (-n))
        return RatFun(self.num**n, self.den**n)

    def inverse(self):
        return RatFun(self.den, self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def shift(self, c):
        """Substitute x -> x + c."""
        return RatFun(self.num.shift(c), self.den.shift(c))

    def evaluate(self, c):
        d = self.den.evaluate(c)
        if not d:
            raise ZeroDivisionError("pole of rational function")
        return self.num.evaluate(c) / d

    def __repr__(self):
        if self.den.degree == 0:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"

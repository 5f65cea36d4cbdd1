"""Cyclotomic constant fields K = Q(zeta_m), represented as Q[z]/Phi_m(z).

For m = 1 and m = 2 the field degenerates to plain Q; arithmetic then reduces
to a single Fraction, which keeps the common case cheap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _divisors(m):
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def _int_poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _int_poly_divexact(p, q):
    # exact division of integer polynomials, used only for Phi_m
    p = list(p)
    dq = len(q) - 1
    out = [0] * (len(p) - dq)
    for i in range(len(p) - dq - 1, -1, -1):
        c = p[i + dq]
        assert c % q[dq] == 0
        c //= q[dq]
        out[i] = c
        if c:
            for j, b in enumerate(q):
                p[i + j] -= c * b
    assert all(v == 0 for v in p)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients (ascending, integers) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = [-1] + [0] * (m - 1) + [1]  # z^m - 1
    for d in _divisors(m)[:-1]:
        num = _int_poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


class CyclotomicField:
    """The field Q(zeta_m) with dense representation modulo Phi_m."""

    _cache = {}

    def __new__(cls, m):
        if m in cls._cache:
            return cls._cache[m]
        self = super().__new__(cls)
        cls._cache[m] = self
        self.m = m
        mod = [Fraction(c) for c in cyclotomic_polynomial(m)]
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        # z^k for k in [degree, 2*degree-2], reduced mod Phi_m
        red = []
        if self.degree > 1:
            cur = [-c for c in mod[:-1]]  # z^degree
            red.append(tuple(cur))
            for _ in range(self.degree - 2):
                cur = [Fraction(0)] + cur
                top = cur.pop()
                if top:
                    cur = [a - top * b for a, b in zip(cur, mod[:-1])]
                red.append(tuple(cur))
        self._reductions = red
        self.zero = Constant(self, (Fraction(0),) * self.degree)
        one = [Fraction(0)] * self.degree
        one[0] = Fraction(1)
        self.one = Constant(self, tuple(one))
        return self

    def __repr__(self):
        return f"CyclotomicField({self.m})"

    def from_rational(self, q):
        q = Fraction(q)
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = q
        return Constant(self, tuple(coeffs))

    def zeta(self):
        """A primitive m-th root of unity (the class of z)."""
        if self.m == 1:
            return self.one
        if self.m == 2:
            return self.from_rational(-1)
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return Constant(self, tuple(coeffs))

    def _reduce(self, coeffs):
        # coeffs may have length up to 2*degree-1
        d = self.degree
        if len(coeffs) <= d:
            out = list(coeffs) + [Fraction(0)] * (d - len(coeffs))
            return tuple(out)
        out = list(coeffs[:d])
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._reductions[k - d]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return tuple(out)


class Constant:
    """An element of a cyclotomic constant field, immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, Constant):
            if other.field is not self.field:
                raise ValueError("mixed constant fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Constant(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Constant(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Constant(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        if d == 1:
            return Constant(self.field, (self.coeffs[0] * o.coeffs[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Constant(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero constant")
        d = self.field.degree
        if d == 1:
            return Constant(self.field, (1 / self.coeffs[0],))
        # extended Euclid in Q[z] for gcd(self, Phi_m) = 1
        r0 = list(self.field.modulus)
        r1 = list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                coeffs = [c * inv for c in s1]
                return Constant(self.field, self.field._reduce(coeffs))
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.m, self.coeffs))

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*z^{i}" if i else str(c))
        return "(" + " + ".join(parts) + ")"


def _frac_poly_divmod(p, q):
    p = list(p)
    while q and not q[-1]:
        q = q[:-1]
    dq = len(q) - 1
    quo = [Fraction(0)] * max(1, len(p) - dq)
    lead_inv = 1 / q[dq]
    for i in range(len(p) - dq - 1, -1, -1):
        c = p[i + dq] * lead_inv
        quo[i] = c
        if c:
            for j, b in enumerate(q):
                p[i + j] -= c * b
    rem = p[:dq] if dq > 0 else [Fraction(0)]
    return quo, rem


def _frac_poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _frac_poly_sub(p, q):
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    for i, b in enumerate(q):
        p[i] -= b
    return p


def is_primitive_root(c, order):
    """True iff c is a primitive root of unity of exactly the given order."""
    if order < 1 or not c:
        return False
    if c ** order != c.field.one:
        return False
    for d in range(1, order):
        if order % d == 0 and c ** d == c.field.one:
            return False
    return True

"""Dense univariate polynomials over a cyclotomic constant field.

Coefficients are stored ascending with no trailing zeros; the zero polynomial
has an empty coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .constants import Constant, CyclotomicField


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        while coeffs and not coeffs[-1]:
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = tuple(coeffs)

    @staticmethod
    def from_rationals(field, values):
        return Poly(field, [field.from_rational(v) for v in values])

    @staticmethod
    def constant(field, c):
        if isinstance(c, Constant):
            return Poly(field, (c,))
        return Poly(field, (field.from_rational(c),))

    @staticmethod
    def x(field):
        return Poly(field, (field.zero, field.one))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, Constant)):
            return Poly.constant(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        out = [self.coeff(i) + o.coeff(i) for i in range(n)]
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

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
        if not self.coeffs or not o.coeffs:
            return Poly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        o = self._coerce(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        if self.degree < dq:
            return Poly(self.field, ()), self
        quo = [self.field.zero] * (self.degree - dq + 1)
        inv = o.lc().inverse()
        for i in range(self.degree - dq, -1, -1):
            c = rem[i + dq] * inv
            quo[i] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return Poly(self.field, quo), Poly(self.field, rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.m, self.coeffs))

    def monic(self):
        if not self:
            return self
        inv = self.lc().inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def derivative(self):
        return Poly(
            self.field,
            [self.coeffs[i] * i for i in range(1, len(self.coeffs))],
        )

    def evaluate(self, c):
        if not isinstance(c, Constant):
            c = self.field.from_rational(c)
        acc = self.field.zero
        for a in reversed(self.coeffs):
            acc = acc * c + a
        return acc

    def shift(self, c):
        """The composition p(x + c)."""
        if not isinstance(c, Constant):
            c = self.field.from_rational(c)
        lin = Poly(self.field, (c, self.field.one))
        acc = Poly(self.field, ())
        for a in reversed(self.coeffs):
            acc = acc * lin + a
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c!r}*x^{i}" if i else repr(c))
        return " + ".join(parts)


def _rational_coeff_list(p):
    out = []
    for c in p.coeffs:
        if not c.is_rational():
            return None
        out.append(c.rational_value())
    return out


def _int_primitive(fracs):
    lcm = 1
    for v in fracs:
        g = _gcd_int(lcm, v.denominator)
        lcm = lcm // g * v.denominator
    ints = [int(v * lcm) for v in fracs]
    content = 0
    for v in ints:
        content = _gcd_int(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def _int_gcd_prs(a, b):
    # primitive pseudo-remainder sequence over Z; inputs primitive, deg a >= deg b
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return [1]
        # pseudo-remainder of a by b: scale by lc(b) before each reduction step
        r = list(a)
        lb = b[-1]
        for i in range(da - db, -1, -1):
            top = r[i + db]
            if top:
                r = [lb * v for v in r]
                for j, v in enumerate(b):
                    r[i + j] -= top * v
        r = r[:db]
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return b
        content = 0
        for v in r:
            content = _gcd_int(content, v)
        if content > 1:
            r = [v // content for v in r]
        a, b = b, r


def poly_gcd(p, q):
    """Monic gcd over the coefficient field.

    Rational coefficients go through a primitive pseudo-remainder sequence
    over Z to avoid fraction growth; other cyclotomic fields use monic
    Euclidean division.
    """
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    pr = _rational_coeff_list(p)
    qr = _rational_coeff_list(q)
    if pr is not None and qr is not None:
        a = _int_primitive(pr)
        b = _int_primitive(qr)
        if len(a) < len(b):
            a, b = b, a
        g = _int_gcd_prs(a, b)
        return Poly.from_rationals(p.field, [Fraction(v) for v in g]).monic()
    while q:
        p, q = q, p % q
    if not p:
        return p
    return p.monic()


def poly_lcm(p, q):
    if not p or not q:
        return Poly(p.field, ())
    return ((p * q) // poly_gcd(p, q)).monic()


def resultant(p, q):
    """Resultant of two polynomials over their coefficient field."""
    field = p.field
    if not p or not q:
        return field.zero
    acc = field.one
    a, b = p, q
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            acc = -acc
        a, b = b, a
    while b.degree > 0:
        r = a % b
        if not r:
            return field.zero
        sign = -field.one if (a.degree * b.degree) % 2 else field.one
        acc = acc * sign * b.lc() ** (a.degree - r.degree)
        a, b = b, r
    return acc * b.coeffs[0] ** a.degree


def interpolate(field, points):
    """Lagrange interpolation through (x, y) pairs with Constant entries."""
    result = Poly(field, ())
    xs = [x for x, _ in points]
    for i, (xi, yi) in enumerate(points):
        if not yi:
            continue
        num = Poly.constant(field, yi)
        den = field.one
        for j, xj in enumerate(xs):
            if j != i:
                num = num * Poly(field, (-xj, field.one))
                den = den * (xi - xj)
        result = result + num * Poly.constant(field, den.inverse())
    return result


def _clear_to_integers(values):
    # values: list of Fractions -> list of ints with the same root set
    lcm = 1
    for v in values:
        d = v.denominator
        g = _gcd_int(lcm, d)
        lcm = lcm // g * d
    return [int(v * lcm) for v in values]


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors_upto(n, limit=10**12):
    n = abs(n)
    if n == 0 or n > limit:
        return None
    small, large = [], []
    d = 1
    top = isqrt(n)
    while d <= top:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def nonneg_integer_roots(p):
    """All nonnegative integer roots of a polynomial over K, exact."""
    if not p:
        raise ValueError("zero polynomial has every root")
    # work coordinate-wise: an integer root must kill every Q-coordinate
    deg_k = p.field.degree
    coord = None
    for idx in range(deg_k):
        vals = [c.coeffs[idx] for c in p.coeffs]
        if any(vals):
            coord = vals
            break
    ints = _clear_to_integers(coord)
    shift = 0
    while ints and ints[0] == 0:
        ints = ints[1:]
        shift += 1
    roots = set()
    if shift:
        roots.add(0)
    if not ints:
        return sorted(roots)
    if len(ints) == 1:
        return sorted(roots)
    divisors = _divisors_upto(ints[0])
    if divisors is None:
        # constant term too large to factor; fall back to a root-bound scan
        bound = 1 + max(abs(c) for c in ints[:-1]) // abs(ints[-1]) + 1
        if bound > 10**6:
            raise RuntimeError("integer root search out of supported range")
        divisors = range(1, bound + 1)
    zero = p.field.zero
    for j in divisors:
        if p.evaluate(j) == zero:
            roots.add(j)
    return sorted(roots)


def _abs_bound(c):
    # upper bound for |c| with c cyclotomic: sum of |rational coordinates|
    total = Fraction(0)
    for v in c.coeffs:
        total += abs(v)
    return total


def _int_kth_root_ceil(x, k):
    if x <= 1:
        return x
    lo, hi = 1, 1 << ((x.bit_length() + k - 1) // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _fujiwara_root_bound(p):
    # p monic; every complex root has modulus <= 2*max_k |a_{n-k}|^(1/k)
    n = p.degree
    if n < 1:
        return 0
    best = 0
    for k in range(1, n + 1):
        c = p.coeff(n - k)
        if c:
            b = _abs_bound(c)
            v = _int_kth_root_ceil(b.numerator // b.denominator + 1, k)
            best = max(best, v)
    return 2 * best


_DISPERSION_PRIME = (1 << 61) - 1


def _pshift_int(coeffs, c, prime):
    # integer-shift x -> x + c of an integer coefficient list, mod prime
    out = [0]
    for a in reversed(coeffs):
        # out = out*(x+c) + a
        new = [0] * (len(out) + 1)
        for i, v in enumerate(out):
            new[i + 1] = (new[i + 1] + v) % prime
            new[i] = (new[i] + v * c) % prime
        new[0] = (new[0] + a) % prime
        out = new
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _presultant(a, b, prime):
    # resultant of integer coefficient lists mod prime (degrees preserved by caller)
    acc = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return acc * pow(b[0], da, prime) % prime
        if da < db:
            if (da * db) % 2:
                acc = prime - acc
            a, b = b, a
            continue
        # remainder of a by b mod prime
        r = list(a)
        inv = pow(b[-1], -1, prime)
        for i in range(da - db, -1, -1):
            cc = r[i + db] * inv % prime
            if cc:
                for jj, y in enumerate(b):
                    r[i + jj] = (r[i + jj] - cc * y) % prime
        r = r[:db]
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return 0
        dr = len(r) - 1
        sign = prime - 1 if (da * db) % 2 else 1
        acc = acc * sign % prime * pow(b[-1], da - dr, prime) % prime
        a, b = b, r


def _to_int_coeffs(p):
    # rational-coefficient poly -> (integer list, denominator lcm)
    vals = [c.rational_value() for c in p.coeffs]
    lcm = 1
    for v in vals:
        g = _gcd_int(lcm, v.denominator)
        lcm = lcm // g * v.denominator
    return [int(v * lcm) for v in vals], lcm


def _dispersion_candidates_modular(p, q, step, cap):
    prime = _DISPERSION_PRIME
    pi, _ = _to_int_coeffs(p)
    qi, _ = _to_int_coeffs(q)
    pm = [c % prime for c in pi]
    qm = [c % prime for c in qi]
    if pm[-1] == 0 or qm[-1] == 0:
        return None
    n = (len(pi) - 1) * (len(qi) - 1)
    values = []
    for k in range(n + 1):
        values.append(_presultant(pm, _pshift_int(qm, (step * k) % prime, prime), prime))
    # Lagrange interpolation on points 0..n, then a Horner scan
    rcoeffs = _pinterpolate(values, prime)
    if all(v == 0 for v in rcoeffs):
        return None
    out = []
    for j in range(cap + 1):
        acc = 0
        for c in reversed(rcoeffs):
            acc = (acc * j + c) % prime
        if acc == 0:
            out.append(j)
    return out


def _pinterpolate(values, prime):
    # interpolate on x = 0..n over F_prime
    n = len(values) - 1
    coeffs = [0] * (n + 1)
    base = [1]  # running product (x-0)(x-1)...
    # Newton's divided differences mod prime
    table = list(values)
    for level in range(1, n + 1):
        inv = pow(level, -1, prime)
        for i in range(n, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) * inv % prime
    # Horner in Newton form: f = (...(d_n (x - (n-1)) + d_{n-1}) ... ) + d_0
    for k in range(n, -1, -1):
        new = [0] * len(coeffs)
        shifted = [0] + coeffs[:-1]
        for i in range(len(coeffs)):
            new[i] = (shifted[i] - k * coeffs[i]) % prime
        new[0] = (new[0] + table[k]) % prime
        coeffs = new
    return coeffs


def dispersion(p, q, step=1):
    """All j >= 0 with deg gcd(p(x), q(x + j*step)) > 0.

    Nonnegative integer roots of Res_x(p(x), q(x + j*step)) as a polynomial
    in j; the resultant is interpolated modulo a large prime when the
    coefficients are rational, candidates are capped through root bounds,
    and every candidate is confirmed by an exact gcd.
    """
    if not p or not q:
        raise ValueError("dispersion of zero polynomial")
    if p.degree < 1 or q.degree < 1:
        return set()
    p = p.monic()
    q = q.monic()
    field = p.field
    istep = int(step) if Fraction(step) == int(step) else None
    cap_f = Fraction(_fujiwara_root_bound(p) + _fujiwara_root_bound(q)) / abs(Fraction(step))
    cap = int(cap_f) + 1
    candidates = None
    if istep is not None and all(c.is_rational() for c in p.coeffs + q.coeffs):
        candidates = _dispersion_candidates_modular(p, q, istep, cap)
    if candidates is None:
        n = p.degree * q.degree
        points = []
        for k in range(n + 1):
            r = resultant(p, q.shift(Fraction(step) * k))
            points.append((field.from_rational(k), r))
        rpoly = interpolate(field, points)
        if not rpoly:
            raise RuntimeError("degenerate resultant in dispersion")
        zero = field.zero
        candidates = [j for j in range(cap + 1) if rpoly.evaluate(j) == zero]
    out = set()
    for j in candidates:
        if poly_gcd(p, q.shift(Fraction(step) * j)).degree > 0:
            out.add(j)
    return out

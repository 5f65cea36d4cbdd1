"""Hypergeometric candidate sets for operators over K(x), Petkovsek style.

For L = sum a_i sigma^i with rational-function coefficients, returns a finite
set S such that any right factor sigma - r has r = u * sigma(v)/v with u in S.
Candidates have the normal form u = z * A(x)/B(x): A a monic divisor of the
trailing coefficient, B a monic divisor of the leading coefficient shifted by
(m-1) steps, z a root of the induced leading-coefficient equation.
"""

from __future__ import annotations

from fractions import Fraction

from ..algebra.factor import factor_univariate, monic_divisors
from ..algebra.poly import Poly, poly_lcm
from ..algebra.ratfun import RatFun
from ..errors import UnsupportedConstantField


def _rational_only(p):
    for c in p.coeffs:
        if not c.is_rational():
            raise UnsupportedConstantField(
                "hypergeometric candidates need rational coefficients in this build"
            )
    return p


def _roots_in_field(z_poly):
    """Roots of a rational-coefficient polynomial that lie in K.

    Complete over Q via factorization; roots of unity times rational roots
    are probed explicitly for cyclotomic K.
    """
    field = z_poly.field
    roots = []
    _, facs = factor_univariate(z_poly)
    rational_cands = set()
    for fac, _ in facs:
        if fac.degree == 1:
            r = -fac.coeff(0).rational_value()
            roots.append(field.from_rational(r))
            rational_cands.add(r)
        elif fac.degree >= 2:
            rational_cands.update(abs(c.rational_value()) for c in fac.coeffs if c)
    if field.degree > 1:
        m = field.m if field.m % 2 == 0 else 2 * field.m
        gen = field.zeta() if field.m % 2 == 0 else -field.zeta()
        w = gen
        for _ in range(1, m):
            for r in sorted(rational_cands, key=abs):
                cand = w * field.from_rational(r)
                if z_poly.evaluate(cand) == field.zero and all(cand != x for x in roots):
                    roots.append(cand)
            w = w * gen
    return [r for r in roots if r]


def hypergeometric_candidates(a, step=1):
    """Candidate set S for right factors of the operator with coefficients a."""
    field = a[0].field
    den = Poly.constant(field, 1)
    for ai in a:
        if ai:
            den = poly_lcm(den, ai.den)
    polys = [(ai * den).num if ai else Poly(field, ()) for ai in a]
    i0 = 0
    while not polys[i0]:
        i0 += 1
    i1 = len(polys) - 1
    while not polys[i1]:
        i1 -= 1
    polys = [p.shift(Fraction(step) * (-i0)) for p in polys[i0 : i1 + 1]]
    m = len(polys) - 1
    if m == 0:
        return []
    trailing = _rational_only(polys[0])
    leading = _rational_only(polys[-1].shift(Fraction(step) * (m - 1)))
    for p in polys:
        if p:
            _rational_only(p)
    out = []
    for A in monic_divisors(trailing):
        for B in monic_divisors(leading):
            ps = []
            for i, p in enumerate(polys):
                if not p:
                    ps.append(Poly(field, ()))
                    continue
                q = p
                for l in range(i):
                    q = q * A.shift(Fraction(step) * l)
                for l in range(i, m):
                    q = q * B.shift(Fraction(step) * l)
                ps.append(q)
            top = max(p.degree for p in ps if p)
            zpoly = Poly(
                field,
                [ps[i].coeff(top) if ps[i] else field.zero for i in range(m + 1)],
            )
            if not zpoly or zpoly.degree == 0:
                continue
            for z in _roots_in_field(zpoly):
                cand = RatFun(A * Poly.constant(field, z), B)
                if all(cand != c for c in out):
                    out.append(cand)
    return sorted(out, key=repr)

"""Fractions over the y-free tower subring, with enough gcd machinery for
exact elimination.

Multivariate gcds are computed by a primitive pseudo-remainder sequence in
the top generator, recursing into contents; coefficients live in K(x), so the
base case is trivial.  Fractions are kept reduced by dividing out this gcd,
which is what keeps shift-projection eliminations compact.
"""

from __future__ import annotations

from .algebra.poly import poly_gcd, poly_lcm
from .algebra.ratfun import RatFun
from .tower import KIND_PI, KIND_SIGMA, TowerElement


def content_and_primitive(elem):
    """Split elem = content * primitive with content in K(x)."""
    if not elem:
        return RatFun.constant(elem.tower.field, 0), elem
    gnum = None
    lden = None
    for coeff in elem.terms.values():
        gnum = coeff.num if gnum is None else poly_gcd(gnum, coeff.num)
        lden = coeff.den if lden is None else poly_lcm(lden, coeff.den)
    content = RatFun(gnum, lden)
    inv = content.inverse()
    prim = TowerElement(elem.tower, {k: c * inv for k, c in elem.terms.items()})
    return content, prim


def try_exact_divide(num, den):
    """num / den in the tower ring, or None when not exactly divisible."""
    tower = num.tower
    if not num:
        return num
    for key in list(num.terms) + list(den.terms):
        if tower.r_index is not None and key[tower.r_index]:
            return None
    dkey, dcoeff = den.leading_term()
    sigma_idx = [i for i, g in enumerate(tower.gens) if g.kind == KIND_SIGMA]
    pi_idx = [i for i, g in enumerate(tower.gens) if g.kind == KIND_PI]
    lo_bound = {}
    for i in pi_idx:
        lo_bound[i] = num.lowdeg_gen(i) - den.lowdeg_gen(i)
    quo = tower.zero()
    rem = num
    while rem:
        rkey, rcoeff = rem.leading_term()
        if any(rkey[i] < dkey[i] for i in sigma_idx):
            return None
        qkey = tuple(a - b for a, b in zip(rkey, dkey))
        if any(qkey[i] < lo_bound[i] for i in pi_idx):
            return None
        qterm = tower.monomial(qkey, rcoeff / dcoeff)
        quo = quo + qterm
        rem = rem - qterm * den
    return quo


def _shift_nonnegative(elem):
    """Multiply by a unit monomial so all product-generator exponents are >= 0."""
    tower = elem.tower
    key = [0] * len(tower.gens)
    changed = False
    for i, g in enumerate(tower.gens):
        if g.kind == KIND_PI:
            low = elem.lowdeg_gen(i)
            if low < 0:
                key[i] = -low
                changed = True
    if not changed:
        return elem
    return elem.mul_gen_power_multi(tuple(key))


def _prem(A, B, v):
    """Pseudo-remainder of A by B in the generator v (coefficients below v)."""
    da = A.deg_gen(v)
    db = B.deg_gen(v)
    lc_b = B.coeff_of_power(v, db)
    R = A
    while R and R.deg_gen(v) >= db:
        dr = R.deg_gen(v)
        lc_r = R.coeff_of_power(v, dr)
        R = R * lc_b - (lc_r * B).mul_gen_power(v, dr - db)
    return R


def _primitive_wrt(elem, v):
    """Divide out the gcd of the coefficients with respect to generator v."""
    if not elem:
        return elem
    coeffs = [elem.coeff_of_power(v, e) for e in elem.coefficients_on(v)]
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_ratfun():
            break
        g = tower_gcd(g, c)
    if g.is_ratfun():
        _, prim = content_and_primitive(elem)
        return prim
    q = try_exact_divide(elem, g)
    assert q is not None, "content must divide"
    _, prim = content_and_primitive(q)
    return prim


def _monomial_gcd(A, B):
    tower = A.tower
    keys = list(A.terms) + list(B.terms)
    key = tuple(min(k[i] for k in keys) for i in range(len(tower.gens)))
    return tower.monomial(key, 1)


def tower_gcd(A, B):
    """A gcd of two y-free tower elements, primitive with unit content."""
    if not A:
        return _canonical(B)
    if not B:
        return _canonical(A)
    if len(A.terms) == 1 or len(B.terms) == 1:
        # the gcd divides a monomial, so it is the largest common monomial
        return _monomial_gcd(A, B)
    if A == B:
        return _canonical(A)
    A = _shift_nonnegative(A)
    B = _shift_nonnegative(B)
    lv = max(A.top_level(), B.top_level())
    if lv == 0:
        return A.tower.one()
    v = lv - 1
    P = _primitive_wrt(A, v)
    Q = _primitive_wrt(B, v)
    if P.deg_gen(v) < Q.deg_gen(v):
        P, Q = Q, P
    while True:
        if Q.deg_gen(v) == 0:
            prim = A.tower.one()
            break
        R = _prem(P, Q, v)
        if not R:
            prim = _primitive_wrt(Q, v)
            break
        P, Q = Q, _primitive_wrt(R, v)
    cont = tower_gcd(_content_wrt(A, v), _content_wrt(B, v))
    return _canonical(prim * cont)


def _content_wrt(elem, v):
    coeffs = [elem.coeff_of_power(v, e) for e in elem.coefficients_on(v)]
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_ratfun():
            break
        g = tower_gcd(g, c)
    if g.is_ratfun():
        return elem.tower.one()
    return g


def _canonical(elem):
    if not elem:
        return elem
    _, prim = content_and_primitive(elem)
    return prim


def tower_divexact(num, den):
    """Exact division; raises when den does not divide num."""
    q = try_exact_divide(num, den)
    if q is None:
        raise ZeroDivisionError("inexact tower division")
    return q


def tower_lcm(A, B):
    if not A or not B:
        return A.tower.zero()
    return tower_divexact(A * B, tower_gcd(A, B))


def bareiss_left_nullspace(rows):
    """Left kernel basis of a matrix of y-free tower elements.

    Fraction-free forward elimination on the transpose (divisions by the
    previous pivot are exact), then one back-substitution pass over reduced
    fractions; the returned vectors are cleared to ring elements.
    """
    if not rows:
        return []
    tower = rows[0][0].tower
    nr, nc = len(rows), len(rows[0])
    # eliminate on the transpose: kernel of T = left kernel of the input
    t = [[rows[i][j] for i in range(nr)] for j in range(nc)]
    m, n = nc, nr
    pivots = []  # (row, col)
    prev = tower.one()
    r = 0
    for c in range(n):
        if r >= m:
            break
        pr = None
        for i in range(r, m):
            if t[i][c]:
                pr = i
                break
        if pr is None:
            continue
        t[r], t[pr] = t[pr], t[r]
        piv = t[r][c]
        for i in range(r + 1, m):
            for j in range(n):
                if j == c:
                    continue
                val = t[i][j] * piv - t[i][c] * t[r][j]
                t[i][j] = tower_divexact(val, prev) if val else tower.zero()
            t[i][c] = tower.zero()
        pivots.append((r, c))
        prev = piv
        r += 1
    pivot_cols = [c for _, c in pivots]
    free = [c for c in range(n) if c not in pivot_cols]
    basis = []
    one = TowerFraction.one(tower)
    zero_f = one - one
    for fc in free:
        vec = [zero_f] * n
        vec[fc] = one
        for (pr, pc) in reversed(pivots):
            acc = zero_f
            for j in range(n):
                if j != pc and vec[j]:
                    if t[pr][j]:
                        acc = acc + TowerFraction(t[pr][j]) * vec[j]
            if acc:
                vec[pc] = (zero_f - acc) / TowerFraction(t[pr][pc])
        basis.append(clear_fraction_vector(vec))
    return basis


def clear_fraction_vector(vec):
    """Scale a vector of tower fractions to ring elements (lcm clearing)."""
    lcm = None
    for e in vec:
        if e and e.den != e.num.tower.one():
            lcm = e.den if lcm is None else tower_lcm(lcm, e.den)
    if lcm is None:
        return [e.num for e in vec]
    out = []
    for e in vec:
        if not e:
            out.append(e.num)
        else:
            out.append(e.num * tower_divexact(lcm, e.den))
    return out


class TowerFraction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalize=True):
        tower = num.tower
        if den is None:
            den = tower.one()
        if not den:
            raise ZeroDivisionError("tower fraction with zero denominator")
        if not num:
            den = tower.one()
        elif normalize and den != tower.one():
            if len(den.terms) == 1 and den.is_unit():
                num = num * den.invert_unit()
                den = tower.one()
            else:
                g = tower_gcd(num, den)
                if g.top_level() > 0:
                    num = tower_divexact(num, g)
                    den = tower_divexact(den, g)
                ncontent, nprim = content_and_primitive(num)
                dcontent, dprim = content_and_primitive(den)
                num = nprim * (ncontent / dcontent)
                den = dprim
                if len(den.terms) == 1 and den.is_unit():
                    num = num * den.invert_unit()
                    den = tower.one()
        self.num = num
        self.den = den

    @staticmethod
    def from_element(e):
        return TowerFraction(e)

    @staticmethod
    def one(tower):
        return TowerFraction(tower.one())

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        if not isinstance(other, TowerFraction):
            return NotImplemented
        if self.den == other.den:
            return TowerFraction(self.num + other.num, self.den)
        return TowerFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return TowerFraction(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        if not isinstance(other, TowerFraction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TowerFraction):
            return NotImplemented
        return TowerFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, TowerFraction):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero tower fraction")
        return TowerFraction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, TowerFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        if self.den == self.num.tower.one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"

"""Parameterized pseudo-orbit problem over K(x) with sigma(x) = x + step.

Computes a Z-basis of { z : f_1^z_1 ... f_d^z_d = sigma(g)/g for some g }.
A sigma-quotient of a rational function has trivial constant part and, along
every shift orbit of monic factors, exponents summing to zero.  The factor
structure is obtained without factorization: squarefree split plus a
gcd/dispersion refinement into a pairwise shift-coprime basis; the constant
parts contribute a prime-exponent lattice and a root-of-unity congruence.
"""

from __future__ import annotations

from fractions import Fraction

from ..algebra.lattice import kernel_with_congruences
from ..algebra.poly import Poly, dispersion, poly_gcd
from ..errors import UnsupportedConstantField


def _squarefree_parts(p):
    # [(s, mult)] with p = lc * prod s^mult, s monic squarefree
    out = []
    work = p.monic()
    g = poly_gcd(work, work.derivative())
    c = work // g
    k = 1
    while c.degree > 0:
        d = poly_gcd(g, c)
        s = c // d
        if s.degree > 0:
            out.append((s.monic(), k))
        g = g // d
        c = d
        k += 1
    return out


def _two_sided_shifts(p, b, step):
    shifts = {int(j) for j in dispersion(p, b, step)}
    shifts.update(-int(j) for j in dispersion(b, p, step))
    return sorted(shifts)


def shift_coprime_basis(polys, step):
    """Refine monic squarefree polys into a pairwise (and self) shift-coprime set."""
    work = [p.monic() for p in polys if p.degree > 0]
    basis = []
    while work:
        p = work.pop()
        if p.degree == 0:
            continue
        # self overlap: p shares a factor with a shift of itself
        self_shifts = [j for j in dispersion(p, p, step) if j > 0]
        if self_shifts:
            d = poly_gcd(p, p.shift(Fraction(step) * self_shifts[0]))
            work.extend([d, p // d])
            continue
        split = False
        for b in basis:
            for j in _two_sided_shifts(p, b, step):
                shifted = b.shift(Fraction(step) * j)
                d = poly_gcd(p, shifted)
                if d.degree == 0:
                    continue
                if d == p and p == shifted:
                    # p is exactly a shift of b: nothing new
                    split = True
                    break
                basis.remove(b)
                pieces = [d.shift(Fraction(step) * (-j)), b // d.shift(Fraction(step) * (-j))]
                if d != p:
                    pieces.extend([d, p // d])
                else:
                    pieces.append(p)
                work.extend(q for q in pieces if q.degree > 0)
                split = True
                break
            if split:
                break
        if not split:
            basis.append(p)
    return basis


def _exponents_over_basis(p, basis, step):
    """Write monic p as a product of shifts of basis elements.

    Returns {(basis_index, shift): exponent}; raises if p does not decompose
    (cannot happen after refinement over p's own squarefree parts).
    """
    out = {}
    for s, mult in _squarefree_parts(p):
        rem = s
        for bi, b in enumerate(basis):
            if rem.degree == 0:
                break
            for j in _two_sided_shifts(rem, b, step):
                shifted = b.shift(Fraction(step) * j)
                q, r = rem.divmod(shifted)
                if not r and q:
                    out[(bi, j)] = out.get((bi, j), 0) + mult
                    rem = q
        if rem.degree != 0:
            raise AssertionError("shift-coprime refinement failed to cover a factor")
    return out


def _roots_of_unity_order(field):
    return field.m if field.m % 2 == 0 else 2 * field.m


def _unity_generator(field):
    if field.m == 1:
        return field.from_rational(-1)
    z = field.zeta()
    if field.m % 2 == 0:
        return z
    return -z


def _constant_split(c):
    """c = zeta_M^t * q with q a positive rational; raises when impossible."""
    field = c.field
    M = _roots_of_unity_order(field)
    inv = _unity_generator(field).inverse()
    cand = c
    for t in range(M):
        if cand.is_rational():
            q = cand.rational_value()
            if q > 0:
                return t, q
            # fold the sign into the root of unity: -1 = gen^(M/2)
            return (t + M // 2) % M, -q
        cand = cand * inv
    raise UnsupportedConstantField(f"constant part {c!r} is not a root of unity times a rational")


def _prime_exponents(q):
    # q positive Fraction -> {prime: exponent}
    out = {}
    for value, sign in ((q.numerator, 1), (q.denominator, -1)):
        n = value
        p = 2
        while p * p <= n:
            while n % p == 0:
                out[p] = out.get(p, 0) + sign
                n //= p
            p += 1 if p == 2 else 2
        if n > 1:
            out[n] = out.get(n, 0) + sign
    return out


def pseudo_orbit_basis(f, step=1):
    """Z-module basis of the pseudo-orbit lattice of nonzero f_i in K(x)."""
    if any(not fi for fi in f):
        raise ValueError("pseudo-orbit inputs must be nonzero")
    field = f[0].field
    d = len(f)
    consts = []
    poly_data = []
    pool = []
    for fi in f:
        k = fi.num.lc() / fi.den.lc()
        consts.append(k)
        num_parts = _squarefree_parts(fi.num) if fi.num.degree > 0 else []
        den_parts = _squarefree_parts(fi.den) if fi.den.degree > 0 else []
        poly_data.append((num_parts, den_parts))
        pool.extend(s for s, _ in num_parts)
        pool.extend(s for s, _ in den_parts)
    basis = shift_coprime_basis(pool, step)
    # orbit-sum conditions: one row per basis element
    orbit_rows = []
    per_f_orbit = []
    for num_parts, den_parts in poly_data:
        totals = [0] * len(basis)
        for parts, sgn in ((num_parts, 1), (den_parts, -1)):
            for s, mult in parts:
                for (bi, _j), e in _exponents_over_basis(s, basis, step).items():
                    totals[bi] += sgn * e * mult
        per_f_orbit.append(totals)
    for bi in range(len(basis)):
        orbit_rows.append([per_f_orbit[i][bi] for i in range(d)])
    # constant-part conditions
    splits = [_constant_split(c) for c in consts]
    M = _roots_of_unity_order(field)
    primes = sorted({p for _, q in splits for p in _prime_exponents(Fraction(q))})
    prime_rows = [[_prime_exponents(Fraction(q)).get(p, 0) for _, q in splits] for p in primes]
    unity_row = [[t for t, _ in splits]]
    rows = orbit_rows + prime_rows
    out = kernel_with_congruences(rows, unity_row, M)
    return sorted(out)

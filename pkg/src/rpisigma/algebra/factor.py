"""Univariate factorization over Q.

Pipeline: rational-root extraction, then squarefree decomposition (Yun), then
a Zassenhaus round (factor mod p, Hensel lift, subset recombination) on each
rootless squarefree part.  Inputs must have rational coefficients.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt

from .poly import Poly, poly_gcd, _divisors_upto, _gcd_int

_EDF_RNG = random.Random(0x5EED)


def _to_fraction_list(p):
    out = []
    for c in p.coeffs:
        if not c.is_rational():
            raise ValueError("factorization requires rational coefficients")
        out.append(c.rational_value())
    return out


def _to_int_primitive(fracs):
    lcm = 1
    for v in fracs:
        g = _gcd_int(lcm, v.denominator)
        lcm = lcm // g * v.denominator
    ints = [int(v * lcm) for v in fracs]
    content = 0
    for v in ints:
        content = _gcd_int(content, v)
    if content == 0:
        return [], Fraction(0)
    ints = [v // content for v in ints]
    return ints, Fraction(content, lcm)


def _rational_root_candidates(ints):
    if ints[0] == 0:
        yield Fraction(0)
        while ints and ints[0] == 0:
            ints = ints[1:]
        if len(ints) <= 1:
            return
    a0, an = ints[0], ints[-1]
    d0 = _divisors_upto(a0)
    dn = _divisors_upto(an)
    if d0 is None or dn is None:
        raise RuntimeError("root candidate search out of supported range")
    for p in d0:
        for q in dn:
            if _gcd_int(p, q) == 1:
                yield Fraction(p, q)
                yield Fraction(-p, q)


def rational_roots(p):
    """All rational roots of p (without multiplicity)."""
    fracs = _to_fraction_list(p)
    ints, _ = _to_int_primitive(fracs)
    if not ints:
        raise ValueError("zero polynomial")
    field = p.field
    roots = []
    seen = set()
    for cand in _rational_root_candidates(ints):
        if cand in seen:
            continue
        seen.add(cand)
        if p.evaluate(cand) == field.zero:
            roots.append(cand)
    return sorted(roots)


def _yun_squarefree(p):
    # monic p over Q; returns [(s_k, k)] with p = prod s_k^k
    out = []
    g = poly_gcd(p, p.derivative())
    c = p // g
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


# --- arithmetic mod a prime, on ascending int lists ---------------------------


def _pnorm(a, p):
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pnorm(out, p)


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _pnorm(out, p)


def _pdivmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    quo = [0] * max(1, len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = (a[i + db] * inv) % p
        quo[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return _pnorm(quo, p), _pnorm(a[:db], p)


def _pgcd(a, b, p):
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def _pmonic(a, p):
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _equal_degree_split(f, d, p):
    # f monic squarefree, all irreducible factors of degree d, p odd
    n = len(f) - 1
    if n == d:
        return [f]
    half = (p**d - 1) // 2
    while True:
        r = [_EDF_RNG.randrange(p) for _ in range(n)] + [1]
        g = _pgcd(f, r, p)
        if 0 < len(g) - 1 < n:
            pass
        else:
            w = _psub(_ppowmod(r, half, f, p), [1], p)
            g = _pgcd(f, w, p)
            if not (0 < len(g) - 1 < n):
                continue
        q, _ = _pdivmod(f, g, p)
        return _equal_degree_split(g, d, p) + _equal_degree_split(_pmonic(q, p), d, p)


def _factor_mod_p(f, p):
    # distinct degree then equal degree; f monic squarefree mod p
    out = []
    h = [0, 1]  # x
    v = list(f)
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, f, p)
        g = _pgcd(v, _psub(h, [0, 1], p), p)
        if len(g) - 1 > 0:
            out.extend(_equal_degree_split(g, d, p))
            v, _ = _pdivmod(v, g, p)
            v = _pmonic(v, p)
    if len(v) - 1 > 0:
        out.append(_pmonic(v, p))
    return out


# --- Hensel lifting -----------------------------------------------------------


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zsub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _lift_pair(f, g0, h0, p, pk):
    # f monic over Z/pk, f = g0*h0 mod p with g0, h0 monic; returns (g, h) mod pk
    s, t = _bezout(g0, h0, p)
    g, h = list(g0), list(h0)
    q = p
    while q < pk:
        e = [c % (q * p) for c in _zsub(f, _zmul(g, h))]
        assert all(c % q == 0 for c in e)
        e = _pnorm([(c // q) % p for c in e], p)
        u = _pdivmod(_pmul(t, e, p), g, p)[1]
        rest = _psub(e, _pmul(u, h, p), p)
        v, r = _pdivmod(rest, g, p)
        assert not r
        g = [((g[i] if i < len(g) else 0) + q * (u[i] if i < len(u) else 0)) % (q * p) for i in range(len(g))]
        h = [((h[i] if i < len(h) else 0) + q * (v[i] if i < len(v) else 0)) % (q * p) for i in range(len(h))]
        q *= p
    return g, h


def _bezout(g, h, p):
    # s*g + t*h = 1 mod p for coprime g, h
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    s = [(c * inv) % p for c in s0]
    t = [(c * inv) % p for c in t0]
    return s, t


def _lift_tree(f, factors, p, pk):
    if len(factors) == 1:
        return [[c % pk for c in f]]
    mid = len(factors) // 2
    g0 = [1]
    for fac in factors[:mid]:
        g0 = _pmul(g0, fac, p)
    h0 = [1]
    for fac in factors[mid:]:
        h0 = _pmul(h0, fac, p)
    g, h = _lift_pair(f, g0, h0, p, pk)
    return _lift_tree(g, factors[:mid], p, pk) + _lift_tree(h, factors[mid:], p, pk)


def _center(c, pk):
    c %= pk
    return c - pk if c > pk // 2 else c


def _trial_divide(num, den):
    # exact division of integer polynomials, None if not divisible
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return None
    quo = [0] * (len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd]
        if c % den[dd]:
            return None
        c //= den[dd]
        quo[i] = c
        if c:
            for j, y in enumerate(den):
                num[i + j] -= c * y
    if any(num):
        return None
    return quo


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _zassenhaus_monic(ints):
    # ints: monic squarefree integer polynomial, degree >= 2, no rational roots
    n = len(ints) - 1
    p = 3
    while True:
        if _is_prime(p):
            fp = _pnorm(ints, p)
            if len(fp) - 1 == n:
                dfp = _pnorm([i * c for i, c in enumerate(ints)][1:], p)
                if dfp and len(_pgcd(fp, dfp, p)) == 1:
                    break
        p += 2
    modular = _factor_mod_p(_pmonic(fp, p), p)
    if len(modular) == 1:
        return [ints]
    norm2 = isqrt(sum(c * c for c in ints)) + 1
    bound = 2 ** (n + 1) * norm2
    pk = p
    while pk <= 2 * bound:
        pk *= p
    lifted = _lift_tree([c % pk for c in ints], modular, p, pk)
    result = []
    remaining = list(range(len(lifted)))
    current = list(ints)
    size = 1
    while 2 * size <= len(remaining):
        found = True
        while found:
            found = False
            for subset in _subsets(remaining, size):
                prod = [1]
                for idx in subset:
                    prod = [_center(c, pk) for c in _zmul(prod, lifted[idx])]
                    prod = [c % pk for c in prod]
                cand = [_center(c, pk) for c in prod]
                quo = _trial_divide(current, cand)
                if quo is not None:
                    result.append(cand)
                    current = quo
                    remaining = [i for i in remaining if i not in subset]
                    found = True
                    break
            if 2 * size > len(remaining):
                break
        size += 1
    if len(current) - 1 > 0:
        result.append(current)
    return result


def _subsets(items, size):
    from itertools import combinations

    return combinations(items, size)


def factor_univariate(p):
    """Factor p over Q as content * product of monic irreducibles.

    Returns (content, [(factor, multiplicity)]) with content a Constant of
    p's field and each factor a monic Poly; the product reproduces p exactly.
    """
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    field = p.field
    content = p.lc()
    work = p.monic()
    factors = {}

    def add(fac, mult):
        key = fac.coeffs
        if key in factors:
            factors[key] = (fac, factors[key][1] + mult)
        else:
            factors[key] = (fac, mult)

    # rational roots first, with multiplicity
    for r in rational_roots(work):
        lin = Poly.from_rationals(field, [-r, 1])
        while work.degree > 0 and not (work % lin):
            work = work // lin
            add(lin, 1)
    # squarefree decomposition of the rootless residue
    for part, mult in _yun_squarefree(work):
        if part.degree <= 3:
            # no rational roots left, so degree <= 3 parts are irreducible
            add(part, mult)
            continue
        ints, _ = _to_int_primitive(_to_fraction_list(part))
        lead = ints[-1]
        if lead != 1:
            monic_ints = [c * lead ** (len(ints) - 2 - i) for i, c in enumerate(ints[:-1])]
            monic_ints.append(1)
        else:
            monic_ints = ints
        for fac_ints in _zassenhaus_monic(monic_ints):
            if lead != 1:
                back = [Fraction(c, lead ** (len(fac_ints) - 1 - i)) for i, c in enumerate(fac_ints)]
                fac = Poly.from_rationals(field, back).monic()
            else:
                fac = Poly.from_rationals(field, fac_ints)
            add(fac, mult)
    return content, sorted(factors.values(), key=lambda t: (t[0].degree, [repr(c) for c in t[0].coeffs]))


def monic_divisors(p):
    """All monic divisors of p over Q (including 1 and the monic part of p)."""
    _, facs = factor_univariate(p) if p.degree > 0 else (None, [])
    divisors = [Poly.constant(p.field, 1)]
    for fac, mult in facs:
        new = []
        for d in divisors:
            cur = d
            for _ in range(mult):
                cur = cur * fac
                new.append(cur)
        divisors.extend(new)
    return divisors

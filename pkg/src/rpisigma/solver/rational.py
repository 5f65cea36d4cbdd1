"""Complete solver for parameterized linear difference equations over K(x).

The automorphism is x -> x + step.  The solution space of

    a_0 g + a_1 sigma(g) + ... + a_m sigma^m(g) = c_1 f_1 + ... + c_d f_d

is found by bounding a universal denominator (Abramov-style, driven by the
dispersion of the trailing against the shifted leading coefficient), bounding
the numerator degree through the indicial polynomial at infinity, and solving
one K-linear system in the numerator coefficients and the parameters c.
"""

from __future__ import annotations

from fractions import Fraction

from ..algebra.matrix import Matrix
from ..algebra.poly import Poly, dispersion, nonneg_integer_roots, poly_gcd, poly_lcm
from ..algebra.ratfun import RatFun


def _strip_zero_ends(a):
    i0 = 0
    while not a[i0]:
        i0 += 1
    i1 = len(a) - 1
    while not a[i1]:
        i1 -= 1
    return a[i0 : i1 + 1], i0


def _clear_denominators(a, f):
    field = a[0].field
    lcm = Poly.constant(field, 1)
    for r in list(a) + list(f):
        if r:
            lcm = poly_lcm(lcm, r.den)
    ap = [(ai * lcm).num if ai else Poly(field, ()) for ai in a]
    fp = [(fj * lcm).num if fj else Poly(field, ()) for fj in f]
    return ap, fp


def universal_denominator(a_polys, step):
    """Abramov's denominator bound for the cleared equation."""
    field = a_polys[0].field
    m = len(a_polys) - 1
    A = a_polys[-1].shift(Fraction(step) * (-m)).monic()
    B = a_polys[0].monic()
    u = Poly.constant(field, 1)
    if A.degree < 1 or B.degree < 1:
        return u
    disp = sorted(dispersion(A, B, step), reverse=True)
    for j in disp:
        d = poly_gcd(A, B.shift(Fraction(step) * j))
        if d.degree < 1:
            continue
        A = A // d
        B = B // d.shift(Fraction(step) * (-j))
        for l in range(j + 1):
            u = u * d.shift(Fraction(step) * (-l))
    return u


def _binomial_poly(field, u):
    # C(n, u) as a polynomial in n
    num = Poly.constant(field, 1)
    n = Poly.x(field)
    fact = 1
    for l in range(u):
        num = num * (n - l)
        fact *= l + 1
    return num * Poly.constant(field, Fraction(1, fact))


def polynomial_degree_bound(a_polys, step, rhs_degrees):
    """Largest possible numerator degree, via the indicial polynomial."""
    field = a_polys[0].field
    m = len(a_polys) - 1
    D = max(p.degree for p in a_polys if p)
    step = Fraction(step)
    phi = None
    rstar = None
    for r in range(D + m + 1):
        acc = Poly(field, ())
        for i, p in enumerate(a_polys):
            if not p:
                continue
            for u in range(r + 1):
                s = r - u
                cidx = D - s
                if cidx < 0:
                    continue
                c = p.coeff(cidx)
                if not c:
                    continue
                term = _binomial_poly(field, u) * Poly.constant(field, c * field.from_rational(step**u * i**u))
                acc = acc + term
        if acc:
            phi, rstar = acc, r
            break
    assert phi is not None, "nonzero operator must have a nonvanishing symbol"
    candidates = [-1]
    rhs_max = max([d for d in rhs_degrees if d is not None], default=None)
    if rhs_max is not None:
        candidates.append(rhs_max - D + rstar)
    candidates.extend(nonneg_integer_roots(phi))
    return max(candidates)


def solve_rational(a, f, step=1):
    """K-basis of all (c_1..c_d, g) in K^d x K(x) solving the equation.

    a: list of RatFun, not all zero; f: list of RatFun (parameters).
    Returns a list of (constants tuple, RatFun) pairs in echelon form.
    """
    field = a[0].field
    d = len(f)
    stripped, i0 = _strip_zero_ends(a)
    if i0 or len(stripped) != len(a):
        inner = solve_rational(stripped, [fj for fj in f], step)
        return [(c, g.shift(Fraction(step) * (-i0))) for c, g in inner]
    m = len(a) - 1
    if m == 0:
        basis = []
        for j in range(d):
            c = [field.one if i == j else field.zero for i in range(d)]
            basis.append((c, f[j] / a[0]))
        return _echelonize_rational(basis, field)
    ap, fp = _clear_denominators(a, f)
    u = universal_denominator(ap, step)
    # multiply the equation by lcm_i u(x + i*step) after substituting g = p/u
    shifts = [u.shift(Fraction(step) * i) for i in range(m + 1)]
    lam = shifts[0]
    for s in shifts[1:]:
        lam = poly_lcm(lam, s)
    ahat = [ap[i] * (lam // shifts[i]) for i in range(m + 1)]
    fhat = [fj * lam for fj in fp]
    n_bound = polynomial_degree_bound(
        ahat, step, [fj.degree if fj else None for fj in fhat]
    )
    # rows: coefficient of x^e in sum_r p_r * L[x^r] - sum_j c_j fhat_j
    images = []
    for r in range(max(n_bound + 1, 0)):
        img = Poly(field, ())
        xr = Poly.x(field) ** r
        for i, p in enumerate(ahat):
            if p:
                img = img + p * xr.shift(Fraction(step) * i)
        images.append(img)
    height = max(
        [img.degree for img in images if img] + [fj.degree for fj in fhat if fj] + [0]
    )
    nvars = len(images) + d
    rows = []
    for e in range(height + 1):
        row = [img.coeff(e) for img in images]
        row.extend(-fj.coeff(e) for fj in fhat)
        rows.append(row)
    null = Matrix(rows, field.one).nullspace() if rows else []
    basis = []
    np = len(images)
    for vec in null:
        p = Poly(field, vec[:np])
        c = vec[np:]
        basis.append((list(c), RatFun(p, u)))
    return _echelonize_rational(basis, field)


def _echelonize_rational(basis, field):
    """Reduced echelon form over K ordered by (c-part, then numerator coeffs)."""
    if not basis:
        return []
    d = len(basis[0][0])
    den = Poly.constant(field, 1)
    for _, g in basis:
        den = poly_lcm(den, g.den)
    width = 0
    nums = []
    for c, g in basis:
        p = g.num * (den // g.den)
        nums.append(p)
        width = max(width, p.degree + 1)
    rows = []
    for (c, _), p in zip(basis, nums):
        rows.append(list(c) + [p.coeff(i) for i in range(width)])
    rref_rows, _ = Matrix(rows, field.one).rref()
    out = []
    for row in rref_rows:
        if not any(row):
            continue
        c = row[:d]
        p = Poly(field, row[d:])
        out.append((list(c), RatFun(p, den)))
    return out

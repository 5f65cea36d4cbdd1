from fractions import Fraction

import pytest

from rpisigma.algebra import (
    CyclotomicField,
    Poly,
    dispersion,
    interpolate,
    nonneg_integer_roots,
    poly_gcd,
    poly_lcm,
    resultant,
)
from conftest import seeded


@pytest.fixture
def x(Q):
    return Poly.x(Q)


def test_divmod_and_gcd(Q, x):
    q, r = (x**3 + 2 * x).divmod(x**2 + 1)
    assert q == x and r == x
    assert poly_gcd((x - 1) * (x - 2), (x - 2) * (x - 3)) == x - 2
    assert poly_lcm(x - 1, (x - 1) * (x + 1)) == (x - 1) * (x + 1)
    assert not poly_gcd(Poly(Q, ()), Poly(Q, ()))


def test_shift_and_evaluate(Q, x):
    assert (x**2).shift(1) == x**2 + 2 * x + 1
    assert (x**2 + 1).evaluate(2) == Q.from_rational(5)
    assert (x**3).shift(Fraction(-1, 2)).evaluate(Fraction(1, 2)) == Q.zero


def test_resultant_roots(Q, x):
    # Res(x-a, x-b) = a-b
    assert resultant(x - 3, x - 5) == Q.from_rational(-2)
    assert resultant((x - 1) * (x - 2), x - 1) == Q.zero
    assert resultant(x**2 + 1, x**2 - 1) == Q.from_rational(4)


def test_interpolation(Q, x):
    pts = [(Q.from_rational(i), Q.from_rational(i * i)) for i in range(3)]
    assert interpolate(Q, pts) == x**2


def test_nonneg_integer_roots(Q, x):
    assert nonneg_integer_roots((x - 3) * (x + 2) * x) == [0, 3]
    assert nonneg_integer_roots(x**2 + 1) == []
    assert nonneg_integer_roots(2 * x - 5) == []
    assert nonneg_integer_roots(3 * x - 6) == [2]


def test_dispersion_goldens(Q, x):
    assert dispersion(x, x) == {0}
    assert dispersion(x + 3, x) == {3}
    assert dispersion(x * (x + 2), x * (x + 1)) == {0, 1, 2}
    assert dispersion(x + 6, x, step=2) == {3}
    assert dispersion(x + 5, x, step=2) == set()


def test_dispersion_matches_brute_force(Q, x):
    rng = seeded(7)
    for _ in range(50):
        p = Poly.from_rationals(Q, [rng.randint(-4, 4) for _ in range(rng.randint(2, 6))])
        q = Poly.from_rationals(Q, [rng.randint(-4, 4) for _ in range(rng.randint(2, 6))])
        if p.degree < 1 or q.degree < 1:
            continue
        got = dispersion(p, q)
        brute = set()
        for j in range(0, 40):
            if poly_gcd(p, q.shift(j)).degree > 0:
                brute.add(j)
        assert got == brute, (p, q)


def test_dispersion_cyclotomic_path():
    K = CyclotomicField(4)
    x = Poly.x(K)
    z = K.zeta()
    p = (x - Poly.constant(K, z)) * (x + 1)
    q = (x - Poly.constant(K, z)) * (x - 3)
    # shared root zeta at shift 0; x+1 vs x-3 at shift... -1 vs 3: j = -4 no; 3-(-1)=4: q(x+4): x+1 factor
    assert dispersion(p, q) == {0, 4}

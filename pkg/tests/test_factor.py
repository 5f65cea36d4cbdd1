from fractions import Fraction

import pytest

from rpisigma.algebra import Poly, factor_univariate, monic_divisors, rational_roots
from conftest import seeded


@pytest.fixture
def x(Q):
    return Poly.x(Q)


def reconstruct(Q, content, factors):
    prod = Poly.constant(Q, content)
    for fac, mult in factors:
        prod = prod * fac**mult
    return prod


def test_factor_goldens(Q, x):
    _, facs = factor_univariate(x**2 - 1)
    assert {repr(f) for f, _ in facs} == {repr(x - 1), repr(x + 1)}
    _, facs = factor_univariate(x**2 + 1)
    assert len(facs) == 1 and facs[0][0] == x**2 + 1
    _, facs = factor_univariate(x**3 - 2 * x**2 - x + 2)
    assert {repr(f) for f, _ in facs} == {repr(x - 1), repr(x + 1), repr(x - 2)}


def test_factor_reconstructs_input(Q, x):
    rng = seeded(11)
    irreducibles = [x - 1, x + 2, x**2 + 1, x**2 + x + 1, x**2 - 2, x**3 + x + 1]
    for _ in range(12):
        p = Poly.constant(Q, Fraction(rng.randint(1, 5), rng.randint(1, 3)))
        for _ in range(rng.randint(1, 3)):
            p = p * irreducibles[rng.randrange(len(irreducibles))] ** rng.randint(1, 2)
        content, facs = factor_univariate(p)
        assert reconstruct(Q, content, facs) == p
        for fac, _ in facs:
            assert fac.lc() == Q.one
            if fac.degree > 1:
                assert rational_roots(fac) == []


def test_zassenhaus_on_products_of_quadratics(Q, x):
    p = (x**2 + x + 1) * (x**2 - x + 1) * (x**2 - 2)
    _, facs = factor_univariate(p)
    assert sorted(f.degree for f, _ in facs) == [2, 2, 2]
    assert reconstruct(Q, Q.one, facs) == p


def test_irreducible_quintic(Q, x):
    p = x**5 - x - 1
    _, facs = factor_univariate(p)
    assert facs == [(p, 1)]


def test_non_monic_and_multiplicity(Q, x):
    p = Poly.constant(Q, Fraction(1, 2)) * (x - 1) ** 2 * (x**2 + 1)
    content, facs = factor_univariate(p)
    assert content == Q.from_rational(Fraction(1, 2))
    assert sorted((f.degree, m) for f, m in facs) == [(1, 2), (2, 1)]
    p2 = Poly.from_rationals(Q, [1, 4, 5, 4, 4])  # (2x+1)^2 (x^2+1)
    content2, facs2 = factor_univariate(p2)
    assert reconstruct(Q, content2, facs2) == p2
    assert sorted((f.degree, m) for f, m in facs2) == [(1, 2), (2, 1)]


def test_rational_roots(Q, x):
    p = (2 * x - 1) * (x + 3) * x
    assert rational_roots(p) == [-3, 0, Fraction(1, 2)]


def test_monic_divisors(Q, x):
    divs = monic_divisors((x - 1) * (x - 2))
    assert len(divs) == 4
    divs2 = monic_divisors((x - 1) ** 2)
    assert len(divs2) == 3
    assert monic_divisors(Poly.constant(Q, 5)) == [Poly.constant(Q, 1)]

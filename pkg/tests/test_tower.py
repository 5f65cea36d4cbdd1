from fractions import Fraction

import pytest

from rpisigma.algebra import Poly, RatFun
from rpisigma.errors import MultipleRGenerators, NotPrimitiveRoot, SubringViolation
from rpisigma.tower import Tower
from conftest import make_worked_tower, random_element, seeded


def one_over(t, p):
    return t.from_ratfun(RatFun(Poly.constant(t.field, 1), p))


def test_worked_tower_accepted(worked_tower):
    assert worked_tower.gen_names() == ["y", "s", "sb"]
    assert worked_tower.rorder == 2


def test_rgen_ratio_must_be_primitive():
    with pytest.raises(NotPrimitiveRoot):
        Tower(2).add_rgen("y", 2, 1)
    with pytest.raises(NotPrimitiveRoot):
        Tower(4).add_rgen("y", 4, -1)


def test_single_rgen_directly_above_base():
    t = Tower(4)
    t.add_rgen("y", 4, t.field.zeta())
    with pytest.raises(MultipleRGenerators):
        t.add_rgen("w", 2, -1)
    t2 = Tower(2)
    t2.add_sgen("s", 1)
    with pytest.raises(SubringViolation):
        t2.add_rgen("y", 2, -1)


def test_pgen_ratio_validation():
    t = Tower(1)
    with pytest.raises(SubringViolation):
        t.add_pgen("p", 0)
    t.add_pgen("p", 2)
    with pytest.raises(SubringViolation):
        # ratio may not involve generators
        t.add_pgen("q", t.gen_element("p"))


def test_duplicate_names_rejected():
    t = Tower(1)
    t.add_sgen("s", 1)
    with pytest.raises(SubringViolation):
        t.add_sgen("s", 1)
    with pytest.raises(SubringViolation):
        t.add_sgen("x", 1)


def test_products_reorder_below_sums():
    t = Tower(1)
    t.add_sgen("h", one_over(t, Poly.x(t.field) + 1))
    t.add_pgen("p", 2)
    t.freeze()
    assert t.gen_names() == ["p", "h"]
    sig = t.sigma_automorphism()
    h = t.gen_element("h")
    assert sig.sigma(h) == h + one_over(t, Poly.x(t.field) + 1)
    p = t.gen_element("p")
    assert sig.sigma(p) == 2 * p


def test_sigma_goldens(worked_tower):
    t = worked_tower
    sig = t.sigma_automorphism()
    xp = Poly.x(t.field)
    y, s, sb = t.gen_element("y"), t.gen_element("s"), t.gen_element("sb")
    assert sig.sigma(y) == -y
    assert sig.sigma(sb, 2) == sb - y * one_over(t, (xp + 1) * (xp + 2))
    assert sig.sigma(s, -1) == s - one_over(t, xp)
    assert y * y == t.one()


def test_sigma_factorial(worked_tower):
    t = worked_tower
    sig = t.sigma_automorphism()
    xp = Poly.x(t.field)
    x = t.x()
    assert sig.sigma_factorial(x, 3) == t.from_ratfun(RatFun(xp * (xp + 1) * (xp + 2)))
    assert sig.sigma_factorial(x, 0) == t.one()
    assert sig.sigma_factorial(t.from_scalar(-1), 2) == t.one()


def test_sigma_is_ring_homomorphism(worked_tower):
    t = worked_tower
    sig = t.sigma_automorphism()
    rng = seeded(23)
    for _ in range(60):
        g = random_element(t, rng)
        h = random_element(t, rng)
        assert sig.sigma(g * h) == sig.sigma(g) * sig.sigma(h)
        assert sig.sigma(g + h) == sig.sigma(g) + sig.sigma(h)
        assert sig.sigma(sig.sigma(g, -1)) == g
        assert sig.sigma(g, 3) == sig.sigma(sig.sigma(sig.sigma(g)))


def test_units_and_division(worked_tower):
    t = worked_tower
    y = t.gen_element("y")
    s = t.gen_element("s")
    x = t.x()
    assert y.is_unit()
    assert (2 * y).invert_unit() * (2 * y) == t.one()
    assert not s.is_unit()
    with pytest.raises(ValueError):
        (s + 1).invert_unit()
    assert (x * y) / y == x
    with pytest.raises(ValueError):
        t.one().mul_gen_power(t.index_of("s"), -1)


def test_element_structure(worked_tower):
    t = worked_tower
    s = t.gen_element("s")
    sb = t.gen_element("sb")
    x = t.x()
    e = x * s * s + sb + 3
    assert e.deg_gen(t.index_of("s")) == 2
    assert e.top_level() == 3
    assert e.coeff_of_power(t.index_of("s"), 2) == x
    assert (s - s) == t.zero()
    assert e.to_ratfun if e.is_ratfun() else True
    with pytest.raises(ValueError):
        e.to_ratfun()

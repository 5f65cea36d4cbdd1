from fractions import Fraction

import pytest

from rpisigma.algebra import Poly, RatFun
from rpisigma.errors import PoleAtIndex
from rpisigma.evaluate import Evaluator
from rpisigma.tower import Tower
from conftest import random_element, seeded


def test_eval_goldens(worked_tower):
    t = worked_tower
    ev = Evaluator(t)
    f = t.field
    assert ev.value(t.gen_element("s"), 3) == f.from_rational(Fraction(11, 6))
    assert ev.value(t.gen_element("y"), 5) == f.from_rational(-1)
    assert ev.value(t.gen_element("sb"), 2) == f.from_rational(Fraction(-1, 2))
    assert ev.value(t.x(), 7) == f.from_rational(7)
    assert ev.value(t.zero(), 4) == f.zero


def test_eval_product_generator():
    t = Tower(1)
    t.add_pgen("p", 2)
    t.freeze()
    ev = Evaluator(t)
    p = t.gen_element("p")
    assert ev.value(p, 5) == t.field.from_rational(32)
    assert ev.value(p**-2, 3) == t.field.from_rational(Fraction(1, 64))


def test_eval_sigma_commutation(worked_tower):
    t = worked_tower
    sig = t.sigma_automorphism()
    ev = Evaluator(t)
    rng = seeded(31)
    for _ in range(40):
        g = random_element(t, rng)
        sg = sig.sigma(g)
        for n in range(3, 12):
            assert ev.value(sg, n) == ev.value(g, n + 1)


def test_pole_detection():
    t = Tower(1)
    f = t.field
    xp = Poly.x(f)
    t.add_sgen("h", t.from_ratfun(RatFun(Poly.constant(f, 1), xp - 2)))
    t.freeze()
    ev = Evaluator(t)
    with pytest.raises(PoleAtIndex):
        # the sum hits delta(2) = 1/0 when reaching index 3
        ev.value(t.gen_element("h"), 5)
    elem = t.from_ratfun(RatFun(Poly.constant(f, 1), xp - 4))
    with pytest.raises(PoleAtIndex):
        ev.value(elem, 4)
    assert ev.value(elem, 5) == f.from_rational(1)


def test_vanishing_product_ratio_is_pole():
    t = Tower(1)
    f = t.field
    xp = Poly.x(f)
    t.add_pgen("p", RatFun(xp - 1))
    t.freeze()
    ev = Evaluator(t)
    with pytest.raises(PoleAtIndex):
        ev.value(t.gen_element("p"), 3)


def test_check_plde(worked_tower):
    t = worked_tower
    ev = Evaluator(t)
    # sigma(g) - g = 1/((x+1)(x+2)) is solved by g = -1/(x+1)
    f = t.field
    xp = Poly.x(f)
    a = [-t.one(), t.one()]
    rhs = [t.from_ratfun(RatFun(Poly.constant(f, 1), (xp + 1) * (xp + 2)))]
    g = t.from_ratfun(RatFun(Poly.constant(f, -1), xp + 1))
    for n in range(0, 20):
        assert not ev.check_plde(a, rhs, [f.one], g, n)
    assert ev.check_plde(a, rhs, [f.zero], g, 1)

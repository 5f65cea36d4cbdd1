import random
from fractions import Fraction

import pytest

from rpisigma.algebra import CyclotomicField, Matrix, Poly, RatFun
from rpisigma.solver.linearize import Linearizer
from rpisigma.tower import Tower


@pytest.fixture
def Q():
    return CyclotomicField(1)


def make_worked_tower():
    """The running example: Q(x), y of order 2, harmonic and alternating sums."""
    t = Tower(2)
    t.add_rgen("y", 2, -1)
    field = t.field
    xp = Poly.x(field)
    t.add_sgen("s", t.from_ratfun(RatFun(Poly.constant(field, 1), xp + 1)))
    y = t.gen_element("y")
    t.add_sgen("sb", t.from_ratfun(RatFun(Poly.constant(field, 1), xp + 1)) * (-y))
    return t.freeze()


@pytest.fixture
def worked_tower():
    return make_worked_tower()


def worked_problem(t):
    """Coefficients and right-hand side of the order-2 example equation."""
    x = t.x()
    y = t.gen_element("y")
    s = t.gen_element("s")
    sb = t.gen_element("sb")
    one = t.one()
    a0 = (one + x) * (x + 2) * (-sb * (one + x) ** 2 + (2 * one + s + x + s * x) * y)
    a1 = (one + x) * (x + 2) * (-sb * (one + x) + (2 * one + x + 2 * one * s * (one + x)) * y)
    a2 = (one + x) ** 2 * (x + 2) * (sb * x + s * y)
    phi = s * (one + x) + (x + 2) ** 2 - 2 * one * sb * (one + x) ** 3 * y
    return [a0, a1, a2], phi


def random_element(tower, rng, max_terms=4, max_exp=2, coeff_den=True):
    """Random tower element with small exponents and rational-function coefficients."""
    field = tower.field
    xp = Poly.x(field)
    e = tower.zero()
    width = len(tower.gens)
    for _ in range(rng.randint(1, max_terms)):
        key = []
        for i, g in enumerate(tower.gens):
            if g.kind == "R":
                key.append(rng.randint(0, g.order - 1))
            elif g.kind == "Pi":
                key.append(rng.randint(-max_exp, max_exp))
            else:
                key.append(rng.randint(0, max_exp))
        num = Poly.from_rationals(field, [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
        if not num:
            num = Poly.constant(field, 1)
        den = xp + rng.randint(1, 4) if coeff_den and rng.random() < 0.5 else Poly.constant(field, 1)
        e = e + tower.monomial(tuple(key), RatFun(num, den))
    return e


def in_span(basis, c, g, tower):
    """Exact membership of the tuple (c, g) in the K-span of basis tuples."""
    field = tower.field
    if not basis:
        return not any(c) and not g
    lin = Linearizer(tower, [gg for _, gg in basis] + [g])
    rows = [list(cc) + lin.encode(gg) for cc, gg in basis]
    target = list(c) + lin.encode(g)
    m = Matrix(rows, field.one).transpose()
    parts, _ = m.solve_parametric([target])
    return parts[0] is not None


def apply_operator(sigma, a, g):
    total = g.tower.zero()
    for i, ai in enumerate(a):
        if ai:
            total = total + ai * sigma.sigma(g, i)
    return total


def seeded(seed=20260809):
    return random.Random(seed)


@pytest.fixture
def rng():
    return seeded()

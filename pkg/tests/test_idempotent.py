from fractions import Fraction

import pytest

from rpisigma.algebra import Poly, RatFun
from rpisigma.idempotent import (
    component_point,
    component_ring,
    decompose,
    idempotents,
    project,
    recombine,
)
from rpisigma.tower import Tower
from conftest import random_element, seeded


def rof(t, p):
    return t.from_ratfun(RatFun(Poly.constant(t.field, 1), p))


def test_idempotents_worked_example(worked_tower):
    t = worked_tower
    y = t.gen_element("y")
    half = t.from_scalar(Fraction(1, 2))
    e0, e1 = idempotents(t)
    assert e0 == (t.one() - y) * half
    assert e1 == (t.one() + y) * half


def test_idempotents_trivial_without_rgen():
    t = Tower(1)
    t.freeze()
    assert idempotents(t) == [t.one()]
    g = t.x() + 1
    assert decompose(g) == [g]
    assert project(g) == g


@pytest.mark.parametrize("lam", [2, 3, 4, 6])
def test_idempotent_identities(lam):
    t = Tower(lam)
    t.add_rgen("y", lam, t.field.zeta())
    t.freeze()
    es = idempotents(t)
    sig = t.sigma_automorphism()
    total = t.zero()
    for i, e in enumerate(es):
        assert e * e == e
        for j in range(i + 1, lam):
            assert e * es[j] == t.zero()
        assert sig.sigma(e) == es[(i + 1) % lam]
        total = total + e
    assert total == t.one()


def test_decompose_goldens(worked_tower):
    t = worked_tower
    y, s = t.gen_element("y"), t.gen_element("s")
    x = t.x()
    e0, e1 = idempotents(t)
    assert decompose(y) == [-t.one(), t.one()]
    assert decompose(e0) == [t.one(), t.zero()]
    assert decompose(y * s) == [-s, s]
    assert project(e0) == t.one() and project(e1) == t.zero()
    sig = t.sigma_automorphism()
    assert project(sig.sigma(e0)) == t.zero()
    assert project(x + y * s) == x - s


def test_recombine_round_trip(worked_tower, rng):
    t = worked_tower
    for _ in range(30):
        g = random_element(t, rng)
        assert recombine(decompose(g)) == g
    assert recombine([t.one(), t.one()]) == t.one()
    assert recombine([-t.one(), t.one()]) == t.gen_element("y")


def test_projection_is_ring_homomorphism(worked_tower, rng):
    t = worked_tower
    for _ in range(60):
        g = random_element(t, rng)
        h = random_element(t, rng)
        assert project(g + h) == project(g) + project(h)
        assert project(g * h) == project(g) * project(h)


def test_component_ring_goldens(worked_tower):
    t = worked_tower
    xp = Poly.x(t.field)
    s, sb = t.gen_element("s"), t.gen_element("sb")
    c0 = component_ring(t, 0)
    c1 = component_ring(t, 1)
    r12 = rof(t, (xp + 1) * (xp + 2))
    assert c0.sigma(sb) == sb + r12
    assert c1.sigma(sb) == sb - r12
    assert c0.sigma(s) == s + rof(t, xp + 1) + rof(t, xp + 2)
    assert c0.sigma(t.x()) == t.x() + 2
    assert c0.beta_tilde["sb"] == r12


def test_component_sigma_matches_projected_power(worked_tower, rng):
    t = worked_tower
    sig = t.sigma_automorphism()
    rings = [component_ring(t, s) for s in range(2)]
    for _ in range(20):
        g = random_element(t, rng)
        comps = decompose(g)
        for s, ring in enumerate(rings):
            direct = ring.sigma(comps[s])
            via = sig.sigma(comps[s], 2).substitute_rgen(component_point(t, s))
            assert direct == via


def test_cyclic_shift_of_components(worked_tower, rng):
    # decompose(sigma^j(g))[s] equals sigma^j of decompose(g)[(s-j) mod lam],
    # reinterpreted through the projection of component s
    t = worked_tower
    lam = t.rorder
    sig = t.sigma_automorphism()
    for _ in range(20):
        g = random_element(t, rng)
        comps = decompose(g)
        for j in range(2 * lam):
            shifted = decompose(sig.sigma(g, j))
            for s in range(lam):
                expect = sig.sigma(comps[(s - j) % lam], j).substitute_rgen(component_point(t, s))
                assert shifted[s] == expect, (j, s)


def test_sigma_moves_components_cyclically(worked_tower, rng):
    t = worked_tower
    lam = t.rorder
    es = idempotents(t)
    sig = t.sigma_automorphism()
    for _ in range(20):
        g = random_element(t, rng)
        for s in range(lam):
            moved = sig.sigma(es[s] * g)
            comps = decompose(moved)
            for k in range(lam):
                if k != (s + 1) % lam:
                    assert comps[k] == t.zero()


def test_interlacing_slot_rotation(worked_tower, rng):
    # placing h in slot s and applying sigma lands sigma(h) in slot s+1
    t = worked_tower
    lam = t.rorder
    sig = t.sigma_automorphism()
    for _ in range(15):
        h = random_element(t, rng).substitute_rgen(component_point(t, 0))
        for s in range(lam):
            comps = [t.zero()] * lam
            comps[s] = h
            g = recombine(comps)
            out = decompose(sig.sigma(g))
            target = (s + 1) % lam
            expect = sig.sigma(h).substitute_rgen(component_point(t, target))
            assert out[target] == expect
            for k in range(lam):
                if k != target:
                    assert out[k] == t.zero()


def test_component_ring_index_validation(worked_tower):
    with pytest.raises(ValueError):
        component_ring(worked_tower, 2)

"""PLDE solver over an integral-domain tower (no root-of-unity generator).

Peels the topmost generator: bound the exponent window of the solution,
compare coefficients at the highest arising power to get a sub-equation one
level down, substitute its solution candidates, and descend through the
window; the base field is handled by the rational solver.  Each level keeps
the parameters K-linear, so the recursion carries growing parameter vectors
and maps them back while unwinding.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DegreeBoundExhausted
from ..tower import KIND_PI, KIND_SIGMA
from .bounds import bound_pi_degrees, bound_sigma_degree
from .linearize import constant_annihilator, echelonize_solutions
from .rational import solve_rational


@dataclass
class SolverConfig:
    slack: int = 2
    deepen: bool = True


def solve_plde(auto, a, f, config=None):
    """K-basis of {(c_1..c_d, g)} with sum_i a_i sigma^i(g) = sum_j c_j f_j.

    The automorphism must be defined on every generator that occurs; solutions
    are polynomial in sum generators and Laurent in product generators, with
    coefficients in K(x).
    """
    if config is None:
        config = SolverConfig()
    if all(not ai for ai in a):
        raise ValueError("coefficient vector must not be identically zero")
    tower = auto.tower
    active = [i for i, img in enumerate(auto.gen_images) if img is not None]
    for elem in list(a) + list(f):
        top = elem.top_level()
        if top and (top - 1) not in active:
            raise ValueError("input uses a generator outside the solvable subring")
    basis = _solve(auto, list(a), list(f), len(active), active, config)
    return echelonize_solutions(basis, tower)


def _solve(auto, a, f, pos, active, config):
    i0 = 0
    while not a[i0]:
        i0 += 1
    i1 = len(a) - 1
    while not a[i1]:
        i1 -= 1
    if i0 > 0 or i1 < len(a) - 1:
        inner = _solve(auto, a[i0 : i1 + 1], f, pos, active, config)
        return [(c, auto.sigma(g, -i0)) for c, g in inner]
    tower = auto.tower
    if pos == 0:
        a_rf = [ai.to_ratfun() for ai in a]
        f_rf = [fj.to_ratfun() for fj in f]
        sols = solve_rational(a_rf, f_rf, auto.step)
        return [(list(c), tower.from_ratfun(g)) for c, g in sols]
    t = active[pos - 1]
    kind = auto.gen_images[t][0]
    if kind == KIND_SIGMA:
        hi = bound_sigma_degree(a, f, t, config.slack)
        basis = _descent(auto, a, f, t, kind, 0, hi, pos, active, config)
        if _saturates(basis, t, hi):
            if not config.deepen:
                raise DegreeBoundExhausted(hi)
            hi2 = 2 * hi + 1
            basis = _descent(auto, a, f, t, kind, 0, hi2, pos, active, config)
            if _saturates(basis, t, hi2):
                raise DegreeBoundExhausted(hi2)
        return basis
    lo, hi = bound_pi_degrees(auto, a, f, t, config.slack)
    if lo is None or hi is None:
        lo, hi = 0, -1
    return _descent(auto, a, f, t, kind, lo, hi, pos, active, config)


def _saturates(basis, t, cap):
    for _, g in basis:
        dg = g.deg_gen(t)
        if dg is not None and dg == cap:
            return True
    return False


def _descent(auto, a, f, t, kind, lo, hi, pos, active, config):
    tower = auto.tower
    field = tower.field
    if hi < lo:
        anni = constant_annihilator(f) if f else []
        zero = tower.zero()
        return [(list(c), zero) for c in anni]
    delta = max(ai.deg_gen(t) for ai in a if ai)
    abar = [ai.coeff_of_power(t, delta) for ai in a]
    if kind == KIND_PI:
        ratio = auto.gen_images[t][1]
        atil = []
        acc = None
        for i, ab in enumerate(abar):
            if i == 0:
                atil.append(ab)
            else:
                acc = ratio.shift(auto.step * (i - 1)) if acc is None else acc * ratio.shift(auto.step * (i - 1))
                atil.append(ab * tower.from_ratfun(acc**hi) if ab else ab)
    else:
        atil = abar
    fsub = [fj.coeff_of_power(t, hi + delta) for fj in f]
    sub = _solve(auto, atil, fsub, pos - 1, active, config)
    new_rhs = []
    for cvec, h in sub:
        ht = h.mul_gen_power(t, hi)
        lh = tower.zero()
        for i, ai in enumerate(a):
            if ai:
                lh = lh + ai * auto.sigma(ht, i)
        total = -lh
        for cj, fj in zip(cvec, f):
            if cj and fj:
                total = total + fj * tower.from_scalar(cj)
        new_rhs.append(total)
    rec = _descent(auto, a, new_rhs, t, kind, lo, hi - 1, pos, active, config)
    d = len(f)
    out = []
    for lam, gt in rec:
        c = [field.zero] * d
        g = gt
        for mu, (cvec, h) in enumerate(sub):
            if lam[mu]:
                for j in range(d):
                    c[j] = c[j] + lam[mu] * cvec[j]
                g = g + h.mul_gen_power(t, hi) * tower.from_scalar(lam[mu])
        out.append((c, g))
    return out

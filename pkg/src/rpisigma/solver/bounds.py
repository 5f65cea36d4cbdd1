"""Degree windows for the generator-peeling solver.

Sum generators get a heuristic cap (the complete bound lives in companion
work): max rhs degree + order + slack.  Product generators get the exact
window of the orbit-module argument: every leading-term right factor
candidate u pins the possible top exponent through the lattice
M(alpha_1..alpha_e, u^-1), with a coefficient-comparison fallback when the
leading terms cannot cancel; the lowest exponent mirrors this under the
reversed order.
"""

from __future__ import annotations

from ..algebra.ratfun import RatFun
from ..errors import SolverError
from ..tower import KIND_PI
from .hyper import hypergeometric_candidates
from .orbit import pseudo_orbit_basis


def bound_sigma_degree(a, f, t, slack=2):
    """Heuristic cap for the exponent of a sum generator in any solution."""
    degs = [fj.deg_gen(t) for fj in f if fj]
    top = max([dg for dg in degs if dg is not None], default=0)
    return max(top, 0) + (len(a) - 1) + slack


def _extreme_coefficient_operator(a, lowest):
    pick = min if lowest else max
    keys = []
    for ai in a:
        if ai:
            keys.append(ai.leading_term(lowest=lowest)[0])
    mu = pick(keys, key=lambda k: tuple(reversed(k)))
    field = a[0].tower.field
    zero = RatFun.constant(field, 0)
    op = [ai.terms.get(mu, zero) if ai else zero for ai in a]
    return mu, op


def bound_pi_degrees(auto, a, f, t, slack=2):
    """Exponent window (low, high) for the top product generator t.

    Either bound may be None, meaning no solution can touch that side (the
    ansatz window is then empty on that side).
    """
    step = auto.step
    ratios = []
    for i, img in enumerate(auto.gen_images):
        if i > t:
            break
        if img is not None and img[0] == KIND_PI:
            ratios.append(img[1])
    bounds = {}
    for lowest in (False, True):
        mu, op = _extreme_coefficient_operator(a, lowest)
        candidates = []
        for u in hypergeometric_candidates(op, step):
            gens = pseudo_orbit_basis(ratios + [u.inverse()], step)
            if not gens:
                continue
            if len(gens) > 1:
                raise SolverError("product generator ratios are multiplicatively dependent")
            v = list(gens[0])
            if v[-1] < 0:
                v = [-w for w in v]
            if v[-1] != 1:
                continue
            candidates.append(v[-2])
        if lowest:
            lows = [fj.lowdeg_gen(t) for fj in f if fj]
            if lows:
                candidates.append(min(lows) - mu[t])
            bounds["low"] = min(candidates) if candidates else None
        else:
            highs = [fj.deg_gen(t) for fj in f if fj]
            if highs:
                candidates.append(max(highs) - mu[t])
            bounds["high"] = max(candidates) if candidates else None
    return bounds["low"], bounds["high"]

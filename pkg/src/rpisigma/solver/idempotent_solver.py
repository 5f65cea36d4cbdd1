"""Full-ring PLDE solving through the idempotent decomposition.

Per component k the reduction supplies one difference equation with respect
to sigma_k; those are solved in the integral-domain subring, candidate
solutions are recombined across components where their parameter rows agree,
and the defects of the candidates against the original equation are removed
by one more exact annihilator computation.
"""

from __future__ import annotations

from ..algebra.matrix import Matrix
from ..errors import DegenerateCoefficients
from ..idempotent import component_ring, decompose, recombine
from ..reduction import extract_component_equation, is_non_degenerate
from .linearize import constant_annihilator, echelonize_solutions
from .tower_solver import SolverConfig, solve_plde


def _apply_operator(sigma, a, g):
    tower = g.tower
    total = tower.zero()
    for i, ai in enumerate(a):
        if ai:
            total = total + ai * sigma.sigma(g, i)
    return total


def solve_plde_idempotent(tower, a, f, config=None):
    """K-basis of the solution space of the PLDE in the full tower."""
    if config is None:
        config = SolverConfig()
    if all(not ai for ai in a):
        raise ValueError("coefficient vector must not be identically zero")
    if not f:
        raise ValueError("at least one parameter is required")
    field = tower.field
    sigma = tower.sigma_automorphism()
    i0 = 0
    while not a[i0]:
        i0 += 1
    i1 = len(a) - 1
    while not a[i1]:
        i1 -= 1
    if i0 > 0 or i1 < len(a) - 1:
        inner = solve_plde_idempotent(tower, a[i0 : i1 + 1], f, config)
        return [(c, sigma.sigma(g, -i0)) for c, g in inner]
    lam = tower.rorder
    if lam == 1:
        return solve_plde(sigma, a, f, config)
    d = len(f)
    component_bases = []
    for k in range(lam):
        eq = extract_component_equation(tower, a, k)
        if eq is None:
            detail = "non-degenerate" if is_non_degenerate(tower, a) else "degenerate"
            raise DegenerateCoefficients(
                f"no difference equation for component {k} of a {detail} coefficient vector"
            )
        ring = component_ring(tower, k)
        fk = [eq.rhs_for(fj) for fj in f]
        vk = solve_plde(ring.automorphism, eq.b, fk, config)
        if not vk:
            return []
        component_bases.append(vk)
    deltas = [len(vk) for vk in component_bases]
    total = sum(deltas)
    # joint parameter space: blocks d_k with d_0 C_0 = d_1 C_1 = ... over K
    rows = []
    offs = [sum(deltas[:k]) for k in range(lam)]
    for k in range(lam - 1):
        ck = component_bases[k]
        cn = component_bases[k + 1]
        for col in range(d):
            row = [field.zero] * total
            for j, (cvec, _) in enumerate(ck):
                row[offs[k] + j] = cvec[col]
            for j, (cvec, _) in enumerate(cn):
                row[offs[k + 1] + j] = row[offs[k + 1] + j] - cvec[col]
            rows.append(row)
    if rows:
        joint = Matrix(rows, field.one).nullspace()
    else:
        joint = Matrix([[field.zero] * total], field.one).nullspace()
    r = len(joint)
    if r == 0:
        return _homogeneous_only(tower, a, f, d, config)
    candidates = []
    for vec in joint:
        comps = []
        cval = None
        for k in range(lam):
            gk = tower.zero()
            for j, (cvec, gamma) in enumerate(component_bases[k]):
                w = vec[offs[k] + j]
                if w:
                    gk = gk + gamma * tower.from_scalar(w)
            comps.append(gk)
            if k == 0:
                cval = [
                    sum(
                        (vec[offs[0] + j] * cvec[col] for j, (cvec, _) in enumerate(component_bases[0])),
                        start=field.zero,
                    )
                    for col in range(d)
                ]
        candidates.append((cval, recombine(comps)))
    # defects of the candidates against the actual equation
    defects = []
    for cval, g in candidates:
        rhs = tower.zero()
        for cj, fj in zip(cval, f):
            if cj:
                rhs = rhs + fj * tower.from_scalar(cj)
        defects.append(rhs - _apply_operator(sigma, a, g))
    kappa = _componentwise_annihilator(tower, defects)
    if not kappa:
        return []
    basis = []
    for kv in kappa:
        c = [field.zero] * d
        g = tower.zero()
        for l, w in enumerate(kv):
            if w:
                for j in range(d):
                    c[j] = c[j] + w * candidates[l][0][j]
                g = g + candidates[l][1] * tower.from_scalar(w)
        basis.append((c, g))
    result = echelonize_solutions(basis, tower)
    for c, g in result:
        lhs = _apply_operator(sigma, a, g)
        rhs = tower.zero()
        for cj, fj in zip(c, f):
            if cj:
                rhs = rhs + fj * tower.from_scalar(cj)
        assert lhs == rhs, "emitted tuple fails the equation; solver bug"
    return result


def _componentwise_annihilator(tower, defects):
    """{kappa : sum kappa_l defects_l = 0}, collected per idempotent component."""
    field = tower.field
    lam = tower.rorder
    per_component = [decompose(df) for df in defects]
    rows = []
    for s in range(lam):
        elems = [per_component[l][s] for l in range(len(defects))]
        for vec in _annihilator_rows(tower, elems):
            rows.append(vec)
    if not rows:
        return constant_annihilator(defects)
    # intersect: kappa must satisfy every component's conditions
    stacked = Matrix(rows, field.one)
    return stacked.nullspace()


def _annihilator_rows(tower, elems):
    """Condition rows whose kernel is the annihilator of the given elements."""
    from .linearize import Linearizer

    lin = Linearizer(tower, elems)
    if lin.width == 0:
        return []
    coords = [lin.encode(e) for e in elems]
    return [[coords[i][k] for i in range(len(elems))] for k in range(lin.width)]


def _homogeneous_only(tower, a, f, d, config):
    zero = tower.zero()
    hom = solve_plde_idempotent(tower, a, [zero], config)
    field = tower.field
    tuples = [([field.zero] * d, g) for _, g in hom if g]
    return echelonize_solutions(tuples, tower)

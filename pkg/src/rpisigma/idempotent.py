"""Idempotent decomposition of a tower with a root-of-unity generator.

The tower splits as a direct sum of lambda integral-domain components.  The
s-th component of g is obtained by substituting y -> alpha^(lambda-1-s); the
component rings are the y-free subring equipped with the automorphisms
sigma_s (x -> x + lambda, twisted generator images).
"""

from __future__ import annotations

from .tower import Automorphism, KIND_PI, KIND_R, KIND_SIGMA


def _rdata(tower):
    if tower.r_index is None:
        return None, 1, None
    g = tower.gens[tower.r_index]
    return tower.r_index, g.order, g.ratio_const


def component_point(tower, s):
    """The constant alpha^(lambda-1-s) that realizes the s-th component."""
    _, lam, alpha = _rdata(tower)
    if alpha is None:
        raise ValueError("tower has no root-of-unity generator")
    return alpha ** (lam - 1 - s)


def idempotents(tower):
    """The orthogonal idempotents e_0 .. e_{lambda-1} (just [1] if lambda=1)."""
    ri, lam, alpha = _rdata(tower)
    if ri is None:
        return [tower.one()]
    y = tower.gen_element(ri)
    out = []
    for s in range(lam):
        prod = tower.one()
        for j in range(lam):
            if j != lam - 1 - s:
                prod = prod * (y - tower.from_scalar(alpha**j))
        scale = prod.substitute_rgen(component_point(tower, s)).to_ratfun()
        out.append(prod * tower.from_scalar(scale.inverse()))
    return out


def decompose(g):
    """The lambda component images of g in the y-free subring."""
    tower = g.tower
    ri, lam, _ = _rdata(tower)
    if ri is None:
        return [g]
    return [g.substitute_rgen(component_point(tower, s)) for s in range(lam)]


def project(g):
    """The first-component projection pi(g)."""
    return decompose(g)[0]


def recombine(components):
    """Inverse of decompose: sum of e_s * g_s."""
    tower = components[0].tower
    es = idempotents(tower)
    if len(components) != len(es):
        raise ValueError(f"expected {len(es)} components")
    total = tower.zero()
    for e, g in zip(es, components):
        total = total + e * g
    return total


class ComponentRing:
    """The y-free subring with the automorphism sigma_s of component s."""

    def __init__(self, tower, s):
        ri, lam, alpha = _rdata(tower)
        self.tower = tower
        self.index = s
        self.order = lam
        sigma = tower.sigma_automorphism()
        point = alpha ** (lam - 1 - s) if alpha is not None else None
        images = []
        self.alpha_tilde = {}
        self.beta_tilde = {}
        for i, g in enumerate(tower.gens):
            if g.kind == KIND_R:
                images.append(None)
            elif g.kind == KIND_PI:
                ratio = g.ratio
                tilde = ratio
                for l in range(1, lam):
                    tilde = tilde * ratio.shift(l)
                self.alpha_tilde[g.name] = tilde
                images.append((KIND_PI, tilde))
            else:
                total = tower.zero()
                for l in range(lam):
                    total = total + sigma.sigma(g.delta, l)
                if point is not None:
                    total = total.substitute_rgen(point)
                self.beta_tilde[g.name] = total
                images.append((KIND_SIGMA, total))
        self.automorphism = Automorphism(tower, lam, images)

    def sigma(self, elem, j=1):
        return self.automorphism.sigma(elem, j)


def component_ring(tower, s):
    ri, lam, _ = _rdata(tower)
    if not (0 <= s < lam):
        raise ValueError(f"component index {s} out of range for order {lam}")
    return ComponentRing(tower, s)

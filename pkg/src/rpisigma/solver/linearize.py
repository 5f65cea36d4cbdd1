"""K-linear coordinatization of tower elements.

Tower elements span a K-vector space with basis monomial * x^k / (common
denominator); aligning a family of elements on shared monomials and shared
denominators turns K-linear questions about them into exact matrix problems.
"""

from __future__ import annotations

from ..algebra.matrix import Matrix
from ..algebra.poly import Poly, poly_lcm
from ..algebra.ratfun import RatFun


class Linearizer:
    """Shared coordinate system for a family of tower elements."""

    def __init__(self, tower, elems):
        self.tower = tower
        field = tower.field
        monos = sorted({k for e in elems for k in e.terms}, key=lambda k: tuple(reversed(k)))
        blocks = []
        for mono in monos:
            den = Poly.constant(field, 1)
            width = 1
            for e in elems:
                rf = e.terms.get(mono)
                if rf is not None:
                    den = poly_lcm(den, rf.den)
            for e in elems:
                rf = e.terms.get(mono)
                if rf is not None:
                    width = max(width, (rf.num * (den // rf.den)).degree + 1)
            blocks.append((mono, den, width))
        self.blocks = blocks
        self.width = sum(w for _, _, w in blocks)

    def encode(self, elem):
        field = self.tower.field
        out = []
        for mono, den, width in self.blocks:
            rf = elem.terms.get(mono)
            if rf is None:
                out.extend([field.zero] * width)
            else:
                p = rf.num * (den // rf.den)
                out.extend(p.coeff(k) for k in range(width))
        if len(out) != self.width:
            raise ValueError("element outside the coordinate system")
        return out

    def decode(self, vector):
        field = self.tower.field
        total = self.tower.zero()
        pos = 0
        for mono, den, width in self.blocks:
            p = Poly(field, vector[pos : pos + width])
            pos += width
            if p:
                total = total + self.tower.monomial(mono, RatFun(p, den))
        return total


def constant_annihilator(elems):
    """Basis of {c in K^d : sum c_i * elems_i = 0}, exact over K."""
    if not elems:
        return []
    tower = elems[0].tower
    field = tower.field
    lin = Linearizer(tower, elems)
    if lin.width == 0 or all(not e for e in elems):
        return [
            [field.one if i == j else field.zero for i in range(len(elems))]
            for j in range(len(elems))
        ]
    coords = [lin.encode(e) for e in elems]
    rows = [[coords[i][k] for i in range(len(elems))] for k in range(lin.width)]
    return Matrix(rows, field.one).nullspace()


def echelonize_solutions(tuples, tower):
    """Reduced echelon form of (c, g) tuples over K: c-part first, then g."""
    tuples = [t for t in tuples if any(t[0]) or t[1]]
    if not tuples:
        return []
    field = tower.field
    d = len(tuples[0][0])
    lin = Linearizer(tower, [g for _, g in tuples])
    rows = [list(c) + lin.encode(g) for c, g in tuples]
    rref_rows, _ = Matrix(rows, field.one).rref()
    out = []
    for row in rref_rows:
        if not any(row):
            continue
        out.append((row[:d], lin.decode(row[d:])))
    return out

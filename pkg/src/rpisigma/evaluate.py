"""Numeric oracle: evaluate tower elements as exact sequences.

Interpretation at index n: x -> n, y -> alpha^n, a product generator becomes
the partial product of its ratio over 0..n-1, and a sum generator becomes the
partial sum of its delta over 1..n (value 0 at n = 0).  Prefix products and
sums are memoized per evaluator.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PoleAtIndex
from .tower import KIND_PI, KIND_R, KIND_SIGMA


class Evaluator:
    """Owns memoized generator values for one tower; not thread-shared."""

    def __init__(self, tower):
        self.tower = tower
        self.field = tower.field
        # per generator: list of values indexed by n
        self._gen_values = [[self._initial(g)] for g in tower.gens]

    def _initial(self, g):
        if g.kind == KIND_R:
            return self.field.one  # alpha^0
        if g.kind == KIND_PI:
            return self.field.one  # empty product
        return self.field.zero  # empty sum

    def _gen_value(self, i, n):
        vals = self._gen_values[i]
        g = self.tower.gens[i]
        while len(vals) <= n:
            k = len(vals)  # producing value at index k
            if g.kind == KIND_R:
                vals.append(vals[-1] * g.ratio_const)
            elif g.kind == KIND_PI:
                try:
                    r = g.ratio.evaluate(Fraction(k - 1))
                except ZeroDivisionError:
                    raise PoleAtIndex(k - 1, f"ratio of {g.name}") from None
                if not r:
                    raise PoleAtIndex(k - 1, f"ratio of {g.name} vanishes")
                vals.append(vals[-1] * r)
            else:
                vals.append(vals[-1] + self.value(g.delta, k - 1))
        return vals[n]

    def value(self, elem, n):
        """Exact value of the sequence encoded by elem at index n >= 0."""
        if elem.tower is not self.tower:
            raise ValueError("element from a different tower")
        total = self.field.zero
        for key, coeff in elem.terms.items():
            try:
                v = coeff.evaluate(Fraction(n))
            except ZeroDivisionError:
                raise PoleAtIndex(n, "coefficient denominator") from None
            for i, e in enumerate(key):
                if e:
                    gv = self._gen_value(i, n)
                    v = v * gv**e
            total = total + v
        return total

    def check_plde(self, a, f, c, g, n):
        """Residual of the difference equation at index n (zero iff satisfied)."""
        lhs = self.field.zero
        for i, ai in enumerate(a):
            lhs = lhs + self.value(ai, n) * self.value(g, n + i)
        rhs = self.field.zero
        for cj, fj in zip(c, f):
            if cj:
                rhs = rhs + cj * self.value(fj, n)
        return lhs - rhs

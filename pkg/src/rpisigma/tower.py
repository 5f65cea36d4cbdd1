"""Difference-ring towers over K(x) with sigma(x) = x + 1.

A tower holds at most one root-of-unity generator y (y^lambda = 1,
sigma(y) = alpha*y with alpha a primitive lambda-th root of unity), placed
directly above the base field, followed by product generators (sigma(t) =
ratio*t with ratio in K(x)*) and sum generators (sigma(t) = t + delta with
delta from the subring strictly below).  Product generators are stably
reordered below sum generators when the tower is frozen, so the solver can
always peel sums first; deltas recorded during construction are remapped
accordingly.  Create elements only on frozen towers.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra.constants import Constant, CyclotomicField, is_primitive_root
from .algebra.poly import Poly
from .algebra.ratfun import RatFun
from .errors import MultipleRGenerators, NotPrimitiveRoot, SubringViolation

KIND_R = "R"
KIND_PI = "Pi"
KIND_SIGMA = "Sigma"


class Generator:
    __slots__ = ("name", "kind", "order", "ratio_const", "ratio", "delta")

    def __init__(self, name, kind, order=None, ratio_const=None, ratio=None, delta=None):
        self.name = name
        self.kind = kind
        self.order = order  # R only
        self.ratio_const = ratio_const  # R only, Constant
        self.ratio = ratio  # Pi only, RatFun
        self.delta = delta  # Sigma only, TowerElement

    def __repr__(self):
        return f"Generator({self.name!r}, {self.kind})"


class Tower:
    """Mutable during construction, frozen before elements are built."""

    def __init__(self, cyclotomic_index=1):
        self.field = CyclotomicField(cyclotomic_index)
        self.gens = []
        self.r_index = None
        self._frozen = False
        self._names = {}

    # -- construction ----------------------------------------------------

    def _check_open(self, name):
        if self._frozen:
            raise SubringViolation("tower is frozen")
        if name in self._names or name == "x":
            raise SubringViolation(f"duplicate generator name {name!r}")

    def add_rgen(self, name, order, ratio):
        self._check_open(name)
        if self.r_index is not None:
            raise MultipleRGenerators("tower already has a root-of-unity generator")
        if self.gens:
            raise SubringViolation("root-of-unity generator must sit directly above the base field")
        if isinstance(ratio, (int, Fraction)):
            ratio = self.field.from_rational(ratio)
        if not isinstance(ratio, Constant) or not is_primitive_root(ratio, order):
            raise NotPrimitiveRoot(f"ratio of {name!r} is not a primitive root of order {order}")
        self.r_index = len(self.gens)
        self._names[name] = len(self.gens)
        self.gens.append(Generator(name, KIND_R, order=order, ratio_const=ratio))
        return self

    def add_pgen(self, name, ratio):
        self._check_open(name)
        if isinstance(ratio, (int, Fraction, Constant)):
            ratio = RatFun.constant(self.field, ratio)
        elif isinstance(ratio, TowerElement):
            if not ratio.is_ratfun():
                raise SubringViolation(f"product ratio of {name!r} must lie in the base field")
            ratio = ratio.to_ratfun()
        if not isinstance(ratio, RatFun) or not ratio:
            raise SubringViolation(f"product ratio of {name!r} must be a nonzero base-field element")
        self._names[name] = len(self.gens)
        self.gens.append(Generator(name, KIND_PI, ratio=ratio))
        return self

    def add_sgen(self, name, delta):
        self._check_open(name)
        if isinstance(delta, (int, Fraction, Constant, RatFun)):
            delta = self.from_scalar(delta)
        if not isinstance(delta, TowerElement) or delta.tower is not self:
            raise SubringViolation(f"sum difference of {name!r} must be an element of this tower")
        if delta.top_level() > len(self.gens):
            raise SubringViolation(f"sum difference of {name!r} uses generators above it")
        self._names[name] = len(self.gens)
        self.gens.append(Generator(name, KIND_SIGMA, delta=delta))
        return self

    def freeze(self):
        """Validate, stably reorder products below sums, and lock the tower."""
        if self._frozen:
            return self
        order = []
        if self.r_index is not None:
            order.append(self.r_index)
        order.extend(i for i, g in enumerate(self.gens) if g.kind == KIND_PI)
        order.extend(i for i, g in enumerate(self.gens) if g.kind == KIND_SIGMA)
        if order != list(range(len(self.gens))):
            perm = {old: new for new, old in enumerate(order)}
            gens = [self.gens[old] for old in order]
            for g in gens:
                if g.kind == KIND_SIGMA and g.delta is not None:
                    g.delta = g.delta._permuted(perm, len(self.gens))
            self.gens = gens
            self._names = {g.name: i for i, g in enumerate(self.gens)}
            self.r_index = 0 if self.r_index is not None else None
        for g in self.gens:
            if g.kind == KIND_SIGMA:
                g.delta = g.delta._padded(len(self.gens))
        self._frozen = True
        return self

    # -- inspection -------------------------------------------------------

    @property
    def rorder(self):
        """The idempotent order lambda (1 without a root-of-unity generator)."""
        if self.r_index is None:
            return 1
        return self.gens[self.r_index].order

    def index_of(self, name):
        if name not in self._names:
            raise KeyError(name)
        return self._names[name]

    def gen_names(self):
        return [g.name for g in self.gens]

    # -- element constructors ----------------------------------------------

    def zero(self):
        return TowerElement(self, {})

    def one(self):
        return self.from_scalar(1)

    def x(self):
        return self.from_ratfun(RatFun.x(self.field))

    def from_scalar(self, v):
        if isinstance(v, RatFun):
            return self.from_ratfun(v)
        if isinstance(v, Poly):
            return self.from_ratfun(RatFun(v))
        return self.from_ratfun(RatFun.constant(self.field, v))

    def from_ratfun(self, rf):
        if not rf:
            return TowerElement(self, {})
        key = (0,) * len(self.gens)
        return TowerElement(self, {key: rf})

    def gen_element(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self.index_of(name_or_index)
        key = tuple(1 if j == i else 0 for j in range(len(self.gens)))
        return TowerElement(self, {key: RatFun.constant(self.field, 1)})

    def monomial(self, key, coeff):
        if not isinstance(coeff, RatFun):
            coeff = RatFun.constant(self.field, coeff)
        if not coeff:
            return self.zero()
        return TowerElement(self, {self._norm_key(tuple(key)): coeff})

    def _norm_key(self, key):
        if len(key) < len(self.gens):
            key = key + (0,) * (len(self.gens) - len(key))
        if self.r_index is not None:
            e = key[self.r_index] % self.gens[self.r_index].order
            if e != key[self.r_index]:
                key = key[: self.r_index] + (e,) + key[self.r_index + 1 :]
        for i, g in enumerate(self.gens):
            if g.kind == KIND_SIGMA and key[i] < 0:
                raise ValueError(f"negative exponent of sum generator {g.name!r}")
        return key

    def sigma_automorphism(self):
        """The declared shift automorphism of the tower."""
        images = []
        for g in self.gens:
            if g.kind == KIND_R:
                images.append((KIND_R, g.ratio_const))
            elif g.kind == KIND_PI:
                images.append((KIND_PI, g.ratio))
            else:
                images.append((KIND_SIGMA, g.delta))
        return Automorphism(self, 1, images)

    def __repr__(self):
        kinds = ", ".join(f"{g.name}:{g.kind}" for g in self.gens)
        return f"Tower(Q(zeta_{self.field.m})(x); {kinds})"


def _order_key(key):
    return tuple(reversed(key))


class TowerElement:
    """Sparse Laurent polynomial in the tower generators over K(x)."""

    __slots__ = ("tower", "terms")

    def __init__(self, tower, terms):
        self.tower = tower
        self.terms = terms  # dict: exponent tuple -> nonzero RatFun

    def _permuted(self, perm, width):
        out = {}
        for key, coeff in self.terms.items():
            padded = list(key) + [0] * (width - len(key))
            new = [0] * width
            for old, exp in enumerate(padded):
                new[perm[old]] = exp
            out[tuple(new)] = coeff
        return TowerElement(self.tower, out)

    def _padded(self, width):
        out = {}
        for key, coeff in self.terms.items():
            out[key + (0,) * (width - len(key))] = coeff
        return TowerElement(self.tower, out)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TowerElement):
            if other.tower is not self.tower:
                raise ValueError("mixed towers")
            return other
        if isinstance(other, (int, Fraction, Constant, RatFun, Poly)):
            return self.tower.from_scalar(other)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in o.terms.items():
            if key in out:
                s = out[key] + coeff
                if s:
                    out[key] = s
                else:
                    del out[key]
            else:
                out[key] = coeff
        return TowerElement(self.tower, out)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.tower, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        tower = self.tower
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                key = tower._norm_key(tuple(a + b for a, b in zip(k1, k2)))
                c = c1 * c2
                if key in out:
                    s = out[key] + c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
                elif c:
                    out[key] = c
        return TowerElement(tower, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.invert_unit() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.invert_unit()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure ----------------------------------------------------------

    def is_unit(self):
        """Units of the tower: c(x) * y^j * (product monomials), one term."""
        if len(self.terms) != 1:
            return False
        (key,) = self.terms
        for i, g in enumerate(self.tower.gens):
            if g.kind == KIND_SIGMA and key[i] != 0:
                return False
        return True

    def invert_unit(self):
        if not self.is_unit():
            raise ValueError("element is not a unit")
        ((key, coeff),) = self.terms.items()
        inv_key = tuple(-e for e in key)  # y^-e reduces mod the order in monomial()
        return self.tower.monomial(inv_key, coeff.inverse())

    def is_ratfun(self):
        return all(not any(k) for k in self.terms)

    def to_ratfun(self):
        if not self.terms:
            return RatFun.constant(self.tower.field, 0)
        if not self.is_ratfun():
            raise ValueError(f"{self} is not a base-field element")
        return next(iter(self.terms.values()))

    def is_constant_value(self):
        return self.is_ratfun() and (not self.terms or self.to_ratfun().is_constant())

    def top_level(self):
        """1 + index of the highest generator occurring (0 for base field)."""
        top = 0
        for key in self.terms:
            for i in range(len(key) - 1, -1, -1):
                if key[i]:
                    if i + 1 > top:
                        top = i + 1
                    break
        return top

    def deg_gen(self, i):
        if not self.terms:
            return None
        return max(k[i] for k in self.terms)

    def lowdeg_gen(self, i):
        if not self.terms:
            return None
        return min(k[i] for k in self.terms)

    def coeff_of_power(self, i, e):
        """Coefficient of gen_i^e as an element with gen_i removed."""
        out = {}
        for key, coeff in self.terms.items():
            if key[i] == e:
                out[key[:i] + (0,) + key[i + 1 :]] = coeff
        return TowerElement(self.tower, out)

    def mul_gen_power(self, i, e):
        out = {}
        for key, coeff in self.terms.items():
            out[self.tower._norm_key(key[:i] + (key[i] + e,) + key[i + 1 :])] = coeff
        return TowerElement(self.tower, out)

    def mul_gen_power_multi(self, shift):
        out = {}
        for key, coeff in self.terms.items():
            out[self.tower._norm_key(tuple(a + b for a, b in zip(key, shift)))] = coeff
        return TowerElement(self.tower, out)

    def substitute_rgen(self, value):
        """Substitute the root-of-unity generator by a constant value."""
        ri = self.tower.r_index
        if ri is None:
            return self
        out = {}
        for key, coeff in self.terms.items():
            e = key[ri]
            c = coeff * value**e if e else coeff
            nkey = key[:ri] + (0,) + key[ri + 1 :]
            if nkey in out:
                s = out[nkey] + c
                if s:
                    out[nkey] = s
                else:
                    del out[nkey]
            elif c:
                out[nkey] = c
        return TowerElement(self.tower, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]))

    def leading_term(self, lowest=False):
        """(key, coeff) of the extreme term in the canonical order."""
        pick = min if lowest else max
        key = pick(self.terms, key=_order_key)
        return key, self.terms[key]

    def coefficients_on(self, i):
        """Set of exponents of gen_i that occur."""
        return sorted({k[i] for k in self.terms})

    def __repr__(self):
        from .cli.printer import format_element

        try:
            return format_element(self)
        except Exception:
            return f"TowerElement({self.terms})"


class Automorphism:
    """A shift automorphism of a tower: x -> x + step plus generator images.

    gen_images[i] is one of (KIND_R, Constant ratio), (KIND_PI, RatFun ratio),
    (KIND_SIGMA, TowerElement delta), or None when the generator must not
    occur (component automorphisms act on the subring without y).
    """

    def __init__(self, tower, step, gen_images):
        self.tower = tower
        self.step = Fraction(step)
        self.gen_images = gen_images
        self._sigma_pow_cache = {}
        self._inv_delta = {}

    def sigma(self, elem, j=1):
        """Apply sigma^j (j may be negative)."""
        if elem.tower is not self.tower:
            raise ValueError("element from a different tower")
        for _ in range(abs(j)):
            elem = self._apply(elem, j > 0)
        return elem

    def sigma_factorial(self, elem, n):
        """The product elem * sigma(elem) * ... * sigma^(n-1)(elem)."""
        result = self.tower.one()
        cur = elem
        for _ in range(n):
            result = result * cur
            cur = self.sigma(cur, 1)
        return result

    def _sigma_gen_power(self, i, e, forward):
        key = (i, e, forward)
        cached = self._sigma_pow_cache.get(key)
        if cached is not None:
            return cached
        g = self.tower.gens[i]
        image = self.gen_images[i]
        if image is None:
            raise ValueError(f"automorphism undefined on generator {g.name!r}")
        kind, data = image
        t = self.tower.gen_element(i)
        if kind == KIND_SIGMA:
            if forward:
                base = t + data
            else:
                inv_delta = self._inv_delta.get(i)
                if inv_delta is None:
                    inv_delta = self._apply(data, False)
                    self._inv_delta[i] = inv_delta
                base = t - inv_delta
            result = base**e
        else:
            raise AssertionError("only sum generators need element images")
        self._sigma_pow_cache[key] = result
        return result

    def _apply(self, elem, forward):
        tower = self.tower
        step = self.step if forward else -self.step
        out = tower.zero()
        for key, coeff in elem.terms.items():
            c = coeff.shift(step)
            mono_key = list(key)
            factors = []
            for i, e in enumerate(key):
                if not e:
                    continue
                image = self.gen_images[i]
                if image is None:
                    raise ValueError(f"automorphism undefined on generator {tower.gens[i].name!r}")
                kind, data = image
                if kind == KIND_R:
                    c = c * (data**e if forward else data ** (-e))
                elif kind == KIND_PI:
                    ratio = data if forward else data.shift(-self.step).inverse()
                    c = c * ratio**e
                else:
                    mono_key[i] = 0
                    factors.append(self._sigma_gen_power(i, e, forward))
            if not c:
                continue
            term = tower.monomial(tuple(mono_key), c)
            for f in factors:
                term = term * f
            out = out + term
        return out

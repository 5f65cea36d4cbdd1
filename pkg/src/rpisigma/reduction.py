"""Reduction of a difference equation over the full ring to one equation per
idempotent component.

The shift projection matrix of a = (a_0..a_m) is the banded
((m+1)*lam - m) x ((m+1)*lam) matrix with entry (j, i+j) = pi(sigma^j(a_i)).
Its rank decides non-degeneracy.  For component k the same construction with
the projection pi_k (substitute y -> alpha^(lambda-1-k)) turns every relation
in the row space that touches only the columns j = 0 mod lambda into a linear
difference equation for the k-th component with respect to sigma_k:

    sum_i b_i sigma_k^i(g_k) = sum_l f_l * pi_k(sigma^l(phi)).

Relations correspond to left-null vectors f of the non-window columns; the
component coefficients are b = f^T M restricted to the window.  A degenerate
a may leave no relation with nonzero b for some component (Absent).
"""

from __future__ import annotations

from .algebra.matrix import Matrix
from .fracfield import (
    TowerFraction,
    bareiss_left_nullspace,
    clear_fraction_vector,
    content_and_primitive,
    tower_divexact,
    tower_gcd,
)
from .idempotent import component_point
from .tower import TowerElement


class ShiftProjectionMatrix:
    """Projected shifted coefficients, banded; entries lie in the y-free subring."""

    def __init__(self, tower, rows, order):
        self.tower = tower
        self.rows = rows
        self.order = order

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def rank(self):
        one = TowerFraction.one(self.tower)
        m = Matrix([[TowerFraction(e) for e in row] for row in self.rows], one)
        return m.rank()


def shift_projection_matrix(tower, a, component=0):
    """M_{sigma,pi}(a) for the given component's projection (0 = the paper's pi)."""
    lam = tower.rorder
    m = len(a) - 1
    sigma = tower.sigma_automorphism()
    nrows = (m + 1) * lam - m
    ncols = (m + 1) * lam
    point = component_point(tower, component) if lam > 1 else None
    zero = tower.zero()
    rows = [[zero for _ in range(ncols)] for _ in range(nrows)]
    shifted = list(a)
    for j in range(nrows):
        for i, aij in enumerate(shifted):
            entry = aij.substitute_rgen(point) if point is not None else aij
            rows[j][i + j] = entry
        if j + 1 < nrows:
            shifted = [sigma.sigma(v, 1) for v in shifted]
    return ShiftProjectionMatrix(tower, rows, lam)


def is_non_degenerate(tower, a):
    """True iff the shift projection matrix has full row rank.

    Fast path: a unit leading or trailing coefficient already forces it.
    """
    if a[0].is_unit() or a[-1].is_unit():
        return True
    spm = shift_projection_matrix(tower, a)
    return spm.rank() == spm.nrows


class ComponentEquation:
    """One component's difference equation plus its right-hand-side functional.

    b holds the coefficients of sigma_k^i(g_k); the functional coefficients
    f_l recover the right-hand side from any phi as
    sum_l f_l * pi_k(sigma^l(phi)).
    """

    def __init__(self, tower, component, b, functional):
        self.tower = tower
        self.component = component
        self.b = b
        self.functional = functional

    @property
    def order(self):
        return len(self.b) - 1

    def rhs_for(self, phi):
        """Apply the functional to a concrete right-hand side phi."""
        tower = self.tower
        lam = tower.rorder
        point = component_point(tower, self.component) if lam > 1 else None
        sigma = tower.sigma_automorphism()
        total = tower.zero()
        shifted = phi
        for l, fl in enumerate(self.functional):
            if fl:
                proj = shifted.substitute_rgen(point) if point is not None else shifted
                total = total + fl * proj
            if l + 1 < len(self.functional):
                shifted = sigma.sigma(shifted, 1)
        return total


def _leading_numeric(elem):
    _, coeff = elem.leading_term()
    lead = coeff.num.lc()
    for v in lead.coeffs:
        if v:
            return v
    return None


def _normalize_relation(tower, row):
    """Joint gcd, content and sign normalization of a (b | f) row of elements."""
    from .algebra.poly import poly_gcd, poly_lcm
    from .algebra.ratfun import RatFun

    cleared = list(row)
    nonzero = [v for v in cleared if v]
    if not nonzero:
        return cleared
    joint = nonzero[0]
    for v in nonzero[1:]:
        if joint.top_level() == 0:
            break
        joint = tower_gcd(joint, v)
    if joint.top_level() > 0:
        cleared = [tower_divexact(v, joint) if v else v for v in cleared]
        nonzero = [v for v in cleared if v]
    gnum = None
    lden = None
    for v in nonzero:
        c, _ = content_and_primitive(v)
        gnum = c.num if gnum is None else poly_gcd(gnum, c.num)
        lden = c.den if lden is None else poly_lcm(lden, c.den)
    inv = RatFun(gnum, lden).inverse()
    cleared = [TowerElement(tower, {k: c * inv for k, c in v.terms.items()}) for v in cleared]
    first = next(v for v in cleared if v)
    if _leading_numeric(first) < 0:
        cleared = [-v for v in cleared]
    return cleared


def extract_component_equation(tower, a, k):
    """The component-k difference equation, or None when absent.

    For towers without a root-of-unity generator the input is returned with
    the identity functional.
    """
    lam = tower.rorder
    m = len(a) - 1
    if lam == 1:
        return ComponentEquation(tower, 0, list(a), [tower.one()])
    spm = shift_projection_matrix(tower, a, component=k)
    nrows, ncols = spm.nrows, spm.ncols
    window = [c for c in range(ncols) if c % lam == 0]
    nonwindow = [c for c in range(ncols) if c % lam != 0]
    nonwindow_rows = [[spm.rows[j][c] for c in nonwindow] for j in range(nrows)]
    lnull = bareiss_left_nullspace(nonwindow_rows)
    if not lnull:
        return None
    rows = []
    for f in lnull:
        b = []
        for c in window:
            acc = tower.zero()
            for j in range(nrows):
                if f[j] and spm.rows[j][c]:
                    acc = acc + f[j] * spm.rows[j][c]
            b.append(acc)
        rows.append(list(f) + b)
    if len(rows) > 1:
        # canonical basis of the relation space, echelonized by the functional
        # part (which determines the coefficients)
        one = TowerFraction.one(tower)
        wrapped = [[TowerFraction(v) for v in row] for row in rows]
        rref_rows, _ = Matrix(wrapped, one).rref()
        candidate_rows = [clear_fraction_vector(row) for row in rref_rows if any(row)]
    else:
        candidate_rows = rows
    best = None
    for row in candidate_rows:
        bpart = row[nrows:]
        nnz = sum(1 for v in bpart if v)
        if nnz == 0:
            continue
        support = tuple(i for i, v in enumerate(bpart) if v)
        key = (nnz, support)
        if best is None or key < best[0]:
            best = (key, row)
    if best is None:
        return None
    cleared = _normalize_relation(tower, best[1][nrows:] + best[1][:nrows])
    return ComponentEquation(tower, k, cleared[: m + 1], cleared[m + 1 :])


def extract_component_plde(tower, a, f, k):
    """Component-k equation applied to every parameter: (b, [f_k1 .. f_kd]).

    Returns None when the component has no nontrivial equation.
    """
    eq = extract_component_equation(tower, a, k)
    if eq is None:
        return None
    return eq.b, [eq.rhs_for(fj) for fj in f]

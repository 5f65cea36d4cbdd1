"""Integer lattice computations: kernels and basis reduction.

Used by the multiplicative-relation (pseudo-orbit) machinery; everything is
plain Python integers and unimodular column/row operations.
"""

from __future__ import annotations


def integer_kernel(rows):
    """Basis of {z in Z^n : A z = 0} for an integer matrix given by rows.

    Column reduction with mirrored identity; returned vectors are primitive
    and Z-linearly independent.
    """
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    a = [list(r) for r in rows]
    t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_sub(j, k, q):
        # column j -= q * column k
        for i in range(m):
            a[i][j] -= q * a[i][k]
        for i in range(n):
            t[i][j] -= q * t[i][k]

    def col_swap(j, k):
        for i in range(m):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(n):
            t[i][j], t[i][k] = t[i][k], t[i][j]

    col = 0
    for r in range(m):
        while True:
            nz = [j for j in range(col, n) if a[r][j]]
            if not nz:
                break
            if len(nz) == 1:
                col_swap(col, nz[0])
                col += 1
                break
            j0 = min(nz, key=lambda j: abs(a[r][j]))
            for j in nz:
                if j != j0:
                    q = a[r][j] // a[r][j0]
                    if q:
                        col_sub(j, j0, q)
    basis = []
    for j in range(col, n):
        vec = [t[i][j] for i in range(n)]
        if any(vec):
            basis.append(_primitive(vec))
    return basis


def _primitive(vec):
    g = 0
    for v in vec:
        g = _gcd(g, v)
    if g > 1:
        vec = [v // g for v in vec]
    for v in vec:
        if v:
            if v < 0:
                vec = [-x for x in vec]
            break
    return vec


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def lattice_row_basis(vectors):
    """Reduce a generating set of lattice vectors to an independent basis."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    basis = []
    for col in range(n):
        while True:
            nz = [r for r in rows if r[col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for i in range(n):
                    r[i] -= q * piv[i]
            rows = [r for r in rows if any(r)]
        nz = [r for r in rows if r[col]]
        if nz:
            piv = nz[0]
            basis.append(piv)
            rows = [r for r in rows if r is not piv]
    return basis


def kernel_with_congruences(rows, cong_rows, modulus):
    """Basis of {z : A z = 0 and B z = 0 mod modulus} over Z."""
    n = len(rows[0]) if rows else (len(cong_rows[0]) if cong_rows else 0)
    if rows:
        kernel = integer_kernel(rows)
    else:
        kernel = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if not kernel or not cong_rows or modulus <= 1:
        return kernel
    k = len(kernel)
    cond = [[sum(br[j] * kernel[i][j] for j in range(n)) for i in range(k)] for br in cong_rows]
    big = [row + [modulus if i == r else 0 for i in range(len(cong_rows))] for r, row in enumerate(cond)]
    vw = integer_kernel(big)
    vs = lattice_row_basis([v[:k] for v in vw])
    out = []
    for v in vs:
        z = [sum(v[i] * kernel[i][j] for i in range(k)) for j in range(n)]
        if any(z):
            out.append(z)
    return lattice_row_basis(out)

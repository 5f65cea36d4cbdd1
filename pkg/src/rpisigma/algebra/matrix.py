"""Exact linear algebra over any field element type.

Entries must support +, -, *, /, unary minus and truthiness (zero is falsy).
The multiplicative identity is passed in explicitly so vectors and pivots can
be synthesized.  Pivoting always takes the first nonzero entry, which keeps
results deterministic.
"""

from __future__ import annotations


class Matrix:
    __slots__ = ("rows", "one", "zero")

    def __init__(self, rows, one):
        self.rows = [list(r) for r in rows]
        self.one = one
        self.zero = one - one

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def transpose(self):
        return Matrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.one)

    def copy_rows(self):
        return [list(r) for r in self.rows]

    def rref(self):
        """Reduced row echelon form; returns (rows, pivot_columns)."""
        rows = self.copy_rows()
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r >= len(rows):
                break
            pivot = None
            for i in range(r, len(rows)):
                if rows[i][c]:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv_src = rows[r][c]
            rows[r] = [v / inv_src for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    factor = rows[i][c]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return rows, pivots

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of the right kernel, one vector per free column."""
        rows, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [self.zero] * self.ncols
            vec[fc] = self.one
            for r, pc in enumerate(pivots):
                v = rows[r][fc]
                if v:
                    vec[pc] = -v
            basis.append(vec)
        return basis

    def left_nullspace(self):
        return self.transpose().nullspace()

    def solve_parametric(self, rhs_columns):
        """Solve M x = b for several right-hand sides at once.

        Returns (particulars, nullspace): one particular solution per column,
        or None where the system is inconsistent; the nullspace is shared.
        """
        n = self.ncols
        aug = [list(row) + [col[i] for col in rhs_columns] for i, row in enumerate(self.rows)]
        aug_m = Matrix(aug, self.one)
        rows, pivots = aug_m.rref()
        pivots = [p for p in pivots if p < n]
        particulars = []
        for k in range(len(rhs_columns)):
            col = n + k
            consistent = True
            for r in range(len(pivots), len(rows)):
                if rows[r][col]:
                    consistent = False
                    break
            if not consistent:
                particulars.append(None)
                continue
            vec = [self.zero] * n
            for r, pc in enumerate(pivots):
                vec[pc] = rows[r][col]
            particulars.append(vec)
        null_rows = [row[:n] for row in self.rows]
        nullspace = Matrix(null_rows, self.one).nullspace()
        return particulars, nullspace


def identity_matrix(n, one):
    zero = one - one
    return Matrix([[one if i == j else zero for j in range(n)] for i in range(n)], one)

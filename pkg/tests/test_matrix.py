import pytest

from rpisigma.algebra import Matrix, identity_matrix
from conftest import seeded


def F(Q, v):
    return Q.from_rational(v)


def test_rank_identity(Q):
    assert identity_matrix(2, Q.one).rank() == 2


def test_solve_single_equation(Q):
    m = Matrix([[Q.one, Q.one]], Q.one)
    parts, null = m.solve_parametric([[F(Q, 2)]])
    assert parts[0] == [F(Q, 2), Q.zero]
    assert len(null) == 1
    v = null[0]
    assert v[0] + v[1] == Q.zero and any(v)


def test_nullspace_goldens(Q):
    assert identity_matrix(3, Q.one).nullspace() == []
    z = Matrix([[Q.zero, Q.zero, Q.zero]], Q.one)
    assert len(z.nullspace()) == 3
    m = Matrix([[Q.one, Q.one, -Q.one]], Q.one)
    basis = m.nullspace()
    assert len(basis) == 2
    for v in basis:
        assert v[0] + v[1] - v[2] == Q.zero


def test_inconsistent_flagged(Q):
    m = Matrix([[Q.one], [Q.one]], Q.one)
    parts, _ = m.solve_parametric([[Q.one, F(Q, 2)]])
    assert parts[0] is None


def test_rank_against_left_nullspace(Q):
    rng = seeded(3)
    for _ in range(25):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = Matrix([[F(Q, rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)], Q.one)
        assert m.rank() == rows - len(m.left_nullspace())


def test_solutions_satisfy_system(Q):
    rng = seeded(5)
    for _ in range(25):
        rows = rng.randint(1, 3)
        cols = rng.randint(1, 4)
        entries = [[F(Q, rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)]
        m = Matrix(entries, Q.one)
        rhs = [[F(Q, rng.randint(-3, 3)) for _ in range(rows)]]
        parts, null = m.solve_parametric(rhs)

        def apply(vec):
            return [sum((entries[i][j] * vec[j] for j in range(cols)), start=Q.zero) for i in range(rows)]

        if parts[0] is not None:
            combo = list(parts[0])
            for nv in null:
                scale = F(Q, rng.randint(-2, 2))
                combo = [a + nv[i] * scale for i, a in enumerate(combo)]
            # particular plus any nullspace combination still solves exactly
            assert apply(parts[0]) == rhs[0]
            assert apply(combo) == rhs[0]
        for nv in null:
            assert apply(nv) == [Q.zero] * rows

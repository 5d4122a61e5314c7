import random
from fractions import Fraction

import pytest

from colorlie.errors import AmbientMismatch, DimensionMismatch, NoSolution
from colorlie.linalg import (
    MatrixExact,
    Subspace,
    subspace_contains,
    subspace_equal,
    subspace_intersect,
    subspace_sum,
)
from colorlie.scalars import CycloScalar


def M(rows, conductor=1, cols=None):
    return MatrixExact.from_rationals(rows, conductor, cols=cols)


def test_rref_examples():
    assert M([[2, 0], [0, 0]]).rref() == M([[1, 0]])
    assert M([[2, 0], [0, 0]]).rank() == 1
    ident = MatrixExact.identity(3)
    assert ident.rref() == ident and ident.rank() == 3
    assert M([[1, 1], [1, 1]]).rref() == M([[1, 1]])


def test_rref_idempotent():
    rng = random.Random(3)
    for _ in range(50):
        rows = [[Fraction(rng.randint(-4, 4)) for _ in range(4)] for _ in range(3)]
        r = M(rows).rref()
        assert r.rref() == r


def test_kernel_examples():
    assert MatrixExact.zero(2, 3).kernel().dim == 3
    assert MatrixExact.identity(3).kernel().dim == 0
    k = M([[1, -1]]).kernel()
    assert k.dim == 1
    assert k == Subspace.from_rows(2, [M([[1, 1]]).entries[0]], 1)


def test_kernel_vectors_annihilate():
    rng = random.Random(11)
    for _ in range(40):
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(5)] for _ in range(3)]
        mat = M(rows)
        zero = (CycloScalar.zero(1),) * 3
        for v in mat.kernel().basis.entries:
            assert mat.matvec(v) == zero
        assert mat.kernel().dim == 5 - mat.rank()


def test_solve_examples():
    ident = MatrixExact.identity(3)
    b = [CycloScalar.from_rational(q) for q in (1, 2, 3)]
    assert ident.solve(b) == tuple(b)
    with pytest.raises(NoSolution):
        M([[1], [1]]).solve([CycloScalar.one(), CycloScalar.from_rational(2)])
    sol = M([[2]]).solve([CycloScalar.from_rational(3)])
    assert sol[0] == Fraction(3, 2)


def test_solve_satisfies_equation():
    rng = random.Random(23)
    for _ in range(40):
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(3)]
        mat = M(rows)
        x = [CycloScalar.from_rational(rng.randint(-3, 3)) for _ in range(4)]
        b = mat.matvec(x)
        sol = mat.solve(b)  # consistent by construction
        assert mat.matvec(sol) == b


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        M([[1, 2]]).solve([CycloScalar.one(), CycloScalar.one()])


def _span(rows, ambient, conductor=1):
    return Subspace.from_rows(
        ambient,
        [[CycloScalar.from_rational(e, conductor) for e in row] for row in rows],
        conductor,
    )


def test_subspace_examples():
    full = Subspace.full(2)
    e1 = _span([[1, 0]], 2)
    diag = _span([[1, 1]], 2)
    assert subspace_contains(full, e1)
    assert subspace_intersect(e1, _span([[0, 1]], 2)).dim == 0
    assert subspace_sum(e1, diag).dim == 2
    assert subspace_equal(subspace_sum(e1, diag), full)


def test_subspace_equality_is_canonical():
    s = _span([[1, 2, 3], [0, 1, 1]], 3)
    t = _span([[1, 3, 4], [2, 5, 7]], 3)  # same span, different generators
    assert subspace_equal(s, t)
    assert s.basis == t.basis


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        subspace_sum(_span([[1]], 1), _span([[1, 0]], 2))
    with pytest.raises(AmbientMismatch):
        subspace_equal(Subspace.zero(1), Subspace.zero(2))


def test_grassmann_identity_fuzz():
    rng = random.Random(1234)
    for _ in range(200):
        ambient = rng.randint(1, 8)
        conductor = rng.choice((1, 4))
        s = _random_subspace_simple(rng, ambient, conductor)
        t = _random_subspace_simple(rng, ambient, conductor)
        su, it = s.sum(t), s.intersect(t)
        assert su.dim + it.dim == s.dim + t.dim
        assert su.contains(s) and su.contains(t)
        assert s.contains(it) and t.contains(it)


def _random_subspace_simple(rng, ambient, conductor):
    nrows = rng.randint(0, ambient)
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ambient):
            c = CycloScalar.from_rational(
                Fraction(rng.randint(-3, 3), rng.randint(1, 2)), conductor
            )
            if conductor > 1 and rng.random() < 0.3:
                c = c * CycloScalar.root(conductor, rng.randrange(conductor))
            row.append(c)
        rows.append(row)
    return Subspace.from_rows(ambient, rows, conductor)

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedalg.fields import PrimeField, Rationals
from gradedalg.linalg import Matrix, RowSpace

F2 = PrimeField(2)
F5 = PrimeField(5)
QQ = Rationals()


def test_rank_and_kernel_small():
    m = Matrix(QQ, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert m.rank() == 2
    kb = m.kernel_basis()
    assert len(kb) == 1
    assert all(v == QQ.zero() for v in m.apply(kb[0]))


def test_solve_consistent_and_inconsistent():
    m = Matrix(QQ, [[1, 0], [0, 1], [1, 1]])
    assert m.solve([Fraction(2), Fraction(3), Fraction(5)]) == [Fraction(2), Fraction(3)]
    assert m.solve([Fraction(2), Fraction(3), Fraction(4)]) is None


def test_identity_and_zero():
    ident = Matrix.identity(F2, 3)
    assert ident.rank() == 3
    assert ident.kernel_basis() == []
    assert Matrix.zero(F2, 2, 3).rank() == 0


def test_mul_and_transpose():
    a = Matrix(F5, [[1, 2], [3, 4]])
    b = Matrix(F5, [[0, 1], [1, 0]])
    assert a.mul(b) == Matrix(F5, [[2, 1], [4, 3]])
    assert a.transpose() == Matrix(F5, [[1, 3], [2, 4]])


def test_rowspace_insert_and_quotient():
    rs = RowSpace(F2, 3)
    assert rs.insert([1, 0, 1])
    assert not rs.insert([1, 0, 1])
    assert rs.insert([0, 1, 0])
    assert rs.dim == 2
    assert rs.contains([1, 1, 1])
    assert not rs.contains([0, 0, 1])
    assert rs.nonpivot_columns() == [2]


def test_image_basis_spans_columns():
    m = Matrix(QQ, [[1, 1, 2], [0, 1, 1]])
    img = m.image_basis()
    assert len(img) == m.rank() == 2


_fields = st.sampled_from([F2, F5, QQ])


@st.composite
def _matrices(draw):
    field = draw(_fields)
    nrows = draw(st.integers(0, 5))
    ncols = draw(st.integers(0, 5))
    rows = [[field.from_int(draw(st.integers(-4, 4))) for _ in range(ncols)]
            for _ in range(nrows)]
    return Matrix(field, rows, ncols)


@settings(max_examples=200, deadline=None)
@given(_matrices())
def test_rank_nullity(m):
    assert m.rank() + len(m.kernel_basis()) == m.ncols


@settings(max_examples=200, deadline=None)
@given(_matrices())
def test_kernel_vectors_map_to_zero(m):
    z = m.field.zero()
    for v in m.kernel_basis():
        assert all(x == z for x in m.apply(v))


@settings(max_examples=200, deadline=None)
@given(_matrices())
def test_rank_bounded_by_shape(m):
    assert 0 <= m.rank() <= min(m.nrows, m.ncols)
    assert m.rank() == m.transpose().rank()

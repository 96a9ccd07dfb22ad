"""Exact scalar and dense linear algebra layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhbv.fields import Field, QQ, field_from_descriptor
from hhbv.linalg import Matrix, SpanSolver, poly_gcd, sparse_rank, squarefree


def test_field_descriptors():
    assert field_from_descriptor("q") == QQ
    assert field_from_descriptor("p:7").char == 7
    with pytest.raises(ValueError):
        field_from_descriptor("p:4")
    with pytest.raises(ValueError):
        field_from_descriptor("gf2")


def test_field_arithmetic():
    f5 = Field(5)
    assert f5.of(-1) == 4
    assert f5.inv(2) == 3
    assert f5.of_fraction(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        f5.of_fraction(Fraction(1, 5))
    assert QQ.of_fraction(Fraction(2, 4)) == Fraction(1, 2)
    assert QQ.inv(3) == Fraction(1, 3)
    assert f5.divides(10) and not f5.divides(3) and not QQ.divides(10)


def test_kernel_of_zero_and_identity():
    z = Matrix.zero(QQ, 2, 2)
    assert len(z.kernel_basis()) == 2
    assert Matrix.identity(QQ, 3).kernel_basis() == []


def test_circulant_kernel():
    # the e=3 difference circulant has rank e-1 with kernel spanned by (1,1,1)
    m = Matrix(QQ, [[1, 0, -1], [-1, 1, 0], [0, -1, 1]])
    assert m.rank() == 2
    (v,) = m.kernel_basis()
    assert m.mul_vec(v) == [0, 0, 0]
    pivot = next(x for x in v if x)
    assert [x / pivot for x in v] == [1, 1, 1]


def test_solve_in_span():
    ident = Matrix.identity(QQ, 3)
    assert ident.solve([1, 2, 3]) == [1, 2, 3]
    assert Matrix.zero(QQ, 2, 2).solve([1, 0]) is None
    col = Matrix(Field(2), [[1], [1], [1]])
    assert col.solve([1, 1, 1]) == [1]
    assert col.solve([1, 0, 1]) is None


def test_minimal_polynomial_examples():
    assert Matrix.identity(QQ, 2).minimal_polynomial() == [-1, 1]  # t - 1
    shift3 = Matrix(QQ, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    poly = shift3.minimal_polynomial()
    assert poly == [-1, 0, 0, 1]  # t^3 - 1
    assert squarefree(QQ, poly)
    shift2 = Matrix(Field(2), [[0, 1], [1, 0]])
    poly2 = shift2.minimal_polynomial()
    assert poly2 == [1, 0, 1]  # t^2 - 1 = (t - 1)^2 over F_2
    assert not squarefree(Field(2), poly2)
    empty = Matrix(QQ, [])
    assert empty.minimal_polynomial() == [1]


def test_poly_gcd_char_p_vanishing_derivative():
    # gcd(t^2 + 1, derivative 0) falls back to the polynomial itself
    assert poly_gcd(Field(2), [1, 0, 1], [0]) == [1, 0, 1]
    assert squarefree(Field(3), [0, 1])  # t


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4),
       st.lists(st.integers(-4, 4), min_size=1, max_size=16),
       st.sampled_from([0, 2, 5]))
def test_rank_plus_nullity(rows, cols, data, p):
    field = QQ if p == 0 else Field(p)
    entries = [[field.of(data[(i * cols + j) % len(data)]) for j in range(cols)]
               for i in range(rows)]
    m = Matrix(field, entries)
    assert m.rank() + len(m.kernel_basis()) == cols
    for v in m.kernel_basis():
        assert all(x == 0 for x in m.mul_vec(v))


def test_sparse_rank_matches_dense():
    field = Field(3)
    entries = [[1, 2, 0, 1], [0, 1, 1, 0], [1, 0, 2, 1], [2, 1, 1, 2]]
    dense = Matrix(field, entries)
    rows = [{j: x for j, x in enumerate(row) if x} for row in entries]
    assert sparse_rank(field, rows) == dense.rank()


def test_span_solver_matches_matrix_solve():
    field = QQ
    cols = [[1, 0, 2], [0, 1, 1], [1, 1, 3]]
    solver = SpanSolver(field, cols, 3)
    m = Matrix.from_columns(field, cols, 3)
    for target in ([1, 1, 3], [2, 1, 5], [0, 0, 1]):
        got = solver.solve(target)
        want = m.solve(target)
        assert (got is None) == (want is None)
        if got is not None:
            assert m.mul_vec(got) == [field.norm(t) for t in target]

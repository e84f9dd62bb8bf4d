import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import scalars, sympy_scalar
from hvrank2.linalg import apply, in_row_span, nullspace, rank
from hvrank2.scalars import Scalar


@st.composite
def matrices(draw):
    nrows = draw(st.integers(1, 5))
    ncols = draw(st.integers(1, 6))
    zero = st.just(Scalar(0))
    entry = st.one_of(zero, zero, scalars)
    return [{j: v for j in range(ncols) if (v := draw(entry))} for _ in range(nrows)], ncols


def to_sympy(rows, ncols):
    return sympy.Matrix([[sympy_scalar(r.get(j, Scalar(0))) for j in range(ncols)] for r in rows])


@given(matrices())
def test_nullspace_against_sympy(m):
    rows, ncols = m
    basis = nullspace(rows, ncols)
    ref = to_sympy(rows, ncols)
    assert len(basis) == ncols - ref.rank()
    assert rank(rows) == ref.rank()
    for v in basis:
        assert not any(apply(rows, v))


@given(matrices())
def test_nullspace_is_canonical(m):
    rows, ncols = m
    # a different presentation of the same row space gives the same basis
    doubled = rows + [{j: v * 2 for j, v in r.items()} for r in rows]
    assert nullspace(rows, ncols) == nullspace(list(reversed(doubled)), ncols)


def test_in_row_span():
    rows = [{0: Scalar(1), 1: Scalar(1)}, {1: Scalar(1), 2: Scalar(-1)}]
    assert in_row_span(rows, {0: Scalar(1), 2: Scalar(1)})
    assert not in_row_span(rows, {0: Scalar(1)})


def test_nullspace_identity():
    rows = [{0: Scalar(1)}, {1: Scalar(1)}]
    assert nullspace(rows, 2) == []
    assert nullspace([], 2) == [{0: Scalar(1)}, {1: Scalar(1)}]

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from leibsuper import linalg

small = st.integers(-4, 4).map(Fraction)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def square(max_n=5):
    return st.integers(1, max_n).flatmap(lambda k: matrices(k, k))


def as_sympy(a):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in a])


@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c))))
def test_rank_matches_sympy(a):
    assert linalg.rank(a) == as_sympy(a).rank()


@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c))))
def test_nullspace_is_a_kernel_basis(a):
    ncols = len(a[0])
    basis = linalg.nullspace(a, ncols)
    assert len(basis) == ncols - linalg.rank(a)
    for v in basis:
        assert all(x == 0 for x in linalg.matvec(a, v))
    if basis:
        assert linalg.rank(basis) == len(basis)


@given(square())
def test_determinant_matches_sympy(a):
    assert linalg.determinant(a) == as_sympy(a).det()


@given(square())
def test_inverse(a):
    if linalg.determinant(a) == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(a)
    else:
        assert linalg.matmul(a, linalg.inverse(a)) == linalg.identity(len(a))


@given(square(4), square(4))
def test_matmul_matches_sympy(a, b):
    if len(a) != len(b):
        return
    assert as_sympy(linalg.matmul(a, b)) == as_sympy(a) * as_sympy(b)


def _strictly_upper(k, entries):
    a = [[Fraction(0)] * k for _ in range(k)]
    it = iter(entries)
    for i in range(k):
        for j in range(i + 1, k):
            a[i][j] = next(it)
    return a


@given(st.integers(1, 6).flatmap(
    lambda k: st.lists(st.integers(-2, 2).map(Fraction), min_size=k * (k - 1) // 2,
                       max_size=k * (k - 1) // 2).map(lambda e: _strictly_upper(k, e))))
def test_jordan_partition_matches_sympy(a):
    _, J = as_sympy(a).jordan_form()
    sizes, run = [], 1
    k = J.shape[0]
    for i in range(k - 1):
        if J[i, i + 1] == 1:
            run += 1
        else:
            sizes.append(run)
            run = 1
    sizes.append(run)
    assert linalg.jordan_partition(a) == tuple(sorted(sizes, reverse=True))


def test_jordan_partition_examples():
    shift = [[Fraction(int(j == i + 1)) for j in range(4)] for i in range(4)]
    assert linalg.jordan_partition(shift) == (4,)
    assert linalg.jordan_partition([[Fraction(0)] * 3 for _ in range(3)]) == (1, 1, 1)
    with pytest.raises(ValueError):
        linalg.jordan_partition([[Fraction(1)]])


def test_rational_sqrt():
    assert linalg.rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert linalg.rational_sqrt(Fraction(2)) is None
    assert linalg.rational_sqrt(Fraction(-1)) is None

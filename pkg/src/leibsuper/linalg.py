"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Everything here is
small-dimensional (a few dozen columns at most), so plain Gaussian elimination
is the right tool.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]


def as_fraction_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        row_r = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row_i = m[i]
                    m[i] = [a - f * b for a, b in zip(row_i, row_r)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of {x : M x = 0} as a list of vectors (one per free column)."""
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    if not a:
        return []
    ncols = len(b[0]) if b else 0
    brows = [[(j, y) for j, y in enumerate(r) if y] for r in b]
    out: Matrix = []
    for row in a:
        acc = [Fraction(0)] * ncols
        for k, x in enumerate(row):
            if x:
                for j, y in brows[k]:
                    acc[j] += x * y
        out.append(acc)
    return out


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def is_zero_matrix(a: Sequence[Sequence[Fraction]]) -> bool:
    return all(x == 0 for row in a for x in row)


def inverse(a: Sequence[Sequence[Fraction]]) -> Matrix:
    """Inverse of a square matrix; raises ZeroDivisionError if singular."""
    n = len(a)
    aug = [list(row) + ident for row, ident in zip(a, identity(n))]
    red, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def determinant(a: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [list(r) for r in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        p = m[c][c]
        det *= p
        for i in range(c + 1, n):
            f = m[i][c] / p
            if f != 0:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def jordan_partition(a: Sequence[Sequence[Fraction]]) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix, in weakly decreasing order.

    Uses the rank sequence r_k = rank(A^k): the number of blocks of size at
    least k is r_{k-1} - r_k.  Raises ValueError if A is not nilpotent.
    """
    n = len(a)
    ranks = [n]
    power = [list(r) for r in a]
    while ranks[-1] > 0:
        r = rank(power)
        if r == ranks[-1]:
            raise ValueError("matrix is not nilpotent")
        ranks.append(r)
        power = matmul(power, a)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts: list[int] = []
    for k in range(len(at_least), 0, -1):
        exactly = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        parts.extend([k] * exactly)
    return tuple(parts)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    from math import isqrt

    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None

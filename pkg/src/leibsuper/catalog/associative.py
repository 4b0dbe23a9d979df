"""Leibniz superalgebras from an associative superalgebra with a special operator D.

Given an associative graded product ``ab`` and a degree-0 linear map D with
``D(a(Db)) = (Da)(Db) = D((Da)b)``, the bracket

    <a, b> = a(Db) - (-1)^{|a||b|} (Db)a

satisfies the graded Leibniz identity.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..algebra import SparseVec, SuperAlgebra, _axpy, leibniz_defects, sparse_bracket
from ..errors import AlgebraError, DimensionMismatch


class DConditionError(AlgebraError):
    pass


class AssociativityError(AlgebraError):
    pass


def _block_op(n: int, m: int, d_even: Sequence[Sequence], d_odd: Sequence[Sequence]) -> list[SparseVec]:
    """Column j of each block is the image of the j-th basis vector."""
    if len(d_even) != n or any(len(r) != n for r in d_even):
        raise DimensionMismatch("even block of D must be n x n")
    if len(d_odd) != m or any(len(r) != m for r in d_odd):
        raise DimensionMismatch("odd block of D must be m x m")
    cols: list[SparseVec] = []
    for j in range(n):
        cols.append({i: Fraction(d_even[i][j]) for i in range(n) if d_even[i][j] != 0})
    for j in range(m):
        cols.append({n + i: Fraction(d_odd[i][j]) for i in range(m) if d_odd[i][j] != 0})
    return cols


def _apply(cols: list[SparseVec], v: SparseVec) -> SparseVec:
    out: SparseVec = {}
    for j, c in v.items():
        _axpy(out, c, cols[j])
    return out


def associativity_defects(assoc: SuperAlgebra) -> list[tuple[int, int, int]]:
    N = assoc.dim
    bad = []
    for a in range(N):
        for b in range(N):
            ab = assoc.product(a, b)
            for c in range(N):
                left = sparse_bracket(assoc, ab, {c: Fraction(1)})
                right = sparse_bracket(assoc, {a: Fraction(1)}, assoc.product(b, c))
                if left != right:
                    bad.append((a, b, c))
    return bad


def d_condition_defects(assoc: SuperAlgebra, d_even, d_odd) -> list[tuple[int, int]]:
    D = _block_op(assoc.n, assoc.m, d_even, d_odd)
    N = assoc.dim
    bad = []
    for a in range(N):
        ea = {a: Fraction(1)}
        Da = D[a]
        for b in range(N):
            Db = D[b]
            mid = sparse_bracket(assoc, Da, Db)
            first = _apply(D, sparse_bracket(assoc, ea, Db))
            last = _apply(D, sparse_bracket(assoc, Da, {b: Fraction(1)}))
            if not (first == mid == last):
                bad.append((a, b))
    return bad


def from_associative_derivation(assoc: SuperAlgebra, d_even, d_odd) -> SuperAlgebra:
    """The law <a,b> = a(Db) - (-1)^{|a||b|}(Db)a.

    ``assoc`` carries the associative product as structure constants.  Raises
    AssociativityError or DConditionError naming the first failing basis
    tuple, and asserts that the result satisfies the Leibniz identity.
    """
    n, m = assoc.n, assoc.m
    lab = assoc.labels
    bad = associativity_defects(assoc)
    if bad:
        a, b, c = bad[0]
        raise AssociativityError(f"({lab[a]}{lab[b]}){lab[c]} != {lab[a]}({lab[b]}{lab[c]})")
    D = _block_op(n, m, d_even, d_odd)
    dbad = d_condition_defects(assoc, d_even, d_odd)
    if dbad:
        a, b = dbad[0]
        raise DConditionError(f"D(a(Db)) = (Da)(Db) = D((Da)b) fails for a = {lab[a]}, b = {lab[b]}")
    table = {}
    for a in range(n + m):
        for b in range(n + m):
            Db = D[b]
            out = dict(sparse_bracket(assoc, {a: Fraction(1)}, Db))
            sign = -1 if assoc.parity(a) and assoc.parity(b) else 1
            _axpy(out, Fraction(-sign), sparse_bracket(assoc, Db, {a: Fraction(1)}))
            out = {k: c for k, c in out.items() if c != 0}
            if out:
                table[(a, b)] = out
    L = SuperAlgebra(n, m, table, assoc.even_labels, assoc.odd_labels)
    if leibniz_defects(L):
        raise AlgebraError("construction produced a non-Leibniz law")
    return L

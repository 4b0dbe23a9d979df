"""Adapted bases for zero-filiform Leibniz superalgebras.

In an adapted basis X_0..X_{n-1}, Y_1..Y_m the law satisfies

    [X_i, X_0] = X_{i+1}  (i < n-1),   [X_{n-1}, X_0] = 0,
    [Y_j, X_0] = Y_{j+1}  (j < m),     [Y_m, X_0] = 0,
    [Y_j, X_k] = 0 for k >= 1,          [X_i, X_k] = 0 for k >= 1.

Products [X_i, Y_j] and [Y_i, Y_j] are left as they come.
"""
from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .algebra import GradedMap, GradedVector, SuperAlgebra, apply_basis_change, bracket, member
from .errors import NotZeroFiliformError
from .invariants import DEFAULT_SEED, Shape, _candidates, classify_shape, derived_even


def zf_relation_defects(A: SuperAlgebra) -> list[str]:
    """Adapted-basis relations that fail for A, as readable strings."""
    n, m = A.n, A.m
    bad = []

    def expect(i, j, target):
        got = A.product(i, j)
        want = {target: Fraction(1)} if target is not None else {}
        if got != want:
            bad.append(f"[{A.labels[i]},{A.labels[j]}]")

    for i in range(n):
        expect(i, 0, i + 1 if i < n - 1 else None)
        for k in range(1, n):
            expect(i, k, None)
    for j in range(m):
        expect(n + j, 0, n + j + 1 if j < m - 1 else None)
        for k in range(1, n):
            expect(n + j, k, None)
    return bad


def _chain(A: SuperAlgebra, start: GradedVector, x0: GradedVector, length: int) -> list[GradedVector] | None:
    out = [start]
    for _ in range(length - 1):
        out.append(bracket(A, out[-1], x0))
    return out


def adapted_basis_zf(A: SuperAlgebra, sample_count: int = 16, seed: int = DEFAULT_SEED) -> GradedMap:
    """Graded basis change taking a zero-filiform law to an adapted basis.

    The generator X_0 is the first candidate (basis vectors, pairwise sums,
    then seeded random vectors) outside [L_0, L_0] whose right multiplication
    is a single Jordan block on L_0 and on L_1.  Then X_i = [X_{i-1}, X_0]
    with X_1 = [X_0, X_0], and Y_m..Y_1 come from an odd vector of maximal
    height under R_{X_0}.
    """
    if classify_shape(A) is not Shape.ZERO_FILIFORM:
        raise NotZeroFiliformError("adapted_basis_zf requires a zero-filiform superalgebra")
    n, m = A.n, A.m
    derived = derived_even(A)
    zero_odd = (Fraction(0),) * m
    for coords in _candidates(n, sample_count, seed):
        x0 = GradedVector(tuple(coords), zero_odd)
        if member(derived, x0):
            continue
        evens = _chain(A, x0, x0, n)
        if linalg.rank([v.even for v in evens]) < n:
            continue
        odds = _odd_chain(A, x0, m, seed)
        if odds is None:
            continue
        g = GradedMap.from_images(A, evens, odds)
        if not zf_relation_defects(apply_basis_change(A, g)):
            return g
    raise NotZeroFiliformError("no generator with full even and odd chains was found")


def _odd_chain(A: SuperAlgebra, x0: GradedVector, m: int, seed: int) -> list[GradedVector] | None:
    if m == 0:
        return []
    n = A.n
    ze = (Fraction(0),) * n
    starts = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    rng = random.Random(seed + 1)
    starts += [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m)] for _ in range(4)]
    for coords in starts:
        ys = _chain(A, GradedVector(ze, tuple(coords)), x0, m)
        if linalg.rank([y.odd for y in ys]) == m:
            return ys
    return None


def to_adapted(A: SuperAlgebra, **kw) -> tuple[SuperAlgebra, GradedMap]:
    g = adapted_basis_zf(A, **kw)
    return apply_basis_change(A, g), g

"""Isomorphism invariants of Leibniz superalgebras."""
from __future__ import annotations

import random
from dataclasses import dataclass, field, fields
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence

from . import linalg
from .algebra import (
    GradedSubspace,
    GradedVector,
    SuperAlgebra,
    is_lie,
    member,
    product_subspace,
    right_mul_matrix,
)
from .errors import AlgebraError, DimensionMismatch, NotNilpotentError

DEFAULT_SEED = 20070101
DEFAULT_SAMPLES = 8


class Shape(str, Enum):
    ZERO_FILIFORM = "ZeroFiliform"
    FILIFORM = "Filiform"
    OTHER = "Other"


class AnnihilatorKind(str, Enum):
    RIGHT = "Right"
    LEFT = "Left"
    CENTER = "Center"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            for k in cls:
                if k.value.lower() == value.lower():
                    return k
        return None


# ---------------------------------------------------------------------------
# central series
# ---------------------------------------------------------------------------


def central_series(A: SuperAlgebra) -> tuple[list[GradedSubspace], int | None]:
    """C^0 = L, C^{k+1} = [C^k, L], up to the first repeat.

    Returns the distinct terms and the nilindex (first k with C^k = 0), or
    None when the series stabilizes at a nonzero subspace.
    """
    L = GradedSubspace.whole(A.n, A.m)
    series = [L]
    while not series[-1].is_zero():
        nxt = product_subspace(A, series[-1], L)
        if nxt == series[-1]:
            return series, None
        series.append(nxt)
    return series, len(series) - 1


def nilindex(A: SuperAlgebra) -> int | None:
    return central_series(A)[1]


def series_dims(A: SuperAlgebra) -> tuple[int, ...]:
    return tuple(S.dim for S in central_series(A)[0])


def _require_nilpotent(A: SuperAlgebra) -> None:
    if nilindex(A) is None:
        raise NotNilpotentError("the algebra is not nilpotent")


def graded_central_series(A: SuperAlgebra) -> tuple[list[GradedSubspace], list[GradedSubspace], tuple[int, int]]:
    """C^{k+1}(L_i) = [C^k(L_i), L_0] for i = 0, 1, and the s-nilindex (p, q)."""
    _require_nilpotent(A)
    L0 = GradedSubspace.even_part(A.n, A.m)
    out = []
    for start in (L0, GradedSubspace.odd_part(A.n, A.m)):
        chain = [start]
        while not chain[-1].is_zero():
            chain.append(product_subspace(A, chain[-1], L0))
        out.append(chain)
    s0, s1 = out
    return s0, s1, (len(s0) - 1, len(s1) - 1)


def s_nilindex(A: SuperAlgebra) -> tuple[int, int]:
    return graded_central_series(A)[2]


def classify_shape(A: SuperAlgebra) -> Shape:
    p, q = s_nilindex(A)
    if (p, q) == (A.n, A.m):
        return Shape.ZERO_FILIFORM
    if (p, q) == (A.n - 1, A.m):
        return Shape.FILIFORM
    return Shape.OTHER


# ---------------------------------------------------------------------------
# annihilators
# ---------------------------------------------------------------------------


def annihilator(A: SuperAlgebra, kind: AnnihilatorKind | str) -> GradedSubspace:
    """Right {x : [L,x]=0}, Left {x : [x,L]=0} or their intersection."""
    kind = AnnihilatorKind(kind)
    N = A.dim
    parts = []
    for lo, hi in ((0, A.n), (A.n, N)):
        unknowns = range(lo, hi)
        rows: dict[tuple[str, int, int], list[Fraction]] = {}
        for j_pos, j in enumerate(unknowns):
            for e in range(N):
                sides = []
                if kind in (AnnihilatorKind.RIGHT, AnnihilatorKind.CENTER):
                    sides.append(("r", A.product(e, j)))
                if kind in (AnnihilatorKind.LEFT, AnnihilatorKind.CENTER):
                    sides.append(("l", A.product(j, e)))
                for tag, vec in sides:
                    for k, c in vec.items():
                        row = rows.setdefault((tag, e, k), [Fraction(0)] * (hi - lo))
                        row[j_pos] += c
        parts.append(linalg.nullspace(list(rows.values()), hi - lo) if rows else linalg.identity(hi - lo))
    return GradedSubspace.from_parts(A.n, A.m, parts[0], parts[1])


# ---------------------------------------------------------------------------
# Engel flag
# ---------------------------------------------------------------------------


def _odd_block(A: SuperAlgebra, x: GradedVector) -> list[list[Fraction]]:
    R = right_mul_matrix(A, x)
    return [row[A.n:] for row in R[A.n:]]


def _even_block(A: SuperAlgebra, x: GradedVector) -> list[list[Fraction]]:
    R = right_mul_matrix(A, x)
    return [row[: A.n] for row in R[: A.n]]


def engel_flag(A: SuperAlgebra) -> list[GradedSubspace]:
    """Iterated kernels V_1 = {v in L_1 : [v, L_0] = 0}, V_{k+1} = {v : [v, L_0] in V_k}."""
    _require_nilpotent(A)
    ops = [_odd_block(A, A.basis_vector(i)) for i in range(A.n)]
    chain: list[GradedSubspace] = []
    current = GradedSubspace.zero(A.n, A.m)
    while True:
        _, functionals = current.annihilator_rows()
        rows = []
        for R in ops:
            rows.extend(linalg.matmul(functionals, R) if functionals else [])
        kernel = linalg.nullspace(rows, A.m) if rows else linalg.identity(A.m)
        nxt = GradedSubspace.from_parts(A.n, A.m, [], kernel)
        if chain and nxt == current:
            raise NotNilpotentError("odd part is not a nilpotent module over L_0")
        chain.append(nxt)
        current = nxt
        if current.dim == A.m:
            return chain


# ---------------------------------------------------------------------------
# characteristic sequence
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CharSequence:
    even_part: tuple[int, ...]
    odd_part: tuple[int, ...]

    def __str__(self) -> str:
        return f"({','.join(map(str, self.even_part))}|{','.join(map(str, self.odd_part))})"


def _candidates(n: int, sample_count: int, seed: int) -> list[list[Fraction]]:
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    cands = list(basis)
    for i in range(n):
        for j in range(i + 1, n):
            cands.append([a + b for a, b in zip(basis[i], basis[j])])
    rng = random.Random(seed)
    for _ in range(sample_count):
        cands.append([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)])
    return cands


def derived_even(A: SuperAlgebra) -> GradedSubspace:
    """[L_0, L_0]."""
    L0 = GradedSubspace.even_part(A.n, A.m)
    return product_subspace(A, L0, L0)


def char_sequence(A: SuperAlgebra, sample_count: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> CharSequence:
    """Lexicographically largest Jordan types of R_X on L_0 and on L_1, X in L_0 - [L_0, L_0].

    X ranges over the basis vectors, their pairwise sums and ``sample_count``
    seeded random even vectors.
    """
    if A.n == 0:
        raise AlgebraError("characteristic sequence needs a nonzero even part")
    D = derived_even(A)
    best0: tuple[int, ...] | None = None
    best1: tuple[int, ...] | None = None
    for coords in _candidates(A.n, sample_count, seed):
        x = GradedVector(tuple(coords), (Fraction(0),) * A.m)
        if member(D, x):
            continue
        R = right_mul_matrix(A, x)
        try:
            p0 = linalg.jordan_partition([row[: A.n] for row in R[: A.n]])
            p1 = linalg.jordan_partition([row[A.n:] for row in R[A.n:]]) if A.m else ()
        except ValueError:
            raise NotNilpotentError(f"R_X is not nilpotent for X = {coords}") from None
        best0 = p0 if best0 is None or p0 > best0 else best0
        best1 = p1 if best1 is None or p1 > best1 else best1
    if best0 is None:
        raise AlgebraError("no candidate outside [L_0, L_0] was found")
    return CharSequence(best0, best1)


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantProfile:
    nilindex: int | None
    s_nilindex: tuple[int, int] | None
    series_dims: tuple[int, ...]
    graded_series_dims: tuple[tuple[int, ...], tuple[int, ...]] | None
    dim_right_ann: int
    dim_left_ann: int
    dim_center: int
    char_seq: CharSequence | None
    is_lie: bool
    shape: Shape | None
    seed: int = field(default=DEFAULT_SEED, compare=False)
    sample_count: int = field(default=DEFAULT_SAMPLES, compare=False)

    def series_dim(self, s: int) -> int:
        """dim C^s(L); the series is constant after it stabilizes."""
        d = self.series_dims
        return d[s] if s < len(d) else (0 if self.nilindex is not None else d[-1])

    def to_dict(self) -> dict[str, Any]:
        return {
            "nilindex": self.nilindex,
            "s_nilindex": list(self.s_nilindex) if self.s_nilindex else None,
            "series_dims": list(self.series_dims),
            "graded_series_dims": [list(x) for x in self.graded_series_dims] if self.graded_series_dims else None,
            "dim_right_ann": self.dim_right_ann,
            "dim_left_ann": self.dim_left_ann,
            "dim_center": self.dim_center,
            "char_seq": str(self.char_seq) if self.char_seq else None,
            "is_lie": self.is_lie,
            "shape": self.shape.value if self.shape else None,
            "seed": self.seed,
            "sample_count": self.sample_count,
        }


def invariant_profile(A: SuperAlgebra, sample_count: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> InvariantProfile:
    series, nil = central_series(A)
    if nil is not None:
        s0, s1, snil = graded_central_series(A)
        graded = (tuple(S.dim for S in s0), tuple(S.dim for S in s1))
        shape = classify_shape(A)
    else:
        snil, graded, shape = None, None, None
    try:
        cs = char_sequence(A, sample_count, seed) if A.n else None
    except AlgebraError:  # not nilpotent, or L_0 = [L_0, L_0]
        cs = None
    return InvariantProfile(
        nilindex=nil,
        s_nilindex=snil,
        series_dims=tuple(S.dim for S in series),
        graded_series_dims=graded,
        dim_right_ann=annihilator(A, AnnihilatorKind.RIGHT).dim,
        dim_left_ann=annihilator(A, AnnihilatorKind.LEFT).dim,
        dim_center=annihilator(A, AnnihilatorKind.CENTER).dim,
        char_seq=cs,
        is_lie=is_lie(A),
        shape=shape,
        seed=seed,
        sample_count=sample_count,
    )


# Annihilator dimensions first: they are the cheapest separators in the
# classification tables and also feed the closure conditions.
DISTINGUISH_ORDER = (
    "dim_right_ann",
    "dim_left_ann",
    "dim_center",
    "nilindex",
    "s_nilindex",
    "series_dims",
    "graded_series_dims",
    "char_seq",
    "is_lie",
    "shape",
)


@dataclass(frozen=True)
class Witness:
    invariant: str
    value_a: Any
    value_b: Any


def distinguish(A: SuperAlgebra, B: SuperAlgebra) -> Witness | None:
    """First invariant (in DISTINGUISH_ORDER) on which A and B differ.

    None means the invariants do not separate A and B; it does not mean the
    two laws are isomorphic.
    """
    if (A.n, A.m) != (B.n, B.m):
        raise DimensionMismatch("distinguish needs algebras of the same type (n, m)")
    return compare_profiles(invariant_profile(A), invariant_profile(B))


def compare_profiles(pa: InvariantProfile, pb: InvariantProfile) -> Witness | None:
    for name in DISTINGUISH_ORDER:
        a, b = getattr(pa, name), getattr(pb, name)
        if a != b:
            return Witness(name, a, b)
    return None


@dataclass(frozen=True)
class Obstruction:
    condition: str  # "series", "Z", "L" or "Cent"
    value_lambda: int
    value_mu: int
    s: int | None = None


def closure_obstruction(lam: SuperAlgebra, mu: SuperAlgebra) -> list[Obstruction]:
    """Dimension conditions certifying that mu is not in the orbit closure of lam.

    An empty list is inconclusive.
    """
    if (lam.n, lam.m) != (mu.n, mu.m):
        raise DimensionMismatch("closure_obstruction needs algebras of the same type (n, m)")
    pl, pm = invariant_profile(lam), invariant_profile(mu)
    out = []
    span = max(len(pl.series_dims), len(pm.series_dims))
    for s in range(span):
        a, b = pl.series_dim(s), pm.series_dim(s)
        if a < b:
            out.append(Obstruction("series", a, b, s))
    for name, attr in (("Z", "dim_right_ann"), ("L", "dim_left_ann"), ("Cent", "dim_center")):
        a, b = getattr(pl, attr), getattr(pm, attr)
        if a > b:
            out.append(Obstruction(name, a, b))
    return out


def profile_fields() -> list[str]:
    return [f.name for f in fields(InvariantProfile) if f.compare]

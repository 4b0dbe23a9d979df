"""Leibniz superalgebras given by structure constants.

A law on ``L = L_0 + L_1`` with ``dim L_0 = n`` and ``dim L_1 = m`` is stored
as a sparse table over a single concatenated basis: indices ``0..n-1`` are the
even basis vectors and ``n..n+m-1`` the odd ones.  The four tensors C, D, E,
F (even*even, even*odd, odd*even, odd*odd) are views of that table.

All arithmetic is exact (:class:`fractions.Fraction`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from . import linalg
from .errors import (
    DimensionMismatch,
    GradingError,
    NotHomogeneous,
    SingularMapError,
)

Rational = Fraction
Scalar = Union[int, Fraction, str]
SparseVec = dict[int, Fraction]


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedVector:
    """An element of the graded space, split into even and odd coordinates."""

    even: tuple[Fraction, ...]
    odd: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "even", tuple(_frac(x) for x in self.even))
        object.__setattr__(self, "odd", tuple(_frac(x) for x in self.odd))

    @classmethod
    def zero(cls, n: int, m: int) -> GradedVector:
        return cls((Fraction(0),) * n, (Fraction(0),) * m)

    @classmethod
    def from_flat(cls, n: int, coords: Sequence[Scalar]) -> GradedVector:
        return cls(tuple(coords[:n]), tuple(coords[n:]))

    @classmethod
    def from_sparse(cls, n: int, m: int, vec: Mapping[int, Fraction]) -> GradedVector:
        flat = [Fraction(0)] * (n + m)
        for k, c in vec.items():
            flat[k] = c
        return cls.from_flat(n, flat)

    @property
    def flat(self) -> tuple[Fraction, ...]:
        return self.even + self.odd

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.even), len(self.odd)

    def sparse(self) -> SparseVec:
        return {i: c for i, c in enumerate(self.flat) if c != 0}

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.flat)

    def is_homogeneous(self) -> bool:
        return all(c == 0 for c in self.even) or all(c == 0 for c in self.odd)

    @property
    def degree(self) -> int:
        """0 for even, 1 for odd.  The zero vector counts as even."""
        if not self.is_homogeneous():
            raise NotHomogeneous("vector has both even and odd components")
        return 0 if any(c != 0 for c in self.even) or self.is_zero() else 1

    def _check(self, other: GradedVector) -> None:
        if self.dims != other.dims:
            raise DimensionMismatch(f"vector dims {self.dims} vs {other.dims}")

    def __add__(self, other: GradedVector) -> GradedVector:
        self._check(other)
        return GradedVector(
            tuple(a + b for a, b in zip(self.even, other.even)),
            tuple(a + b for a, b in zip(self.odd, other.odd)),
        )

    def __sub__(self, other: GradedVector) -> GradedVector:
        return self + (-1) * other

    def __rmul__(self, c: Scalar) -> GradedVector:
        c = _frac(c)
        return GradedVector(tuple(c * a for a in self.even), tuple(c * a for a in self.odd))

    def __neg__(self) -> GradedVector:
        return (-1) * self


def _axpy(acc: SparseVec, c: Fraction, vec: Mapping[int, Fraction]) -> None:
    """acc += c * vec, dropping cancelled entries."""
    for k, v in vec.items():
        s = acc.get(k, 0) + c * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------


class SuperAlgebra:
    """Structure constants of a bilinear product on a Z2-graded space.

    ``table`` maps ``(i, j)`` to ``{k: coefficient}`` meaning
    ``[e_i, e_j] = sum_k coefficient * e_k`` in the concatenated basis.
    Unlisted products are zero.  Instances are treated as immutable.
    """

    __slots__ = ("n", "m", "even_labels", "odd_labels", "_table", "_key", "_index")

    def __init__(
        self,
        n: int,
        m: int,
        table: Mapping[tuple[int, int], Mapping[int, Scalar]] | None = None,
        even_labels: Sequence[str] | None = None,
        odd_labels: Sequence[str] | None = None,
    ):
        if n < 0 or m < 0:
            raise DimensionMismatch("dimensions must be nonnegative")
        self.n, self.m = n, m
        self.even_labels = tuple(even_labels) if even_labels is not None else tuple(f"X{i}" for i in range(n))
        self.odd_labels = tuple(odd_labels) if odd_labels is not None else tuple(f"Y{j}" for j in range(1, m + 1))
        if len(self.even_labels) != n or len(self.odd_labels) != m:
            raise DimensionMismatch("label count does not match dimensions")
        labels = self.even_labels + self.odd_labels
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be unique")
        self._index = {lab: i for i, lab in enumerate(labels)}
        N = n + m
        clean: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), vec in (table or {}).items():
            if not (0 <= i < N and 0 <= j < N):
                raise DimensionMismatch(f"product index ({i},{j}) out of range")
            out = {}
            for k, c in vec.items():
                c = _frac(c)
                if c == 0:
                    continue
                if not 0 <= k < N:
                    raise DimensionMismatch(f"result index {k} out of range")
                if (self.parity(i) + self.parity(j)) % 2 != self.parity(k):
                    raise GradingError(
                        f"[{labels[i]},{labels[j]}] has a component on {labels[k]} of the wrong parity"
                    )
                out[k] = c
            if out:
                clean[(i, j)] = out
        self._table = clean
        self._key = tuple(sorted((ij, tuple(sorted(v.items()))) for ij, v in clean.items()))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_labels(
        cls,
        n: int,
        m: int,
        products: Mapping[tuple[str, str], Mapping[str, Scalar]],
        even_labels: Sequence[str] | None = None,
        odd_labels: Sequence[str] | None = None,
    ) -> SuperAlgebra:
        shell = cls(n, m, None, even_labels, odd_labels)
        idx = shell.index
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (a, b), vec in products.items():
            tgt = table.setdefault((idx(a), idx(b)), {})
            for lab, c in vec.items():
                k = idx(lab)
                tgt[k] = tgt.get(k, 0) + _frac(c)
        return cls(n, m, table, shell.even_labels, shell.odd_labels)

    @classmethod
    def abelian(cls, n: int, m: int) -> SuperAlgebra:
        return cls(n, m, {})

    # -- basic structure -----------------------------------------------------

    @property
    def dim(self) -> int:
        return self.n + self.m

    @property
    def labels(self) -> tuple[str, ...]:
        return self.even_labels + self.odd_labels

    def parity(self, i: int) -> int:
        return 0 if i < self.n else 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def product(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as a sparse vector (a fresh dict)."""
        return dict(self._table.get((i, j), {}))

    def products(self) -> Iterator[tuple[int, int, dict[int, Fraction]]]:
        for (i, j), v in sorted(self._table.items()):
            yield i, j, dict(v)

    @property
    def table(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {ij: dict(v) for ij, v in self._table.items()}

    def basis_vector(self, which: int | str) -> GradedVector:
        i = self.index(which) if isinstance(which, str) else which
        return GradedVector.from_sparse(self.n, self.m, {i: Fraction(1)})

    def vector(self, coords: Mapping[str, Scalar]) -> GradedVector:
        return GradedVector.from_sparse(
            self.n, self.m, {self.index(k): _frac(c) for k, c in coords.items()}
        )

    def _tensor(self, rows: range, cols: range, outs: range) -> list:
        return [
            [[self._table.get((i, j), {}).get(k, Fraction(0)) for k in outs] for j in cols]
            for i in rows
        ]

    @property
    def C(self) -> list:
        ev = range(self.n)
        return self._tensor(ev, ev, ev)

    @property
    def D(self) -> list:
        ev, od = range(self.n), range(self.n, self.dim)
        return self._tensor(ev, od, od)

    @property
    def E(self) -> list:
        ev, od = range(self.n), range(self.n, self.dim)
        return self._tensor(od, ev, od)

    @property
    def F(self) -> list:
        ev, od = range(self.n), range(self.n, self.dim)
        return self._tensor(od, od, ev)

    def relabel(self, even_labels: Sequence[str], odd_labels: Sequence[str]) -> SuperAlgebra:
        return SuperAlgebra(self.n, self.m, self._table, even_labels, odd_labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (self.n, self.m, self._key) == (other.n, other.m, other._key)

    def __hash__(self) -> int:
        return hash((self.n, self.m, self._key))

    def __repr__(self) -> str:
        return f"SuperAlgebra(n={self.n}, m={self.m}, products={len(self._table)})"

    def format_table(self) -> str:
        lines = []
        for i, j, vec in self.products():
            lines.append(f"[{self.labels[i]},{self.labels[j]}] = {format_combination(vec, self.labels)}")
        return "\n".join(lines)


def format_combination(vec: Mapping[int, Fraction], labels: Sequence[str]) -> str:
    if not vec:
        return "0"
    out = []
    for k in sorted(vec):
        c = vec[k]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = labels[k] if mag == 1 else f"{mag} {labels[k]}"
        if not out:
            out.append(term if sign == "+" else f"-{term}")
        else:
            out.append(f" {sign} {term}")
    return "".join(out)


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------


def _check_vec(A: SuperAlgebra, u: GradedVector) -> None:
    if u.dims != (A.n, A.m):
        raise DimensionMismatch(f"vector of dims {u.dims} used in algebra of dims {(A.n, A.m)}")


def sparse_bracket(A: SuperAlgebra, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> SparseVec:
    out: SparseVec = {}
    table = A._table
    for i, a in u.items():
        for j, b in v.items():
            p = table.get((i, j))
            if p:
                _axpy(out, a * b, p)
    return out


def bracket(A: SuperAlgebra, u: GradedVector, v: GradedVector) -> GradedVector:
    """Bilinear extension of the structure constants."""
    _check_vec(A, u)
    _check_vec(A, v)
    return GradedVector.from_sparse(A.n, A.m, sparse_bracket(A, u.sparse(), v.sparse()))


def leibniz_defects(A: SuperAlgebra) -> list[tuple[tuple[int, int, int], GradedVector]]:
    """Basis triples (x, y, z) where the graded Leibniz identity fails.

    The defect is ``[x,[y,z]] - [[x,y],z] + (-1)^{|y||z|} [[x,z],y]``.
    """
    N = A.dim
    table = A._table
    defects = []
    for x in range(N):
        for y in range(N):
            xy = table.get((x, y), {})
            for z in range(N):
                acc: SparseVec = {}
                yz = table.get((y, z))
                if yz:
                    _axpy(acc, Fraction(1), sparse_bracket(A, {x: Fraction(1)}, yz))
                if xy:
                    _axpy(acc, Fraction(-1), sparse_bracket(A, xy, {z: Fraction(1)}))
                xz = table.get((x, z))
                if xz:
                    sign = -1 if A.parity(y) and A.parity(z) else 1
                    _axpy(acc, Fraction(sign), sparse_bracket(A, xz, {y: Fraction(1)}))
                if acc:
                    defects.append(((x, y, z), GradedVector.from_sparse(A.n, A.m, acc)))
    return defects


def is_leibniz(A: SuperAlgebra) -> bool:
    return not leibniz_defects(A)


def is_lie(A: SuperAlgebra) -> bool:
    """Graded antisymmetry [x,y] = -(-1)^{|x||y|}[y,x] on all basis pairs."""
    N = A.dim
    for i in range(N):
        for j in range(i, N):
            sign = 1 if A.parity(i) and A.parity(j) else -1
            a = A._table.get((i, j), {})
            b = A._table.get((j, i), {})
            keys = set(a) | set(b)
            if any(a.get(k, 0) != sign * b.get(k, 0) for k in keys):
                return False
    return True


def right_mul_matrix(A: SuperAlgebra, x: GradedVector) -> list[list[Fraction]]:
    """Matrix of R_x : v -> [v, x]; column j is the image of the j-th basis vector."""
    _check_vec(A, x)
    if not x.is_homogeneous():
        raise NotHomogeneous("right multiplication is only defined here for homogeneous x")
    N = A.dim
    xs = x.sparse()
    mat = [[Fraction(0)] * N for _ in range(N)]
    for j in range(N):
        for k, c in sparse_bracket(A, {j: Fraction(1)}, xs).items():
            mat[k][j] = c
    return mat


def _right_op(A: SuperAlgebra, x: Mapping[int, Fraction]) -> dict[int, SparseVec]:
    """Sparse R_x: basis index -> image."""
    out = {}
    for j in range(A.dim):
        img = sparse_bracket(A, {j: Fraction(1)}, x)
        if img:
            out[j] = img
    return out


def _apply_op(op: Mapping[int, SparseVec], v: Mapping[int, Fraction]) -> SparseVec:
    out: SparseVec = {}
    for j, c in v.items():
        img = op.get(j)
        if img:
            _axpy(out, c, img)
    return out


def operator_identity_defects(A: SuperAlgebra) -> list[tuple[tuple[int, int], list[list[Fraction]]]]:
    """Basis pairs (x, y) where R_[x,y] differs from R_y R_x - (-1)^{|x||y|} R_x R_y.

    Each violation carries the difference matrix (columns indexed by the input
    basis vector).
    """
    N = A.dim
    ops = [_right_op(A, {i: Fraction(1)}) for i in range(N)]
    out = []
    for x in range(N):
        for y in range(N):
            sign = -1 if A.parity(x) and A.parity(y) else 1
            lhs = _right_op(A, A._table.get((x, y), {}))
            diff = [[Fraction(0)] * N for _ in range(N)]
            bad = False
            for j in range(N):
                acc: SparseVec = dict(lhs.get(j, {}))
                _axpy(acc, Fraction(-1), _apply_op(ops[y], ops[x].get(j, {})))
                _axpy(acc, Fraction(sign), _apply_op(ops[x], ops[y].get(j, {})))
                for k, c in acc.items():
                    diff[k][j] = c
                    bad = True
            if bad:
                out.append(((x, y), diff))
    return out


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedSubspace:
    """A graded subspace, stored as canonical RREF bases of its two parts."""

    n: int
    m: int
    even_basis: tuple[tuple[Fraction, ...], ...] = ()
    odd_basis: tuple[tuple[Fraction, ...], ...] = ()

    @classmethod
    def _canon(cls, rows: Iterable[Sequence[Fraction]], width: int) -> tuple[tuple[Fraction, ...], ...]:
        rows = [list(r) for r in rows if any(c != 0 for c in r)]
        if not rows:
            return ()
        red, _ = linalg.rref(rows, width)
        return tuple(tuple(r) for r in red)

    @classmethod
    def from_parts(cls, n: int, m: int, even_rows: Iterable[Sequence], odd_rows: Iterable[Sequence]) -> GradedSubspace:
        ev = [[_frac(c) for c in r] for r in even_rows]
        od = [[_frac(c) for c in r] for r in odd_rows]
        return cls(n, m, cls._canon(ev, n), cls._canon(od, m))

    @classmethod
    def span(cls, n: int, m: int, vectors: Iterable[GradedVector | Sequence[Scalar]]) -> GradedSubspace:
        """Smallest graded subspace containing the given vectors."""
        ev, od = [], []
        for v in vectors:
            if not isinstance(v, GradedVector):
                v = GradedVector.from_flat(n, list(v))
            if v.dims != (n, m):
                raise DimensionMismatch("vector does not fit the ambient dimensions")
            ev.append(v.even)
            od.append(v.odd)
        return cls(n, m, cls._canon(ev, n), cls._canon(od, m))

    @classmethod
    def zero(cls, n: int, m: int) -> GradedSubspace:
        return cls(n, m)

    @classmethod
    def whole(cls, n: int, m: int) -> GradedSubspace:
        return cls(n, m, tuple(tuple(r) for r in linalg.identity(n)), tuple(tuple(r) for r in linalg.identity(m)))

    @classmethod
    def even_part(cls, n: int, m: int) -> GradedSubspace:
        return cls(n, m, tuple(tuple(r) for r in linalg.identity(n)), ())

    @classmethod
    def odd_part(cls, n: int, m: int) -> GradedSubspace:
        return cls(n, m, (), tuple(tuple(r) for r in linalg.identity(m)))

    @property
    def dim(self) -> int:
        return len(self.even_basis) + len(self.odd_basis)

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.even_basis), len(self.odd_basis)

    def is_zero(self) -> bool:
        return self.dim == 0

    def basis(self) -> list[GradedVector]:
        zo = (Fraction(0),) * self.m
        ze = (Fraction(0),) * self.n
        return [GradedVector(r, zo) for r in self.even_basis] + [GradedVector(ze, r) for r in self.odd_basis]

    def contains(self, other: GradedSubspace) -> bool:
        return all(member(self, v) for v in other.basis())

    def __add__(self, other: GradedSubspace) -> GradedSubspace:
        return GradedSubspace.from_parts(
            self.n, self.m, self.even_basis + other.even_basis, self.odd_basis + other.odd_basis
        )

    def intersection(self, other: GradedSubspace) -> GradedSubspace:
        return GradedSubspace.from_parts(
            self.n,
            self.m,
            _intersect(self.even_basis, other.even_basis, self.n),
            _intersect(self.odd_basis, other.odd_basis, self.m),
        )

    def annihilator_rows(self) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
        """Linear functionals (per part) whose common kernel is this subspace."""
        return (
            linalg.nullspace(self.even_basis, self.n) if self.even_basis else linalg.identity(self.n),
            linalg.nullspace(self.odd_basis, self.m) if self.odd_basis else linalg.identity(self.m),
        )


def _intersect(a, b, width):
    if not a or not b:
        return []
    # x = sum s_i a_i = sum t_j b_j
    cols = [list(r) for r in a] + [[-c for c in r] for r in b]
    system = linalg.transpose(cols)
    sols = linalg.nullspace(system, len(cols))
    out = []
    for s in sols:
        v = [Fraction(0)] * width
        for coef, row in zip(s[: len(a)], a):
            for t in range(width):
                v[t] += coef * row[t]
        out.append(v)
    return out


def _in_span(rows: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    if all(c == 0 for c in v):
        return True
    if not rows:
        return False
    return linalg.rank(list(rows) + [list(v)]) == len(rows)


def member(S: GradedSubspace, v: GradedVector) -> bool:
    """True iff v lies in S (exact rank test on each graded part)."""
    if v.dims != (S.n, S.m):
        raise DimensionMismatch(f"vector dims {v.dims} vs subspace ambient {(S.n, S.m)}")
    return _in_span(S.even_basis, v.even) and _in_span(S.odd_basis, v.odd)


def product_subspace(A: SuperAlgebra, U: GradedSubspace, W: GradedSubspace) -> GradedSubspace:
    """span{[u, w] : u in U, w in W}."""
    for S in (U, W):
        if (S.n, S.m) != (A.n, A.m):
            raise DimensionMismatch("subspace is not sized for this algebra")
    ws = [w.sparse() for w in W.basis()]
    prods = []
    for u in U.basis():
        us = u.sparse()
        for w in ws:
            p = sparse_bracket(A, us, w)
            if p:
                prods.append(GradedVector.from_sparse(A.n, A.m, p))
    return GradedSubspace.span(A.n, A.m, prods)


# ---------------------------------------------------------------------------
# basis changes, sums, degenerations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedMap:
    """Degree-0 linear map ``f = f_0 + f_1``.

    Column j of ``even_block`` holds the coordinates of ``f(X_j)`` (likewise
    for the odd block), so the columns are the new basis in old coordinates.
    """

    even_block: tuple[tuple[Fraction, ...], ...]
    odd_block: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        ev = tuple(tuple(_frac(c) for c in r) for r in self.even_block)
        od = tuple(tuple(_frac(c) for c in r) for r in self.odd_block)
        for blk in (ev, od):
            if any(len(r) != len(blk) for r in blk):
                raise DimensionMismatch("graded map blocks must be square")
            if linalg.determinant(blk) == 0:
                raise SingularMapError("graded map block is singular")
        object.__setattr__(self, "even_block", ev)
        object.__setattr__(self, "odd_block", od)

    @classmethod
    def identity(cls, n: int, m: int) -> GradedMap:
        return cls(linalg.identity(n), linalg.identity(m))

    @classmethod
    def from_images(cls, A: SuperAlgebra, even: Sequence[GradedVector], odd: Sequence[GradedVector]) -> GradedMap:
        """Map sending the i-th basis vector of each part to the given vector."""
        for v in even:
            if any(c != 0 for c in v.odd):
                raise NotHomogeneous("even basis image has an odd component")
        for v in odd:
            if any(c != 0 for c in v.even):
                raise NotHomogeneous("odd basis image has an even component")
        return cls(linalg.transpose([v.even for v in even]) if even else (),
                   linalg.transpose([v.odd for v in odd]) if odd else ())

    @classmethod
    def diagonal(cls, even: Sequence[Scalar], odd: Sequence[Scalar]) -> GradedMap:
        def diag(d):
            return [[_frac(d[i]) if i == j else Fraction(0) for j in range(len(d))] for i in range(len(d))]
        return cls(diag(even), diag(odd))

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.even_block), len(self.odd_block)

    def full_matrix(self) -> list[list[Fraction]]:
        n, m = self.dims
        mat = [[Fraction(0)] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                mat[i][j] = self.even_block[i][j]
        for i in range(m):
            for j in range(m):
                mat[n + i][n + j] = self.odd_block[i][j]
        return mat

    def compose(self, other: GradedMap) -> GradedMap:
        """self after other."""
        return GradedMap(linalg.matmul(self.even_block, other.even_block), linalg.matmul(self.odd_block, other.odd_block))

    def inverse(self) -> GradedMap:
        return GradedMap(linalg.inverse(self.even_block) if self.even_block else (),
                         linalg.inverse(self.odd_block) if self.odd_block else ())


def apply_basis_change(A: SuperAlgebra, g: GradedMap) -> SuperAlgebra:
    """The law ``(x, y) -> g^{-1}[g x, g y]``, i.e. A written in the basis g(e_i)."""
    if g.dims != (A.n, A.m):
        raise DimensionMismatch(f"map dims {g.dims} vs algebra dims {(A.n, A.m)}")
    N = A.dim
    full = g.full_matrix()
    inv = linalg.inverse(full) if N else []
    cols = [{i: full[i][j] for i in range(N) if full[i][j] != 0} for j in range(N)]
    inv_cols = [{i: inv[i][j] for i in range(N) if inv[i][j] != 0} for j in range(N)]
    table = {}
    for a in range(N):
        for b in range(N):
            w = sparse_bracket(A, cols[a], cols[b])
            if w:
                new: SparseVec = {}
                for k, c in w.items():
                    _axpy(new, c, inv_cols[k])
                if new:
                    table[(a, b)] = new
    return SuperAlgebra(A.n, A.m, table, A.even_labels, A.odd_labels)


def direct_sum(A: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    """Block sum; even basis is A's evens then B's evens, likewise for odds."""
    n, m = A.n + B.n, A.m + B.m

    def ia(i):
        return i if i < A.n else n + (i - A.n)

    def ib(i):
        return A.n + i if i < B.n else n + A.m + (i - B.n)

    table = {}
    for src, f in ((A, ia), (B, ib)):
        for i, j, vec in src.products():
            table[(f(i), f(j))] = {f(k): c for k, c in vec.items()}
    ev = A.even_labels + B.even_labels
    od = A.odd_labels + B.odd_labels
    if len(set(ev + od)) != len(ev + od):
        ev, od = None, None
    return SuperAlgebra(n, m, table, ev, od)


def even_line() -> SuperAlgebra:
    return SuperAlgebra(1, 0, {}, ["Z0"], [])


def odd_line() -> SuperAlgebra:
    return SuperAlgebra(0, 1, {}, [], ["W1"])


@dataclass(frozen=True)
class ScalingFamily:
    """Diagonal basis change X_i -> t^{a_i} X_i, Y_j -> t^{b_j} Y_j."""

    even_exponents: tuple[Fraction, ...]
    odd_exponents: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "even_exponents", tuple(_frac(e) for e in self.even_exponents))
        object.__setattr__(self, "odd_exponents", tuple(_frac(e) for e in self.odd_exponents))

    @property
    def exponents(self) -> tuple[Fraction, ...]:
        return self.even_exponents + self.odd_exponents


@dataclass(frozen=True)
class Diverges:
    """A nonzero structure constant whose scaled coefficient blows up as t -> 0."""

    product: tuple[str, str, str]
    exponent: Fraction


def degeneration_limit(A: SuperAlgebra, s: ScalingFamily) -> SuperAlgebra | Diverges:
    """Limit as t -> 0 of A under the scaling family s.

    The constant of [e_i, e_j] on e_k picks up t^(e_i + e_j - e_k).
    """
    if (len(s.even_exponents), len(s.odd_exponents)) != (A.n, A.m):
        raise DimensionMismatch("exponent vector does not match algebra dimensions")
    e = s.exponents
    table = {}
    for i, j, vec in A.products():
        kept = {}
        for k, c in vec.items():
            ex = e[i] + e[j] - e[k]
            if ex < 0:
                lab = A.labels
                return Diverges((lab[i], lab[j], lab[k]), ex)
            if ex == 0:
                kept[k] = c
        if kept:
            table[(i, j)] = kept
    return SuperAlgebra(A.n, A.m, table, A.even_labels, A.odd_labels)

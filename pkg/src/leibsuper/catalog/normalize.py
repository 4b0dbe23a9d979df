"""Explicit basis changes that carry catalog entries onto fixed representatives."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from ..algebra import GradedMap, SuperAlgebra, apply_basis_change
from ..linalg import rational_sqrt
from .families import CatalogError
from .registry import build


def r32_scale_map(lam: Fraction, beta: Fraction) -> GradedMap:
    """Change of scale taking the (lambda, beta) family to R32.

    Needs lambda * beta to be the square of a rational; otherwise the scale
    is irrational and a CatalogError is raised.
    """
    lam, beta = Fraction(lam), Fraction(beta)
    if lam == 0 or beta == 0:
        raise CatalogError("the scale map needs lambda * beta != 0")
    r = rational_sqrt(lam * beta)
    if r is None:
        raise CatalogError(f"sqrt(lambda*beta) = sqrt({lam * beta}) is not rational")
    half = Fraction(1, 2)
    return GradedMap.diagonal([half, half, Fraction(1, 4)], [1 / (2 * r), r / (2 * beta)])


def r43_presolve_map(b: Mapping[str, Fraction]) -> GradedMap:
    b0, b1, b2, b3 = (Fraction(b[f"b{i}"]) for i in range(4))
    s = b0 + b1
    # columns are the new basis vectors in old coordinates
    X0 = [b0, b1, b2, b3]
    X1 = [0, s, b2, b3]
    X2 = [0, 0, b0 * s, b0 * b2]
    X3 = [0, 0, 0, b0 * b0 * s]
    even = [list(r) for r in zip(X0, X1, X2, X3)]
    odd = [[1, 0, 0], [0, b0, 0], [0, 0, b0 * b0]]
    return GradedMap(even, odd)


def _images(n: int, m: int, even: list[dict[int, Fraction]], odd: list[dict[int, Fraction]]) -> GradedMap:
    """Columns given sparsely: even[i] is the image of the i-th new even vector."""
    eb = [[Fraction(0)] * n for _ in range(n)]
    ob = [[Fraction(0)] * m for _ in range(m)]
    for j, col in enumerate(even):
        for i, c in col.items():
            eb[i][j] = Fraction(c)
    for j, col in enumerate(odd):
        for i, c in col.items():
            ob[i][j] = Fraction(c)
    return GradedMap(eb, ob)


def zf_2_2_mu2_to_maxnil() -> GradedMap:
    """e1 = Y1, e2 = X0, e3 = Y2/2, e4 = X1/2 (even slots e2, e4; odd slots e1, e3)."""
    h = Fraction(1, 2)
    return _images(2, 2, [{0: 1}, {1: h}], [{0: 1}, {1: h}])


def zf_2_3_mu6_to_maxnil() -> GradedMap:
    """e1 = Y1, e2 = X0, e3 = Y2/2, e4 = X1/2, e5 = Y3/4.

    e5 is forced by [e4, e1] = e5 = [X1, Y1]/2 = Y3/4.
    """
    h = Fraction(1, 2)
    return _images(2, 3, [{0: 1}, {1: h}], [{0: 1}, {1: h}, {2: Fraction(1, 4)}])


def zf_3_3_mu12_to_maxnil() -> GradedMap:
    """e1 = Y1, e2 = X0, e3 = Y2/2, e4 = X1/2, e5 = Y3/4, e6 = X2/4."""
    h, q = Fraction(1, 2), Fraction(1, 4)
    return _images(3, 3, [{0: 1}, {1: h}, {2: q}], [{0: 1}, {1: h}, {2: q}])


@dataclass(frozen=True)
class Normalization:
    label: str
    source: Callable[[Mapping[str, Fraction]], SuperAlgebra]
    target: Callable[[], SuperAlgebra]
    make_map: Callable[[Mapping[str, Fraction]], GradedMap]
    samples: tuple[Mapping[str, Fraction], ...]

    def run(self, params: Mapping[str, Fraction]) -> tuple[bool, SuperAlgebra, SuperAlgebra]:
        got = apply_basis_change(self.source(params), self.make_map(params))
        want = self.target()
        return got == want, got, want


def _q(**kw) -> dict[str, Fraction]:
    return {k: Fraction(v) for k, v in kw.items()}


NORMALIZATIONS: tuple[Normalization, ...] = (
    Normalization(
        "R32_family -> R32",
        lambda p: build("R32_family", 3, 2, p),
        lambda: build("R32", 3, 2),
        lambda p: r32_scale_map(p["lambda"], p["beta"]),
        (_q(**{"lambda": 1, "beta": 1}), _q(**{"lambda": 2, "beta": 2}), _q(**{"lambda": 2, "beta": 8}),
         _q(**{"lambda": -1, "beta": -1}), _q(**{"lambda": "1/2", "beta": 2}), _q(**{"lambda": 3, "beta": 12})),
    ),
    Normalization(
        "R43_presolve -> R43",
        lambda p: build("R43_presolve", 4, 3, p),
        lambda: build("R43", 4, 3),
        r43_presolve_map,
        (_q(b0=1, b1=0, b2=0, b3=0), _q(b0=1, b1=1, b2=1, b3=1), _q(b0=2, b1=-1, b2=3, b3="1/2"),
         _q(b0=-1, b1=2, b2=0, b3=5), _q(b0="1/2", b1="1/2", b2=-2, b3=-1), _q(b0=2, b1=2, b2=2, b3=2)),
    ),
    Normalization(
        "zf_2_2.mu2 -> maxnil(2,2)",
        lambda p: build("zf_2_2.mu2", 2, 2),
        lambda: build("maxnil", 2, 2),
        lambda p: zf_2_2_mu2_to_maxnil(),
        ({},),
    ),
    Normalization(
        "zf_2_3.mu6 -> maxnil(2,3)",
        lambda p: build("zf_2_3.mu6", 2, 3),
        lambda: build("maxnil", 2, 3),
        lambda p: zf_2_3_mu6_to_maxnil(),
        ({},),
    ),
    Normalization(
        "zf_3_3.mu12 -> maxnil(3,3)",
        lambda p: build("zf_3_3.mu12", 3, 3),
        lambda: build("maxnil", 3, 3),
        lambda p: zf_3_3_mu12_to_maxnil(),
        ({},),
    ),
)

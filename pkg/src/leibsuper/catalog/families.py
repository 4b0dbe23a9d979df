"""Structure constants of the classified families.

Builders take the actual dimensions (n = dim L_0, m = dim L_1).  Tables that
are written for an even part X_0..X_N use ``top = n - 1`` for X_N.
Unlisted products vanish.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..algebra import SuperAlgebra

HALF = Fraction(1, 2)


class CatalogError(ValueError):
    pass


class _Law:
    def __init__(self, n: int, m: int, even_labels=None, odd_labels=None):
        self.n, self.m = n, m
        self.even_labels = even_labels
        self.odd_labels = odd_labels
        self.products: dict[tuple[str, str], dict[str, Fraction]] = {}

    def set(self, a: str, b: str, **terms) -> _Law:
        tgt = self.products.setdefault((a, b), {})
        for lab, c in terms.items():
            tgt[lab] = tgt.get(lab, 0) + Fraction(c)
        return self

    def even_chain(self, start: int = 0) -> _Law:
        """[X_i, X_0] = X_{i+1} for start <= i <= n-2."""
        for i in range(start, self.n - 1):
            self.set(f"X{i}", "X0", **{f"X{i + 1}": 1})
        return self

    def odd_chain(self) -> _Law:
        """[Y_j, X_0] = Y_{j+1} for 1 <= j <= m-1."""
        for j in range(1, self.m):
            self.set(f"Y{j}", "X0", **{f"Y{j + 1}": 1})
        return self

    def build(self) -> SuperAlgebra:
        return SuperAlgebra.from_labels(self.n, self.m, self.products, self.even_labels, self.odd_labels)


def _zf(n: int, m: int) -> _Law:
    return _Law(n, m).even_chain().odd_chain()


# -- maximal nilindex ---------------------------------------------------------


def maxnil(n: int, m: int) -> SuperAlgebra:
    """[e_i,e_1] = e_{i+1}, [e_i,e_2] = 2 e_{i+2}, e_i even iff i is even."""
    d = n + m
    if m not in (n, n + 1) or d < 2:
        raise CatalogError("maxnil needs m = n or m = n + 1 and n + m >= 2")
    even = [f"e{i}" for i in range(2, d + 1, 2)]
    odd = [f"e{i}" for i in range(1, d + 1, 2)]
    law = _Law(n, m, even, odd)
    for i in range(1, d):
        law.set(f"e{i}", "e1", **{f"e{i + 1}": 1})
    for i in range(1, d - 1):
        law.set(f"e{i}", "e2", **{f"e{i + 2}": 2})
    return law.build()


def maxnil_split(n: int, m: int) -> SuperAlgebra:
    """[e_i,e_1] = e_{i+1} with every e_i even."""
    if m != 0 or n < 1:
        raise CatalogError("maxnil_split is purely even: m = 0, n >= 1")
    law = _Law(n, 0, [f"e{i}" for i in range(1, n + 1)], [])
    for i in range(1, n):
        law.set(f"e{i}", "e1", **{f"e{i + 1}": 1})
    return law.build()


def zf_model(n: int, m: int) -> SuperAlgebra:
    if n < 1:
        raise CatalogError("zf_model needs n >= 1")
    return _zf(n, m).build()


# -- filiform adapted families ------------------------------------------------


def filiform_I(n: int, m: int, p: Mapping[str, Fraction]) -> SuperAlgebra:
    law = _Law(n, m).even_chain(start=1).odd_chain()
    law.set("X0", "X0", X2=1)
    alpha = {k: p[f"alpha{k}"] for k in range(3, n)}
    x0x1 = {f"X{k}": alpha[k] for k in range(3, n - 1)}
    x0x1[f"X{n - 1}"] = x0x1.get(f"X{n - 1}", 0) + p["theta"]
    law.set("X0", "X1", **x0x1)
    for i in range(1, n - 2):
        law.set(f"X{i}", "X1", **{f"X{i + k - 1}": alpha[k] for k in range(3, n - i + 1)})
    return law.build()


def filiform_II(n: int, m: int, p: Mapping[str, Fraction]) -> SuperAlgebra:
    law = _Law(n, m).even_chain(start=2).odd_chain()
    law.set("X0", "X0", X2=1)
    beta = {k: p[f"beta{k}"] for k in range(3, n)}
    law.set("X0", "X1", **{f"X{k}": beta[k] for k in range(3, n)})
    law.set("X1", "X1", **{f"X{n - 1}": p["gamma"]})
    for i in range(2, n - 2):
        law.set(f"X{i}", "X1", **{f"X{i + k - 1}": beta[k] for k in range(3, n - i + 1)})
    return law.build()


def filiform_III_params(n: int) -> list[str]:
    """Free coefficients c{i}_{j}_{k} of X_k in [X_i, X_j], 1 <= i < j, k >= i+j+1."""
    names = []
    for i in range(1, n):
        for j in range(i + 1, n):
            for k in range(i + j + 1, n):
                names.append(f"c{i}_{j}_{k}")
    return names


def filiform_III(n: int, m: int, p: Mapping[str, Fraction]) -> SuperAlgebra:
    law = _Law(n, m).even_chain(start=1).odd_chain()
    for i in range(1, n - 1):
        law.set("X0", f"X{i}", **{f"X{i + 1}": -1})
    for name in filiform_III_params(n):
        i, j, k = map(int, name[1:].split("_"))
        c = p[name]
        law.set(f"X{i}", f"X{j}", **{f"X{k}": c})
        law.set(f"X{j}", f"X{i}", **{f"X{k}": -c})
    return law.build()


# -- odd part of dimension two --------------------------------------------------


def zf_2_2(which: str, p: Mapping[str, Fraction]) -> SuperAlgebra:
    law = _Law(2, 2).set("X0", "X0", X1=1).set("Y1", "X0", Y2=1)
    if which == "mu1":
        law.set("X0", "Y1", Y2=p["alpha"]).set("Y1", "Y1", X1=1)
    elif which == "mu2":
        law.set("X0", "Y1", Y2=HALF).set("Y1", "Y1", X0=1).set("Y2", "Y1", X1=1)
    return law.build()


def zf_n1_2(which: str, n: int, p: Mapping[str, Fraction]) -> SuperAlgebra:
    top = n - 1
    law = _zf(n, 2)
    if which == "mu1":
        law.set("X0", "Y1", Y2=p["alpha"]).set("Y1", "Y1", **{f"X{top}": 1})
    elif which == "mu2":
        law.set("Y1", "Y1", **{f"X{top - 1}": 1}).set("Y2", "Y1", **{f"X{top}": 1})
    elif which == "mu3":
        law.set("X0", "Y1", Y2=-1).set("Y1", "Y1", **{f"X{top - 1}": 1}).set("Y1", "Y2", **{f"X{top}": 1})
    return law.build()


def r32() -> SuperAlgebra:
    return (
        _Law(3, 2)
        .set("X1", "X0", X2=1)
        .set("X0", "X0", X2=1)
        .set("X0", "Y1", Y2=HALF)
        .set("X1", "Y1", Y2=HALF)
        .set("Y1", "X0", Y2=1)
        .set("Y1", "Y1", X0=1)
        .set("Y2", "Y1", X2=1)
        .build()
    )


def r32_family(p: Mapping[str, Fraction]) -> SuperAlgebra:
    lam, beta = p["lambda"], p["beta"]
    return (
        _Law(3, 2)
        .set("X1", "X0", X2=1)
        .set("X0", "X0", X2=1)
        .set("X0", "Y1", Y2=lam)
        .set("X1", "Y1", Y2=lam)
        .set("Y1", "X0", Y2=2 * lam)
        .set("Y1", "Y1", X0=2 * lam * beta)
        .set("Y2", "Y1", X2=beta)
        .build()
    )


# -- odd part of dimension three ----------------------------------------------------


def zf_2_3(which: str) -> SuperAlgebra:
    law = _Law(2, 3).set("X0", "X0", X1=1).odd_chain()
    if which == "mu1":
        law.set("Y1", "Y1", X1=1)
    elif which == "mu2":
        law.set("X0", "Y1", Y3=1).set("Y1", "Y1", X1=1)
    elif which == "mu3":
        law.set("X0", "Y1", Y2=-1).set("X0", "Y2", Y3=-1).set("Y1", "Y1", X1=1)
    elif which == "mu4":
        law.set("X0", "Y1", Y2=-1, Y3=1).set("X0", "Y2", Y3=-1).set("Y1", "Y1", X1=1)
    elif which == "mu5":
        law.set("X0", "Y1", Y2=-1).set("X0", "Y2", Y3=-1)
        law.set("Y1", "Y3", X1=-1).set("Y2", "Y2", X1=1).set("Y3", "Y1", X1=-1)
    elif which == "mu6":
        law.set("X0", "Y1", Y2=HALF).set("X1", "Y1", Y3=HALF)
        law.set("Y1", "Y1", X0=1).set("Y2", "Y1", X1=1)
    return law.build()


def zf_3_3(which: str, p: Mapping[str, Fraction]) -> SuperAlgebra:
    law = _zf(3, 3)
    a = p.get("alpha")
    if which == "mu1":
        law.set("Y1", "Y2", X2=1).set("Y2", "Y1", X2=-1)
    elif which == "mu2":
        law.set("Y1", "Y1", X2=1).set("Y1", "Y2", X2=1).set("Y2", "Y1", X2=-1)
    elif which == "mu3":
        law.set("Y1", "Y1", X1=1).set("Y1", "Y2", X2=a).set("Y2", "Y1", X2=1 - a)
    elif which == "mu4":
        law.set("X0", "Y1", Y3=1).set("Y1", "Y1", X2=1)
    elif which == "mu5":
        law.set("X0", "Y1", Y3=1).set("Y1", "Y1", X2=a).set("Y1", "Y2", X2=1).set("Y2", "Y1", X2=-1)
    elif which == "mu6":
        law.set("X0", "Y1", Y3=1).set("Y1", "Y1", X1=1).set("Y1", "Y2", X2=a).set("Y2", "Y1", X2=1 - a)
    elif which == "mu7":
        law.set("X0", "Y1", Y2=a).set("X1", "Y1", Y3=a).set("Y1", "Y1", X2=1)
    elif which == "mu8":
        law.set("X0", "Y2", Y3=-1).set("Y1", "Y1", X1=1).set("Y1", "Y2", X2=1)
    elif which == "mu9":
        law.set("X0", "Y1", Y2=-1, Y3=1).set("X0", "Y2", Y3=-1).set("Y1", "Y1", X1=1).set("Y1", "Y2", X2=1)
    elif which == "mu10":
        law.set("X0", "Y1", Y2=-1).set("X0", "Y2", Y3=-1)
        law.set("Y1", "Y3", X2=-1).set("Y2", "Y2", X2=1).set("Y3", "Y1", X2=-1)
    elif which == "mu11":
        law.set("X0", "Y1", Y2=-1).set("X0", "Y2", Y3=-1)
        law.set("Y1", "Y1", X1=1).set("Y1", "Y2", X2=1)
        law.set("Y1", "Y3", X2=-1).set("Y2", "Y2", X2=1).set("Y3", "Y1", X2=-1)
    elif which == "mu12":
        law.set("X0", "Y1", Y2=HALF).set("X1", "Y1", Y3=HALF)
        law.set("Y1", "Y1", X0=1).set("Y2", "Y1", X1=1).set("Y3", "Y1", X2=1)
    return law.build()


def zf_n1_3(which: str, n: int, p: Mapping[str, Fraction]) -> SuperAlgebra:
    """Shared by the (4,3) table (mu1..mu13) and the general (n,3) table (mu1..mu15)."""
    t = n - 1
    X = lambda i: f"X{i}"  # noqa: E731
    law = _zf(n, 3)
    a = p.get("alpha")
    if which == "mu1":
        law.set("X0", "Y1", Y2=-1, Y3=1).set("X0", "Y2", Y3=-1).set("Y1", "Y1", **{X(t): 1})
    elif which in ("mu2", "mu3", "mu4"):
        if which == "mu4":
            law.set("X0", "Y1", Y2=-1, Y3=1)
        else:
            law.set("X0", "Y1", Y2=-1)
        law.set("X0", "Y2", Y3=-1 - a).set("X1", "Y1", Y3=a)
        if which == "mu2":
            law.set("Y1", "Y1", **{X(t): 1})
        else:
            law.set("Y1", "Y1", **{X(t - 1): 1}).set("Y1", "Y2", **{X(t): 1})
    elif which == "mu5":
        law.set("X0", "Y1", Y3=1).set("Y1", "Y1", **{X(t): 1})
    elif which == "mu6":
        law.set("Y1", "Y1", **{X(t - 1): 1}).set("Y2", "Y1", **{X(t): 1})
    elif which == "mu7":
        law.set("X0", "Y1", Y3=1).set("Y1", "Y1", **{X(t - 1): 1}).set("Y2", "Y1", **{X(t): 1})
    elif which == "mu8":
        law.set("X0", "Y1", Y2=a).set("X1", "Y1", Y3=a).set("Y1", "Y1", **{X(t): 1})
    elif which in ("mu9", "mu10"):
        law.set("X0", "Y1", Y2=-1).set("X0", "Y2", Y3=-1)
        if which == "mu10":
            law.set("Y1", "Y1", **{X(t - 1): 1}).set("Y1", "Y2", **{X(t): 1})
        law.set("Y1", "Y3", **{X(t): 1}).set("Y2", "Y2", **{X(t): -1}).set("Y3", "Y1", **{X(t): 1})
    elif which == "mu11":
        law.set("X0", "Y1", Y2=-1, Y3=1).set("X0", "Y2", Y3=-1)
        law.set("Y1", "Y1", **{X(t - 1): a}).set("Y1", "Y2", **{X(t): a})
        law.set("Y1", "Y3", **{X(t): 1}).set("Y2", "Y2", **{X(t): -1}).set("Y3", "Y1", **{X(t): 1})
    elif which in ("mu12", "mu13"):
        if which == "mu13":
            law.set("X0", "Y1", Y3=1)
        law.set("Y1", "Y1", **{X(t - 2): 1}).set("Y2", "Y1", **{X(t - 1): 1}).set("Y3", "Y1", **{X(t): 1})
    elif which == "mu14":
        law.set("X0", "Y1", Y2=-1, Y3=a).set("X0", "Y2", Y3=-1)
        law.set("Y1", "Y1", **{X(t - 2): 1}).set("Y1", "Y2", **{X(t - 1): 1, X(t): a})
        law.set("Y2", "Y1", **{X(t): a}).set("Y2", "Y2", **{X(t): 1}).set("Y3", "Y1", **{X(t): -1})
    elif which == "mu15":
        law.set("X0", "Y1", Y2=-1).set("X0", "Y2", Y3=-1)
        law.set("Y1", "Y1", **{X(t - 2): 1}).set("Y1", "Y2", **{X(t - 1): 1})
        law.set("Y1", "Y3", **{X(t): a}).set("Y2", "Y2", **{X(t): 1 - a}).set("Y3", "Y1", **{X(t): a - 1})
    return law.build()


def r43() -> SuperAlgebra:
    return (
        _Law(4, 3)
        .set("X1", "X0", X2=1)
        .set("X2", "X0", X3=1)
        .set("X0", "X0", X2=1)
        .set("X0", "Y1", Y2=HALF)
        .set("X1", "Y1", Y2=HALF)
        .set("X2", "Y1", Y3=HALF)
        .set("Y1", "X0", Y2=1)
        .set("Y2", "X0", Y3=1)
        .set("Y1", "Y1", X0=1)
        .set("Y2", "Y1", X2=1)
        .set("Y3", "Y1", X3=1)
        .build()
    )


def r43_presolve(p: Mapping[str, Fraction]) -> SuperAlgebra:
    b0, b1, b2, b3 = (p[f"b{i}"] for i in range(4))
    s = b0 + b1
    lead = b0 / (2 * s)
    tail = -b2 * b0 / (2 * s * s)
    return (
        _Law(4, 3)
        .set("X1", "X0", X2=1)
        .set("X2", "X0", X3=1)
        .set("X0", "X0", X2=1)
        .set("X0", "Y1", Y2=lead, Y3=tail)
        .set("X1", "Y1", Y2=lead, Y3=tail)
        .set("X2", "Y1", Y3=lead)
        .set("Y1", "X0", Y2=1)
        .set("Y2", "X0", Y3=1)
        .set("Y1", "Y1", X0=b0, X1=b1, X2=b2, X3=b3)
        .set("Y2", "Y1", X2=s, X3=b2)
        .set("Y3", "Y1", X3=s)
        .build()
    )


# -- even part of dimension two ---------------------------------------------------


def _zf_2_m_base(m: int) -> _Law:
    return _Law(2, m).set("X0", "X0", X1=1).odd_chain()


def _pairs(law: _Law, m: int, total: int) -> None:
    """[Y_i, Y_j] = (-1)^{i+1} X_1 whenever i + j = total (indices outside 1..m are skipped)."""
    for i in range(1, m + 1):
        j = total - i
        if 1 <= j <= m:
            law.set(f"Y{i}", f"Y{j}", X1=1 if i % 2 else -1)


def zf_2_m(which: str, m: int, k: int | None = None) -> SuperAlgebra:
    law = _zf_2_m_base(m)
    if which == "muK":
        for j in range(1, m):
            law.set("X0", f"Y{j}", **{f"Y{j + 1}": -1})
        _pairs(law, m, 2 * k + 2)
    elif which == "muK2":
        law.set("X0", "Y1", Y2=-1, **{f"Y{m}": 1})
        for j in range(2, m):
            law.set("X0", f"Y{j}", **{f"Y{j + 1}": -1})
        _pairs(law, m, 2 * k + 2 - 2 * ((m - 1) // 2))
    elif which == "mu_m1":
        law.set("Y1", "Y1", X1=1)
    elif which == "mu_m":
        law.set("X0", "Y1", **{f"Y{m}": 1}).set("Y1", "Y1", X1=1)
    elif which == "mu_mp1":
        for j in range(2, m):
            law.set("X0", f"Y{j}", **{f"Y{j + 1}": -1})
        law.set("Y1", "Y1", X1=1)
    elif which == "mu_mp2":
        law.set("X0", "Y1", Y2=-1, **{f"Y{m}": 1})
        for j in range(2, m):
            law.set("X0", f"Y{j}", **{f"Y{j + 1}": -1})
        law.set("Y1", "Y1", X1=1)
    return law.build()


def r_conj(n: int) -> SuperAlgebra:
    """Filiform law on dims (n+1, n) with nilindex 2n."""
    law = _Law(n + 1, n)
    for i in range(1, n):
        law.set(f"X{i}", "X0", **{f"X{i + 1}": 1})
    law.set("X0", "X0", X2=1)
    law.set("X0", "Y1", Y2=HALF)
    for i in range(1, n):
        law.set(f"X{i}", "Y1", **{f"Y{i + 1}": HALF})
    for j in range(1, n):
        law.set(f"Y{j}", "X0", **{f"Y{j + 1}": 1})
    law.set("Y1", "Y1", X0=1)
    for i in range(2, n + 1):
        law.set(f"Y{i}", "Y1", **{f"X{i}": 1})
    return law.build()

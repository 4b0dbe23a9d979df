"""Named catalog entries: builders plus the invariant values claimed for them.

Every entry is addressed by a stable name such as ``zf_3_3.mu12``.  Builders
take the actual dimensions ``(n, m)`` of ``L_0`` and ``L_1`` together with a
mapping of parameter values.
"""
from __future__ import annotations

import operator
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator, Mapping, Sequence

from ..algebra import SuperAlgebra, direct_sum, even_line, odd_line
from ..invariants import CharSequence, InvariantProfile, Shape
from . import families as fam
from .families import CatalogError

DEFAULT_PARAM_SAMPLES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2))

ZF, FIL = Shape.ZERO_FILIFORM, Shape.FILIFORM


# ---------------------------------------------------------------------------
# parameters and claims
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Param:
    name: str
    domain: str = "Q"  # "Q", "Q-{0}" or "Z[lo,hi]"
    lo: int | None = None
    hi: int | None = None

    def admits(self, v: Fraction) -> bool:
        if self.domain == "Q-{0}":
            return v != 0
        if self.domain.startswith("Z"):
            return v.denominator == 1 and self.lo <= v <= self.hi
        return True

    def describe(self) -> str:
        if self.domain.startswith("Z"):
            return f"{self.name} in Z, {self.lo} <= {self.name} <= {self.hi}"
        return f"{self.name} in {self.domain}"

    def samples(self, default: Sequence[Fraction]) -> list[Fraction]:
        if self.domain.startswith("Z"):
            return [Fraction(k) for k in range(self.lo, self.hi + 1)]
        return [v for v in default if self.admits(v)]


_OPS = {"==": operator.eq, "<": operator.lt, ">=": operator.ge, "<=": operator.le, ">": operator.gt, "!=": operator.ne}


@dataclass(frozen=True)
class Claim:
    """One stated value: ``key op value``.

    ``key`` is a profile field name or ``series_dim[s]`` for dim C^s(L).
    """

    key: str
    value: Any
    op: str = "=="

    def observed(self, p: InvariantProfile) -> Any:
        if self.key.startswith("series_dim["):
            return p.series_dim(int(self.key[len("series_dim["):-1]))
        return getattr(p, self.key)

    def holds(self, p: InvariantProfile) -> bool:
        return _OPS[self.op](self.observed(p), self.value)

    def __str__(self) -> str:
        return f"{self.key} {self.op} {show_value(self.value)}"


def show_value(v: Any) -> Any:
    if isinstance(v, Shape):
        return v.value
    if isinstance(v, CharSequence):
        return str(v)
    return v


def _claims(**kw) -> list[Claim]:
    out = []
    for k, v in kw.items():
        if isinstance(v, tuple) and len(v) == 2 and v[0] in _OPS:
            out.append(Claim(k, v[1], v[0]))
        else:
            out.append(Claim(k, v))
    return out


def C(s: int, v: int) -> Claim:
    return Claim(f"series_dim[{s}]", v)


# ---------------------------------------------------------------------------
# entries
# ---------------------------------------------------------------------------

Builder = Callable[[int, int, Mapping[str, Fraction]], SuperAlgebra]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    constraint: str
    dims_ok: Callable[[int, int], bool]
    builder: Builder
    params: Callable[[int, int], tuple[Param, ...]] = lambda n, m: ()
    expected: Callable[[int, int, Mapping[str, Fraction]], list[Claim]] = lambda n, m, p: []
    dim_samples: tuple[tuple[int, int], ...] = ()
    table: str | None = None
    source: str = ""
    joint: Callable[[Mapping[str, Fraction]], str | None] | None = None
    # the builder itself rejects parameter points off the admissible variety
    validates: bool = False

    def param_list(self, n: int, m: int) -> tuple[Param, ...]:
        return self.params(n, m)

    def check(self, n: int, m: int, params: Mapping[str, Any]) -> dict[str, Fraction]:
        if not self.dims_ok(n, m):
            raise CatalogError(f"{self.name}: dimensions ({n},{m}) violate {self.constraint}")
        declared = {p.name: p for p in self.params(n, m)}
        bound = {}
        for k, v in params.items():
            if k not in declared:
                raise CatalogError(f"{self.name}: unknown parameter {k!r}")
            bound[k] = Fraction(v)
        for k, p in declared.items():
            if k not in bound:
                raise CatalogError(f"{self.name}: parameter {k!r} is not bound")
            if not p.admits(bound[k]):
                raise CatalogError(f"{self.name}: {k} = {bound[k]} is outside {p.describe()}")
        if self.joint is not None:
            msg = self.joint(bound)
            if msg:
                raise CatalogError(f"{self.name}: {msg}")
        return bound

    def build(self, n: int, m: int, params: Mapping[str, Any] | None = None) -> SuperAlgebra:
        return self.builder(n, m, self.check(n, m, params or {}))

    def expected_claims(self, n: int, m: int, params: Mapping[str, Any] | None = None) -> list[Claim]:
        return self.expected(n, m, self.check(n, m, params or {}))

    def param_samples(self, n: int, m: int, default: Sequence[Fraction] = DEFAULT_PARAM_SAMPLES,
                      extra: int = 3, seed: int = 7) -> list[dict[str, Fraction]]:
        """Diagonal assignments plus a few seeded mixed ones, all in domain."""
        ps = self.params(n, m)
        if not ps:
            return [{}]
        pools = [p.samples(default) for p in ps]
        out: list[dict[str, Fraction]] = []
        if len(ps) == 1:
            out = [{ps[0].name: v} for v in pools[0]]
        else:
            for v in default:
                cand = {p.name: v for p in ps}
                if all(p.admits(v) for p in ps):
                    out.append(cand)
            rng = random.Random(seed)
            for _ in range(extra):
                out.append({p.name: rng.choice(pool) for p, pool in zip(ps, pools) if pool})
        keep = []
        for a in out:
            if self.joint is None or not self.joint(a):
                if a not in keep:
                    keep.append(a)
        return keep

    def instances(self, dims: Sequence[tuple[int, int]] | None = None,
                  default: Sequence[Fraction] = DEFAULT_PARAM_SAMPLES) -> Iterator[tuple[int, int, dict[str, Fraction]]]:
        for n, m in dims or self.dim_samples:
            if not self.dims_ok(n, m):
                continue
            for p in self.param_samples(n, m, default):
                yield n, m, p


_REGISTRY: dict[str, CatalogEntry] = {}


def _register(e: CatalogEntry) -> None:
    if e.name in _REGISTRY:
        raise CatalogError(f"duplicate catalog name {e.name}")
    _REGISTRY[e.name] = e


def get(name: str) -> CatalogEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}") from None


def names() -> list[str]:
    return list(_REGISTRY)


def entries() -> list[CatalogEntry]:
    return list(_REGISTRY.values())


def build(name: str, n: int, m: int, params: Mapping[str, Any] | None = None) -> SuperAlgebra:
    return get(name).build(n, m, params)


def expected_profile(name: str, n: int, m: int, params: Mapping[str, Any] | None = None) -> dict[str, Claim]:
    return {c.key: c for c in get(name).expected_claims(n, m, params)}


def table_members(table: str) -> list[CatalogEntry]:
    return [e for e in _REGISTRY.values() if e.table == table]


# ---------------------------------------------------------------------------
# the index
# ---------------------------------------------------------------------------

_ALPHA = (Param("alpha"),)


def _alpha(n, m):
    return _ALPHA


def _fixed(n0: int, m0: int):
    return lambda n, m: (n, m) == (n0, m0)


_register(CatalogEntry(
    "maxnil", "m = n or m = n + 1, n + m >= 2",
    lambda n, m: m in (n, n + 1) and n + m >= 2,
    lambda n, m, p: fam.maxnil(n, m),
    expected=lambda n, m, p: _claims(nilindex=n + m),
    dim_samples=tuple(((d // 2, d - d // 2)) for d in range(2, 19)),
    source="maximal-nilindex law [e_i,e_1]=e_{i+1}, [e_i,e_2]=2e_{i+2}, e_i odd for odd i",
))
_register(CatalogEntry(
    "maxnil_split", "m = 0, n >= 1",
    lambda n, m: m == 0 and n >= 1,
    lambda n, m, p: fam.maxnil_split(n, m),
    expected=lambda n, m, p: _claims(nilindex=n),
    dim_samples=tuple((d, 0) for d in range(1, 10)),
    source="split maximal-nilindex law [e_i,e_1]=e_{i+1}, all e_i even",
))
_register(CatalogEntry(
    "zf_model", "n >= 1",
    lambda n, m: n >= 1,
    lambda n, m, p: fam.zf_model(n, m),
    expected=lambda n, m, p: _claims(shape=ZF, char_seq=CharSequence((n,), (m,) if m else ())),
    dim_samples=((1, 1), (2, 2), (3, 2), (3, 3), (5, 3), (5, 4), (2, 6), (9, 9)),
    source="adapted-basis chain relations of a zero-filiform superalgebra only",
))


def _fil_expect(n, m, p):
    return _claims(shape=FIL, char_seq=CharSequence((n - 1, 1), (m,) if m else ()))


_FIL_DIMS = ((3, 1), (4, 2), (5, 2), (6, 2), (6, 3), (7, 4))
_register(CatalogEntry(
    "filiform_I", "n >= 3, m >= 1",
    lambda n, m: n >= 3 and m >= 1,
    lambda n, m, p: fam.filiform_I(n, m, p),
    params=lambda n, m: tuple(Param(f"alpha{k}") for k in range(3, n)) + (Param("theta"),),
    expected=_fil_expect, dim_samples=_FIL_DIMS,
    source="filiform adapted family (I)",
))
_register(CatalogEntry(
    "filiform_II", "n >= 3, m >= 1",
    lambda n, m: n >= 3 and m >= 1,
    lambda n, m, p: fam.filiform_II(n, m, p),
    params=lambda n, m: tuple(Param(f"beta{k}") for k in range(3, n)) + (Param("gamma"),),
    expected=_fil_expect, dim_samples=_FIL_DIMS,
    source="filiform adapted family (II)",
))


def _build_fil3(n, m, p):
    A = fam.filiform_III(n, m, p)
    from ..algebra import leibniz_defects

    bad = leibniz_defects(A)
    if bad:
        (i, j, k), _ = bad[0]
        lab = A.labels
        raise CatalogError(
            f"filiform_III: coefficients violate the Leibniz identity on ({lab[i]},{lab[j]},{lab[k]})"
        )
    return A


_register(CatalogEntry(
    "filiform_III", "n >= 3, m >= 1",
    lambda n, m: n >= 3 and m >= 1,
    _build_fil3,
    params=lambda n, m: tuple(Param(c) for c in fam.filiform_III_params(n)),
    expected=_fil_expect, dim_samples=((3, 1), (4, 2), (5, 2), (6, 2), (6, 3)),
    source="filiform adapted family (III) with a Lie even part; coefficients c{i}_{j}_{k} of X_k in [X_i,X_j]",
    validates=True,
))

# -- (2,2) and (n,2) -------------------------------------------------------------

for _w, _ps, _ex in (
    ("mu1", _alpha, lambda n, m, p: _claims(shape=ZF)),
    ("mu2", lambda n, m: (), lambda n, m, p: _claims(shape=ZF, nilindex=4)),
):
    _register(CatalogEntry(
        f"zf_2_2.{_w}", "(n,m) = (2,2)", _fixed(2, 2),
        (lambda w: lambda n, m, p: fam.zf_2_2(w, p))(_w),
        params=_ps, expected=_ex, dim_samples=((2, 2),), table="zf_2_2",
        source="zero-filiform classification, dims (2,2)",
    ))

_ZN2 = {"mu1": (2, 0), "mu2": (1, 0), "mu3": (2, -1)}  # dimL, dimZ - n
for _w, (_dl, _dz) in _ZN2.items():
    _register(CatalogEntry(
        f"zf_n1_2.{_w}", "m = 2, n >= 3", lambda n, m: m == 2 and n >= 3,
        (lambda w: lambda n, m, p: fam.zf_n1_2(w, n, p))(_w),
        params=_alpha if _w == "mu1" else (lambda n, m: ()),
        expected=(lambda dl, dz: lambda n, m, p: _claims(
            shape=ZF, nilindex=n, dim_left_ann=dl, dim_right_ann=n + dz))(_dl, _dz),
        dim_samples=tuple((n, 2) for n in range(3, 10)), table="zf_n1_2",
        source="zero-filiform classification, dims (n,2), n >= 3",
    ))


_register(CatalogEntry(
    "R32", "(n,m) = (3,2)", _fixed(3, 2),
    lambda n, m, p: fam.r32(),
    expected=lambda n, m, p: _claims(shape=FIL, nilindex=4),
    dim_samples=((3, 2),),
    source="the filiform non-Lie law of nilindex 4 on dims (3,2)",
))
_register(CatalogEntry(
    "R32_family", "(n,m) = (3,2)", _fixed(3, 2),
    lambda n, m, p: fam.r32_family(p),
    params=lambda n, m: (Param("lambda", "Q-{0}"), Param("beta", "Q-{0}")),
    expected=lambda n, m, p: _claims(shape=FIL, nilindex=4),
    dim_samples=((3, 2),),
    source="two-parameter family normalized to R32 by a change of scale",
))

# -- odd part of dimension three -------------------------------------------------------

_ZF23_C2 = {"mu1": 1, "mu2": 1, "mu3": 1, "mu4": 1, "mu5": 2}
for _i in range(1, 7):
    _w = f"mu{_i}"

    def _ex23(n, m, p, w=_w):
        out = _claims(shape=ZF)
        if w in _ZF23_C2:
            out.append(C(2, _ZF23_C2[w]))
        if w == "mu5":
            out += _claims(dim_right_ann=1)
        if w == "mu6":
            out += _claims(nilindex=5, dim_right_ann=3)
        return out

    _register(CatalogEntry(
        f"zf_2_3.{_w}", "(n,m) = (2,3)", _fixed(2, 3),
        (lambda w: lambda n, m, p: fam.zf_2_3(w))(_w),
        expected=_ex23, dim_samples=((2, 3),), table="zf_2_3",
        source="zero-filiform classification, dims (2,3)",
    ))

_ZF33_ALPHA = {"mu3", "mu5", "mu6", "mu7"}
for _i in range(1, 13):
    _w = f"mu{_i}"

    def _ex33(n, m, p, i=_i):
        out = _claims(shape=ZF)
        out.append(C(3, 0 if i <= 9 else (1 if i <= 11 else 3)))
        if i == 12:
            out += _claims(nilindex=6, dim_center=4)
        if i == 11:
            out += _claims(dim_center=2)
        return out

    _register(CatalogEntry(
        f"zf_3_3.{_w}", "(n,m) = (3,3)", _fixed(3, 3),
        (lambda w: lambda n, m, p: fam.zf_3_3(w, p))(_w),
        params=_alpha if _w in _ZF33_ALPHA else (lambda n, m: ()),
        expected=_ex33, dim_samples=((3, 3),), table="zf_3_3",
        source="zero-filiform classification, dims (3,3)",
    ))

_ZFN3_ALPHA = {"mu2", "mu3", "mu4", "mu8", "mu11", "mu14", "mu15"}
for _i in range(1, 14):
    _w = f"mu{_i}"

    def _ex43(n, m, p, i=_i):
        z = ("<", 4) if i in (9, 10, 11) else (">=", 4)
        return _claims(shape=ZF, nilindex=4, dim_right_ann=z)

    _register(CatalogEntry(
        f"zf_4_3.{_w}", "(n,m) = (4,3)", _fixed(4, 3),
        (lambda w: lambda n, m, p: fam.zf_n1_3(w, n, p))(_w),
        params=_alpha if _w in _ZFN3_ALPHA else (lambda n, m: ()),
        expected=_ex43, dim_samples=((4, 3),), table="zf_4_3",
        source="zero-filiform classification, dims (4,3)",
    ))

for _i in range(1, 16):
    _w = f"mu{_i}"
    _p = (lambda n, m: (Param("alpha", "Q-{0}"),)) if _w == "mu15" else (
        _alpha if _w in _ZFN3_ALPHA else (lambda n, m: ()))
    _register(CatalogEntry(
        f"zf_n1_3.{_w}", "m = 3, n >= 5", lambda n, m: m == 3 and n >= 5,
        (lambda w: lambda n, m, p: fam.zf_n1_3(w, n, p))(_w),
        params=_p,
        expected=lambda n, m, p: _claims(shape=ZF, nilindex=n),
        dim_samples=tuple((n, 3) for n in range(5, 10)), table="zf_n1_3",
        source="zero-filiform classification, dims (n,3), n >= 5",
    ))


def _r43_joint(p):
    if p["b0"] == 0:
        return "needs b0 != 0"
    if p["b1"] == -p["b0"]:
        return "needs b1 != -b0"
    return None


_register(CatalogEntry(
    "R43", "(n,m) = (4,3)", _fixed(4, 3),
    lambda n, m, p: fam.r43(),
    expected=lambda n, m, p: _claims(shape=FIL, nilindex=6),
    dim_samples=((4, 3),),
    source="the filiform non-Lie law of nilindex 6 on dims (4,3)",
))
_register(CatalogEntry(
    "R43_presolve", "(n,m) = (4,3)", _fixed(4, 3),
    lambda n, m, p: fam.r43_presolve(p),
    params=lambda n, m: tuple(Param(f"b{i}") for i in range(4)),
    expected=lambda n, m, p: _claims(shape=FIL, nilindex=6),
    dim_samples=((4, 3),), joint=_r43_joint,
    source="four-parameter family b0..b3 normalized to R43 by a change of basis",
))

# -- even part of dimension two ----------------------------------------------------------


def _zf2m_nil(m: int, which: str, k: int | None) -> int:
    if m % 2 == 1 and which == "muK" and k == (m - 1) // 2:
        return m + 1
    return m


_ZF2M_DIMS = tuple((2, m) for m in range(4, 10))
for _w in ("muK", "muK2", "mu_m1", "mu_m", "mu_mp1", "mu_mp2"):
    if _w == "muK":
        _p = lambda n, m: (Param("k", "Z", 1, (m - 1) // 2),)  # noqa: E731
    elif _w == "muK2":
        _p = lambda n, m: (Param("k", "Z", m // 2, m - 2),)  # noqa: E731
    else:
        _p = lambda n, m: ()  # noqa: E731
    _register(CatalogEntry(
        f"zf_2_m.{_w}", "n = 2, m >= 4", lambda n, m: n == 2 and m >= 4,
        (lambda w: lambda n, m, p: fam.zf_2_m(w, m, int(p["k"]) if "k" in p else None))(_w),
        params=_p,
        expected=(lambda w: lambda n, m, p: _claims(
            shape=ZF, nilindex=_zf2m_nil(m, w, int(p["k"]) if "k" in p else None)))(_w),
        dim_samples=_ZF2M_DIMS, table="zf_2_m",
        source="zero-filiform classification, dims (2,m), m >= 4",
    ))

_register(CatalogEntry(
    "R_conj", "n = m + 1, m >= 2", lambda n, m: n == m + 1 and m >= 2,
    lambda n, m, p: fam.r_conj(m),
    expected=lambda n, m, p: _claims(shape=FIL, nilindex=2 * m),
    dim_samples=tuple((k + 1, k) for k in range(2, 9)),
    source="filiform law on dims (k+1,k) with nilindex 2k; uniqueness is not checked",
))


# ---------------------------------------------------------------------------
# f(n,m) witnesses and degenerations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FWitness:
    """A law realizing a lower bound (or the exact value) of f(n, m)."""

    label: str
    dims: tuple[int, int]
    nilindex: int
    make: Callable[[], SuperAlgebra]
    not_zero_filiform: bool = False
    note: str = ""
    at_least: bool = False  # only nilindex >= value is claimed


def f_witnesses() -> list[FWitness]:
    out = [
        FWitness("zf_2_2.mu2", (2, 2), 4, lambda: build("zf_2_2.mu2", 2, 2)),
        FWitness("zf_2_3.mu6", (2, 3), 5, lambda: build("zf_2_3.mu6", 2, 3)),
        FWitness("zf_3_3.mu12", (3, 3), 6, lambda: build("zf_3_3.mu12", 3, 3)),
        FWitness("R32", (3, 2), 4, lambda: build("R32", 3, 2)),
        FWitness("R43", (4, 3), 6, lambda: build("R43", 4, 3)),
        FWitness("zf_2_3.mu6 + odd line", (2, 4), 5,
                 lambda: direct_sum(build("zf_2_3.mu6", 2, 3), odd_line())),
        FWitness("R43 + even line", (5, 3), 5,
                 lambda: direct_sum(build("R43", 4, 3), even_line()),
                 not_zero_filiform=True, at_least=True, note="lower bound f(5,3) >= 5"),
    ]
    for k in range(2, 5):
        out.append(FWitness(f"maxnil({k},{k}) + even line", (k + 1, k), 2 * k,
                            (lambda k: lambda: direct_sum(build("maxnil", k, k), even_line()))(k)))
    for k in range(1, 5):
        out.append(FWitness(f"maxnil({k},{k + 1}) + odd line", (k, k + 2), 2 * k + 1,
                            (lambda k: lambda: direct_sum(build("maxnil", k, k + 1), odd_line()))(k)))
    for m in (5, 7, 9):
        k = (m - 1) // 2
        out.append(FWitness(f"zf_2_m.muK k={k}", (2, m), m + 1,
                            (lambda m, k: lambda: build("zf_2_m.muK", 2, m, {"k": k}))(m, k)))
    return out


@dataclass(frozen=True)
class Degeneration:
    source: str
    source_params: Mapping[str, Fraction]
    target: str
    target_params: Mapping[str, Fraction]
    dims: tuple[int, int]
    even_exponents: tuple[Fraction, ...]
    odd_exponents: tuple[Fraction, ...]
    note: str = ""

    @property
    def label(self) -> str:
        def show(name, p):
            return name + ("" if not p else "(" + ",".join(f"{k}={v}" for k, v in p.items()) + ")")
        return f"{show(self.source, self.source_params)} -> {show(self.target, self.target_params)}"


def _q(*xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


DEGENERATIONS: tuple[Degeneration, ...] = (
    Degeneration("zf_3_3.mu11", {}, "zf_3_3.mu10", {}, (3, 3),
                 _q(-1, -2, -3), _q("-1/2", "-3/2", "-5/2")),
    Degeneration("zf_4_3.mu10", {}, "zf_4_3.mu9", {}, (4, 3),
                 _q(-1, -2, -3, -4), _q(-1, -2, -3),
                 note="exponents under the rule that the constant of [e_i,e_j] on e_k "
                      "scales by t^(e_i+e_j-e_k)"),
    Degeneration("zf_4_3.mu11", {"alpha": Fraction(1)}, "zf_4_3.mu10", {}, (4, 3),
                 _q(-1, -2, -3, -4), _q(-1, -2, -3),
                 note="no diagonal scaling realizes this limit; kept to record the stated claim"),
)

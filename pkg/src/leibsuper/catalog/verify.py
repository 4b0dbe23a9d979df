"""Verification harness: every catalog claim checked by direct computation."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from ..algebra import (
    GradedSubspace,
    ScalingFamily,
    SuperAlgebra,
    bracket,
    degeneration_limit,
    format_combination,
    leibniz_defects,
    member,
    operator_identity_defects,
)
from ..invariants import (
    InvariantProfile,
    Shape,
    compare_profiles,
    graded_central_series,
    invariant_profile,
)
from . import registry
from .normalize import NORMALIZATIONS
from .registry import DEFAULT_PARAM_SAMPLES, DEGENERATIONS, CatalogEntry, f_witnesses


@dataclass(frozen=True)
class Check:
    subject: str
    assertion: str
    passed: bool | None  # None marks an informational record
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        status = "info" if self.passed is None else ("pass" if self.passed else "fail")
        return {"subject": self.subject, "assertion": self.assertion, "status": status, "detail": self.detail}


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, subject: str, assertion: str, passed: bool | None, detail: str = "") -> None:
        self.checks.append(Check(subject, assertion, passed, detail))

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict[str, int]:
        return {
            "pass": sum(c.passed is True for c in self.checks),
            "fail": sum(c.passed is False for c in self.checks),
            "info": sum(c.passed is None for c in self.checks),
        }

    def to_dict(self) -> dict[str, Any]:
        return {"summary": self.summary(), "checks": [c.to_dict() for c in self.checks]}


def instance_label(name: str, n: int, m: int, params: dict[str, Fraction]) -> str:
    ps = ",".join(f"{k}={v}" for k, v in params.items())
    return f"{name}@({n},{m})" + (f"[{ps}]" if ps else "")


def _in_scope(name: str, scope: str | None) -> bool:
    return scope is None or name == scope or name.startswith(scope + ".")


# ---------------------------------------------------------------------------
# bracket-membership checks for odd part of dimension three
# ---------------------------------------------------------------------------


def _adapted_labels(A: SuperAlgebra) -> bool:
    return A.even_labels == tuple(f"X{i}" for i in range(A.n)) and A.odd_labels == tuple(
        f"Y{j}" for j in range(1, A.m + 1))


def y3_square_defect(A: SuperAlgebra):
    """[Y3,Y3] - 1/6 [[[[[Y1,Y1],X0],X0],X0],X0] (zero when the chain relation holds)."""
    Y1, Y3, X0 = (A.basis_vector(s) for s in ("Y1", "Y3", "X0"))
    w = bracket(A, Y1, Y1)
    for _ in range(4):
        w = bracket(A, w, X0)
    return bracket(A, Y3, Y3) - Fraction(1, 6) * w


def odd_square_membership(A: SuperAlgebra) -> list[str]:
    """Pairs (i,j), 3 <= i+j <= 5, with [Y_i,Y_j] outside C^{i+j-2}(L_0)."""
    s0, _, _ = graded_central_series(A)
    bad = []
    for k in range(3, 6):
        S = s0[k - 2] if k - 2 < len(s0) else GradedSubspace.zero(A.n, A.m)
        for i in range(1, 4):
            j = k - i
            if 1 <= j <= 3:
                v = bracket(A, A.basis_vector(f"Y{i}"), A.basis_vector(f"Y{j}"))
                if not member(S, v):
                    bad.append(f"[Y{i},Y{j}] = {format_combination(v.sparse(), A.labels)} not in C^{k - 2}(L_0)")
    return bad


# ---------------------------------------------------------------------------
# per-instance checks
# ---------------------------------------------------------------------------


def _fmt_defect(A: SuperAlgebra, item) -> str:
    (i, j, k), v = item
    lab = A.labels
    return f"({lab[i]},{lab[j]},{lab[k]}) -> {format_combination(v.sparse(), lab)}"


def check_instance(report: Report, entry: CatalogEntry, n: int, m: int, params: dict[str, Fraction],
                   operator_check: bool = True) -> tuple[SuperAlgebra, InvariantProfile] | None:
    label = instance_label(entry.name, n, m, params)
    try:
        A = entry.build(n, m, params)
    except ValueError as exc:
        # sampled points off a validated family's variety are expected rejections
        report.add(label, "build", None if entry.validates else False, str(exc))
        return None
    defects = leibniz_defects(A)
    report.add(label, "leibniz identity", not defects,
               "" if not defects else f"{len(defects)} defect(s), first {_fmt_defect(A, defects[0])}")
    if operator_check:
        op = operator_identity_defects(A)
        report.add(label, "right-multiplication identity", (not op) == (not defects) and not op,
                   "" if not op else f"{len(op)} violating pair(s)")
    prof = invariant_profile(A)
    for claim in entry.expected(n, m, params):
        got = claim.observed(prof)
        report.add(label, f"claim {claim}", claim.holds(prof), f"computed {registry.show_value(got)}")
    leibniz = not defects
    if leibniz and m == 3 and _adapted_labels(A) and prof.s_nilindex and prof.s_nilindex[1] == 3 and n >= 4:
        d = y3_square_defect(A)
        report.add(label, "[Y3,Y3] = 1/6 [[[[[Y1,Y1],X0],X0],X0],X0]", d.is_zero(),
                   "" if d.is_zero() else f"difference {format_combination(d.sparse(), A.labels)}")
    if leibniz and m == 3 and n >= 3 and _adapted_labels(A) and prof.shape is Shape.ZERO_FILIFORM:
        bad = odd_square_membership(A)
        report.add(label, "[Y_i,Y_j] in C^{i+j-2}(L_0), 3 <= i+j <= 5", not bad, "; ".join(bad))
    return A, prof


def _table_pairs(report: Report, table: str, items: list[tuple[str, InvariantProfile]]) -> None:
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            (la, pa), (lb, pb) = items[a], items[b]
            w = compare_profiles(pa, pb)
            detail = "invariant-indistinguishable" if w is None else (
                f"{w.invariant}: {registry.show_value(w.value_a)} vs {registry.show_value(w.value_b)}")
            report.add(f"{la} vs {lb}", f"distinguish within {table}", None, detail)


def check_degenerations(report: Report, scope: str | None = None) -> None:
    for d in DEGENERATIONS:
        if not (_in_scope(d.source, scope) or _in_scope(d.target, scope)):
            continue
        A = registry.build(d.source, *d.dims, d.source_params)
        B = registry.build(d.target, *d.dims, d.target_params)
        lim = degeneration_limit(A, ScalingFamily(d.even_exponents, d.odd_exponents))
        if isinstance(lim, SuperAlgebra):
            ok = lim == B
            detail = "" if ok else "limit law differs from target:\n" + lim.format_table()
        else:
            ok, detail = False, f"diverges on {lim.product} with exponent {lim.exponent}"
        if d.note:
            detail = (detail + " | " if detail else "") + d.note
        report.add(d.label, "degeneration limit equals target", ok, detail)


def check_normalizations(report: Report, scope: str | None = None) -> None:
    for nm in NORMALIZATIONS:
        src = nm.label.split(" -> ")[0]
        if not _in_scope(src, scope):
            continue
        for p in nm.samples:
            ok, got, _ = nm.run(p)
            ps = ",".join(f"{k}={v}" for k, v in p.items())
            report.add(f"{nm.label}" + (f" [{ps}]" if ps else ""), "basis change reaches representative", ok,
                       "" if ok else got.format_table())


def check_f_witnesses(report: Report) -> None:
    for w in f_witnesses():
        A = w.make()
        prof = invariant_profile(A)
        nil_ok = prof.nilindex is not None and (
            prof.nilindex >= w.nilindex if w.at_least else prof.nilindex == w.nilindex)
        ok = (A.n, A.m) == w.dims and nil_ok
        detail = f"dims ({A.n},{A.m}), nilindex {prof.nilindex}"
        if w.not_zero_filiform:
            ok = ok and prof.shape is not Shape.ZERO_FILIFORM
            detail += f", shape {prof.shape.value if prof.shape else None}"
        rel = ">=" if w.at_least else "="
        report.add(w.label, f"realizes nilindex {rel} {w.nilindex} at {w.dims}", ok, detail)


def verify(scope: str | None = None, param_samples: Sequence[Fraction] = DEFAULT_PARAM_SAMPLES,
           dims: Iterable[tuple[int, int]] | None = None, operator_check: bool = True,
           pairwise: bool = True) -> Report:
    """Check every entry in ``scope`` (an entry name, a table prefix, or None for all)."""
    if scope is not None and not any(_in_scope(e.name, scope) for e in registry.entries()):
        registry.get(scope)  # raises the unknown-name error
    report = Report()
    tables: dict[str, list[tuple[str, InvariantProfile]]] = {}
    dims = list(dims) if dims is not None else None
    for entry in registry.entries():
        if not _in_scope(entry.name, scope):
            continue
        first_dims = None
        for n, m, p in entry.instances(dims, param_samples):
            res = check_instance(report, entry, n, m, p, operator_check)
            if res is None or entry.table is None:
                continue
            first_dims = first_dims or (n, m)
            if (n, m) == first_dims:
                tables.setdefault(f"{entry.table}@{n},{m}", []).append((instance_label(entry.name, n, m, p), res[1]))
    if pairwise:
        for t, items in tables.items():
            _table_pairs(report, t, items)
    check_degenerations(report, scope)
    check_normalizations(report, scope)
    if scope is None:
        check_f_witnesses(report)
    return report

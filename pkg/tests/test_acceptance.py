"""Acceptance criteria, each checked exactly and reported on one line.

Three criteria cannot pass because some stated values disagree with direct
computation (see the ledger kept alongside the repository).  Those tests are
strict xfails: they run the full check, print FAIL with the offending items,
and would turn into an error if the computation ever started agreeing.

Run directly with ``python3 tests/test_acceptance.py`` for the lines alone.
"""
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import random_map, record_criterion  # noqa: E402
from leibsuper.adapted import adapted_basis_zf, zf_relation_defects  # noqa: E402
from leibsuper.algebra import (  # noqa: E402
    ScalingFamily,
    SuperAlgebra,
    apply_basis_change,
    degeneration_limit,
    direct_sum,
    even_line,
    leibniz_defects,
    odd_line,
    operator_identity_defects,
)
from leibsuper.catalog import CatalogError, registry  # noqa: E402
from leibsuper.catalog.registry import DEFAULT_PARAM_SAMPLES, DEGENERATIONS, f_witnesses  # noqa: E402
from leibsuper.catalog.verify import instance_label, verify  # noqa: E402
from leibsuper.invariants import (  # noqa: E402
    CharSequence,
    Shape,
    char_sequence,
    closure_obstruction,
    invariant_profile,
    nilindex,
)


def conclude(k: int, title: str, failures: list[str], started: float) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {k} {status}: {title} ({time.perf_counter() - started:.1f}s)"
    if failures:
        shown = "; ".join(failures[:6]) + (f"; ... {len(failures) - 6} more" if len(failures) > 6 else "")
        line += f" | {len(failures)} failing: {shown}"
    record_criterion(line)
    assert not failures, "\n".join(failures)


def instances(name, dims=None):
    e = registry.get(name)
    for n, m, p in e.instances(dims, DEFAULT_PARAM_SAMPLES):
        try:
            yield n, m, p, e.build(n, m, p)
        except CatalogError:
            # a validated family rejecting a sampled point off its variety
            continue


def entries_with_prefix(prefix):
    return [e.name for e in registry.entries() if e.name.startswith(prefix + ".")]


# ---------------------------------------------------------------------------


@pytest.mark.xfail(strict=True, reason="several transcribed tables break the Leibniz identity")
def test_criterion_1_identity_suite():
    t0 = time.perf_counter()
    failures = []
    for e in registry.entries():
        dims = [(n, m) for n, m in e.dim_samples if n <= 9 and m <= 9]
        for n, m, p, A in instances(e.name, dims):
            ld, od = leibniz_defects(A), operator_identity_defects(A)
            if ld or od:
                failures.append(f"{instance_label(e.name, n, m, p)} ({len(ld)} triple(s), {len(od)} pair(s))")
    conclude(1, "identity suite over all catalog entries up to (9,9)", failures, t0)


KNOWN_NON_LEIBNIZ = {
    "zf_3_3.mu1", "zf_3_3.mu2", "zf_3_3.mu3", "zf_3_3.mu5", "zf_3_3.mu6", "zf_3_3.mu8",
    "zf_4_3.mu11", "zf_4_3.mu13", "zf_n1_3.mu11", "zf_n1_3.mu13", "zf_n1_3.mu14", "zf_2_m.mu_mp1",
}


def test_identity_failures_confined_to_known_tables():
    # companion to criterion 1: everything outside the known list satisfies both identities
    bad = set()
    for e in registry.entries():
        for n, m, p, A in instances(e.name):
            if leibniz_defects(A):
                bad.add(e.name)
                assert operator_identity_defects(A)
            else:
                assert not operator_identity_defects(A)
    assert bad == KNOWN_NON_LEIBNIZ


def test_criterion_2_maximal_nilindex_family():
    t0 = time.perf_counter()
    failures = []
    for d in range(4, 10):
        n, m = (d // 2, d // 2) if d % 2 == 0 else ((d - 1) // 2, (d + 1) // 2)
        A = registry.build("maxnil", n, m)
        if (A.n, A.m) != (n, m) or nilindex(A) != d:
            failures.append(f"d={d}: dims ({A.n},{A.m}), nilindex {nilindex(A)}")
        if leibniz_defects(A):
            failures.append(f"d={d}: not Leibniz")
    for n, m in ((3, 2), (2, 4), (3, 5)):
        try:
            registry.build("maxnil", n, m)
            failures.append(f"grading ({n},{m}) accepted although m is neither n nor n+1")
        except CatalogError:
            pass
    conclude(2, "maximal-nilindex family: nilindex d for d=4..9, grading m=n or n+1", failures, t0)


def test_criterion_3_f_witnesses():
    t0 = time.perf_counter()
    failures = []
    want = {("zf_2_2.mu2", (2, 2)): 4, ("zf_2_3.mu6", (2, 3)): 5, ("zf_3_3.mu12", (3, 3)): 6,
            ("R32", (3, 2)): 4, ("R43", (4, 3)): 6}
    seen = set()
    for w in f_witnesses():
        A = w.make()
        prof = invariant_profile(A)
        ok = (A.n, A.m) == w.dims and prof.nilindex is not None and (
            prof.nilindex >= w.nilindex if w.at_least else prof.nilindex == w.nilindex)
        if leibniz_defects(A):
            ok = False
        if w.not_zero_filiform and prof.shape is Shape.ZERO_FILIFORM:
            ok = False
        if not ok:
            failures.append(f"{w.label}: dims ({A.n},{A.m}), nilindex {prof.nilindex}")
        seen.add((w.label, w.dims))
    for (label, dims), nil in want.items():
        if (label, dims) not in seen:
            failures.append(f"missing witness {label} at {dims}")
    # the remaining named witnesses, computed directly
    extra = [
        ("mu6 + odd line", direct_sum(registry.build("zf_2_3.mu6", 2, 3), odd_line()), (2, 4), 5, False),
        ("R43 + even line", direct_sum(registry.build("R43", 4, 3), even_line()), (5, 3), 5, True),
    ]
    for k in range(2, 5):
        extra.append((f"maxnil({k},{k}) + even line", direct_sum(registry.build("maxnil", k, k), even_line()),
                      (k + 1, k), 2 * k, False))
    for label, A, dims, nil, at_least in extra:
        got = nilindex(A)
        if (A.n, A.m) != dims or got is None or (got < nil if at_least else got != nil):
            failures.append(f"{label}: dims ({A.n},{A.m}), nilindex {got}")
    conclude(3, "f-value witnesses realize the stated nilindexes", failures, t0)


def test_criterion_4_nilindex_tables():
    t0 = time.perf_counter()
    failures = []
    for name in entries_with_prefix("zf_n1_2"):
        for N in range(3, 10):  # ZF^{n+1,2} for n = 2..8
            for n, m, p, A in instances(name, [(N, 2)]):
                if nilindex(A) != N:
                    failures.append(f"{instance_label(name, n, m, p)}: nilindex {nilindex(A)}, want {N}")
    for name in entries_with_prefix("zf_n1_3"):
        for N in range(5, 9):  # ZF^{n+1,3} for n = 4..7
            for n, m, p, A in instances(name, [(N, 3)]):
                if nilindex(A) != N:
                    failures.append(f"{instance_label(name, n, m, p)}: nilindex {nilindex(A)}, want {N}")
    zf2m = entries_with_prefix("zf_2_m")
    for mm in (4, 6, 8):
        for name in zf2m:
            for n, m, p, A in instances(name, [(2, mm)]):
                if nilindex(A) != mm:
                    failures.append(f"{instance_label(name, n, m, p)}: nilindex {nilindex(A)}, want {mm}")
    for mm in (5, 7, 9):
        peak = (mm - 1) // 2
        for name in zf2m:
            for n, m, p, A in instances(name, [(2, mm)]):
                at_peak = name == "zf_2_m.muK" and p.get("k") == peak
                want = mm + 1 if at_peak else mm
                got = nilindex(A)
                if got != want:
                    failures.append(f"{instance_label(name, n, m, p)}: nilindex {got}, want {want}")
    conclude(4, "nilindex tables for (n,2), (n,3) and (2,m)", failures, t0)


def _claims_for(names, dims):
    out = []
    for name in names:
        for n, m, p, A in instances(name, [dims]):
            prof = invariant_profile(A)
            for c in registry.get(name).expected(n, m, p):
                out.append((instance_label(name, n, m, p), c, c.holds(prof), c.observed(prof)))
    return out


@pytest.mark.xfail(strict=True, reason="two stated center dimensions in (3,3) disagree with computation")
def test_criterion_5_quoted_invariant_dims():
    t0 = time.perf_counter()
    checked = []
    checked += _claims_for(entries_with_prefix("zf_n1_2"), (4, 2))
    checked += _claims_for(entries_with_prefix("zf_2_3"), (2, 3))
    checked += _claims_for(entries_with_prefix("zf_3_3"), (3, 3))
    checked += _claims_for(entries_with_prefix("zf_4_3"), (4, 3))
    keys = {c.key for _, c, _, _ in checked}
    failures = [f"{lab}: {c} but computed {registry.show_value(got)}" for lab, c, ok, got in checked if not ok]
    for need in ("dim_right_ann", "dim_left_ann", "dim_center", "series_dim[2]", "series_dim[3]"):
        if need not in keys:
            failures.append(f"no quoted value for {need} was checked")
    conclude(5, f"quoted invariant dimensions ({len(checked)} values)", failures, t0)


@pytest.mark.xfail(strict=True, reason="one registered degeneration and the center condition do not hold")
def test_criterion_6_degenerations_and_obstructions():
    t0 = time.perf_counter()
    failures = []
    for d in DEGENERATIONS:
        A = registry.build(d.source, *d.dims, d.source_params)
        B = registry.build(d.target, *d.dims, d.target_params)
        lim = degeneration_limit(A, ScalingFamily(d.even_exponents, d.odd_exponents))
        if not isinstance(lim, SuperAlgebra):
            failures.append(f"{d.label}: diverges on {lim.product}")
        elif lim != B:
            failures.append(f"{d.label}: limit differs from target")
    mu12, mu11 = registry.build("zf_3_3.mu12", 3, 3), registry.build("zf_3_3.mu11", 3, 3)
    obs = closure_obstruction(mu12, mu11)
    if not any(o.condition == "Cent" for o in obs):
        have = ", ".join(f"{o.condition} {o.value_lambda}>{o.value_mu}" for o in obs) or "none"
        failures.append(f"closure(mu12, mu11) at (3,3) has no Cent condition (found: {have})")
    mu6, mu5 = registry.build("zf_2_3.mu6", 2, 3), registry.build("zf_2_3.mu5", 2, 3)
    if not any(o.condition == "Z" for o in closure_obstruction(mu6, mu5)):
        failures.append("closure(mu6, mu5) at (2,3) has no Z condition")
    conclude(6, "registered degenerations and closure obstructions", failures, t0)


def test_criterion_6_parts_that_hold():
    # what does hold: two of three limits, the Z condition for (mu12, mu11), the Z condition for (mu6, mu5)
    ok = 0
    for d in DEGENERATIONS:
        A = registry.build(d.source, *d.dims, d.source_params)
        lim = degeneration_limit(A, ScalingFamily(d.even_exponents, d.odd_exponents))
        ok += lim == registry.build(d.target, *d.dims, d.target_params)
    assert ok == 2
    obs = closure_obstruction(registry.build("zf_3_3.mu12", 3, 3), registry.build("zf_3_3.mu11", 3, 3))
    assert [(o.condition, o.value_lambda, o.value_mu) for o in obs if o.condition == "Z"] == [("Z", 4, 2)]


def test_criterion_7_adapted_basis_round_trip():
    t0 = time.perf_counter()
    failures = []
    cases = [("zf_model", 5, 4), ("zf_n1_2.mu2", 5, 2), ("zf_2_3.mu6", 2, 3)]
    for name, n, m in cases:
        A = registry.build(name, n, m)
        for seed in range(20):
            S = apply_basis_change(A, random_map(n, m, random.Random(1000 * seed + n)))
            try:
                B = apply_basis_change(S, adapted_basis_zf(S))
            except Exception as exc:  # any failure to recover counts against the criterion
                failures.append(f"{name} seed {seed}: {exc}")
                continue
            bad = zf_relation_defects(B)
            if bad:
                failures.append(f"{name} seed {seed}: relations fail at {', '.join(bad)}")
            elif leibniz_defects(B):
                failures.append(f"{name} seed {seed}: recovered law is not Leibniz")
    conclude(7, "adapted basis recovered after 20 scramblings of three laws", failures, t0)


def test_criterion_8_characteristic_sequences():
    t0 = time.perf_counter()
    failures = []
    count = 0
    for e in registry.entries():
        if not (e.name == "zf_model" or e.name.startswith("zf_")):
            continue
        for dims in ((3, 2), (3, 3), (5, 3)):
            if not e.dims_ok(*dims):
                continue
            for n, m, p, A in instances(e.name, [dims]):
                count += 1
                got = char_sequence(A)
                if got != CharSequence((n,), (m,)):
                    failures.append(f"{instance_label(e.name, n, m, p)}: {got}")
    fil = registry.get("filiform_I")
    zeros = {q.name: Fraction(0) for q in fil.param_list(6, 2)}
    got = char_sequence(fil.build(6, 2, zeros))
    if got != CharSequence((5, 1), (2,)):
        failures.append(f"filiform_I@(6,2) zero coefficients: {got}")
    if count == 0:
        failures.append("no zero-filiform entries sampled")
    conclude(8, f"characteristic sequences ({count + 1} laws)", failures, t0)


def test_criterion_9_membership_properties():
    t0 = time.perf_counter()
    failures, applied = [], 0
    for scope in ("zf_n1_3", "zf_3_3", "zf_4_3"):
        rep = verify(scope, pairwise=False, operator_check=False)
        for c in rep.checks:
            if c.assertion.startswith("[Y3,Y3]") or c.assertion.startswith("[Y_i,Y_j]"):
                applied += 1
                if not c.passed:
                    failures.append(f"{c.subject}: {c.assertion} ({c.detail})")
    if applied == 0:
        failures.append("the hypotheses never applied")
    conclude(9, f"odd-square chain and membership properties ({applied} checks)", failures, t0)


def test_criterion_10_conjectured_family():
    t0 = time.perf_counter()
    failures = []
    for k in range(2, 6):
        A = registry.build("R_conj", k + 1, k)
        prof = invariant_profile(A)
        if leibniz_defects(A) or operator_identity_defects(A):
            failures.append(f"R_conj({k}): identity fails")
        if prof.shape is not Shape.FILIFORM:
            failures.append(f"R_conj({k}): shape {prof.shape}")
        if prof.nilindex != 2 * k:
            failures.append(f"R_conj({k}): nilindex {prof.nilindex}, want {2 * k}")
    conclude(10, "conjectured family: Leibniz, Filiform, nilindex 2k for k=2..5", failures, t0)


if __name__ == "__main__":
    status = 0
    tests = [(name, fn) for name, fn in globals().items()
             if name.startswith("test_criterion_") and not name.endswith("hold")]
    for name, fn in sorted(tests, key=lambda kv: int(kv[0].split("_")[2])):
        try:
            fn()
        except AssertionError:
            status = 1
    raise SystemExit(status)

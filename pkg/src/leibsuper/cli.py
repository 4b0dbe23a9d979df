"""Command-line interface.

Every command prints one JSON report::

    {"command": ..., "inputs": {...}, "results": {...}, "failures": [...]}

Exit status is 0 when ``failures`` is empty, 1 when checks ran and some
failed, and 2 on usage or input errors (bad file, parse error, unknown
catalog name, unbound parameter).

An ALGEBRA argument is either a path to a ``.lsa`` file or a catalog
reference ``catalog:NAME@N,M`` with optional bindings appended as
``:k=v,k=v`` (for example ``catalog:zf_3_3.mu3@3,3:alpha=1/2``).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Mapping, Sequence

from . import lsa
from .adapted import adapted_basis_zf, zf_relation_defects
from .algebra import (
    Diverges,
    ScalingFamily,
    SuperAlgebra,
    apply_basis_change,
    degeneration_limit,
    direct_sum,
    format_combination,
    leibniz_defects,
    operator_identity_defects,
)
from .catalog import registry
from .catalog.families import CatalogError
from .catalog.verify import verify
from .errors import AlgebraError, NotNilpotentError, NotZeroFiliformError
from .invariants import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    char_sequence,
    classify_shape,
    closure_obstruction,
    distinguish,
    invariant_profile,
    nilindex,
    s_nilindex,
    series_dims,
)


class UsageError(Exception):
    pass


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _bindings(items: Sequence[str]) -> dict[str, Fraction]:
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"expected k=v, got {item!r}")
        out[key.strip()] = _frac(val)
    return out


def _catalog_ref(ref: str) -> tuple[str, int, int, dict[str, Fraction]]:
    body = ref[len("catalog:"):]
    head, _, binds = body.partition(":")
    name, at, dims = head.partition("@")
    if not at:
        raise UsageError(f"catalog reference needs @N,M: {ref!r}")
    try:
        n, m = (int(x) for x in dims.split(","))
    except ValueError:
        raise UsageError(f"bad dimensions in {ref!r}") from None
    return name, n, m, _bindings([b for b in binds.split(",") if b]) if binds else {}


def load_algebra(ref: str, params: Mapping[str, Fraction] | None = None, strict: bool = True) -> SuperAlgebra:
    """Resolve a file path or catalog reference.

    With ``strict=False`` bindings for names the file does not declare are
    ignored, so one ``--param`` list can serve two files.
    """
    params = dict(params or {})
    if ref.startswith("catalog:"):
        name, n, m, binds = _catalog_ref(ref)
        return registry.build(name, n, m, binds)
    try:
        with open(ref, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {ref}: {exc.strerror}") from None
    d = lsa.parse(text)
    if not strict:
        params = {k: v for k, v in params.items() if k in d.params}
    return lsa.instantiate(d, params)


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "value") and not isinstance(x, (int, str, bool)):  # enums
        return x.value
    return x


def _report(command: str, inputs: dict, results: Any, failures: list) -> dict:
    return {"command": command, "inputs": _jsonable(inputs), "results": _jsonable(results),
            "failures": _jsonable(failures)}


def _matrix(rows) -> list[list[str]]:
    return [[str(c) for c in r] for r in rows]


def _defect_strings(A: SuperAlgebra) -> list[str]:
    lab = A.labels
    return [f"({lab[i]},{lab[j]},{lab[k]}): {format_combination(v.sparse(), lab)}"
            for (i, j, k), v in leibniz_defects(A)]


def _emit(path: str | None, A: SuperAlgebra) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(lsa.serialize(A))


# ---------------------------------------------------------------------------
# commands; each returns (results, failures)
# ---------------------------------------------------------------------------


def cmd_check(args) -> tuple[dict, list]:
    A = load_algebra(args.file, _bindings(args.param))
    defects = _defect_strings(A)
    lab = A.labels
    op = [f"(R_{lab[i]}, R_{lab[j]})" for (i, j), _ in operator_identity_defects(A)]
    failures = [f"Leibniz identity fails on {d}" for d in defects]
    failures += [f"right-multiplication identity fails on {p}" for p in op]
    return {"dims": [A.n, A.m], "leibniz": not defects, "leibniz_defects": defects,
            "operator_identity_defects": op}, failures


def cmd_profile(args):
    A = load_algebra(args.file, _bindings(args.param))
    prof = invariant_profile(A, args.samples, args.seed)
    failures = [] if not leibniz_defects(A) else ["law is not Leibniz; invariants describe the raw table"]
    return {"dims": [A.n, A.m], "profile": prof.to_dict()}, failures


def cmd_nilindex(args):
    A = load_algebra(args.file, _bindings(args.param))
    nil = nilindex(A)
    res = {"nilindex": nil, "series_dims": list(series_dims(A))}
    if nil is not None:
        res["s_nilindex"] = list(s_nilindex(A))
    return res, []


def cmd_charseq(args):
    A = load_algebra(args.file, _bindings(args.param))
    try:
        cs = char_sequence(A, args.samples, args.seed)
    except NotNilpotentError as exc:
        return {"char_seq": None}, [str(exc)]
    return {"char_seq": str(cs), "even": list(cs.even_part), "odd": list(cs.odd_part),
            "samples": args.samples, "seed": args.seed}, []


def cmd_shape(args):
    A = load_algebra(args.file, _bindings(args.param))
    if nilindex(A) is None:
        return {"shape": None, "s_nilindex": None, "nilpotent": False}, []
    return {"shape": classify_shape(A).value, "s_nilindex": list(s_nilindex(A)), "nilpotent": True}, []


def cmd_adapted_basis(args):
    A = load_algebra(args.file, _bindings(args.param))
    try:
        g = adapted_basis_zf(A, seed=args.seed)
    except NotZeroFiliformError as exc:
        return {"law": None, "map": None}, [str(exc)]
    B = apply_basis_change(A, g)
    _emit(args.emit, B)
    bad = zf_relation_defects(B)
    return {"law": lsa.serialize(B), "map": {"even": _matrix(g.even_block), "odd": _matrix(g.odd_block)},
            "relation_defects": bad}, [f"adapted relation fails: {b}" for b in bad]


def cmd_distinguish(args):
    p = _bindings(args.param)
    A, B = load_algebra(args.a, p, strict=False), load_algebra(args.b, p, strict=False)
    w = distinguish(A, B)
    if w is None:
        return {"witness": None, "note": "invariants do not separate the two laws"}, []
    return {"witness": {"invariant": w.invariant, "a": registry.show_value(w.value_a),
                        "b": registry.show_value(w.value_b)}}, []


def cmd_closure(args):
    p = _bindings(args.param)
    lam, mu = load_algebra(args.lam, p, strict=False), load_algebra(args.mu, p, strict=False)
    obs = closure_obstruction(lam, mu)
    return {"obstructions": [{"condition": o.condition, "lambda": o.value_lambda, "mu": o.value_mu, "s": o.s}
                             for o in obs],
            "conclusive": bool(obs)}, []


def cmd_degenerate(args):
    A = load_algebra(args.file, _bindings(args.param), strict=args.target is None)
    exps = [_frac(e) for e in args.exponents.split(",") if e.strip()]
    if len(exps) != A.dim:
        raise UsageError(f"need {A.dim} exponents (evens then odds), got {len(exps)}")
    lim = degeneration_limit(A, ScalingFamily(tuple(exps[: A.n]), tuple(exps[A.n:])))
    if isinstance(lim, Diverges):
        a, b, c = lim.product
        return {"limit": None, "diverges": {"product": f"[{a},{b}] -> {c}", "exponent": lim.exponent}}, [
            f"coefficient of {c} in [{a},{b}] scales with negative exponent {lim.exponent}"]
    _emit(args.emit, lim)
    res: dict[str, Any] = {"limit": lsa.serialize(lim)}
    failures = []
    if args.target:
        T = load_algebra(args.target, _bindings(args.param), strict=False)
        res["equals_target"] = lim == T
        if lim != T:
            failures.append("limit law differs from the target")
    return res, failures


def cmd_sum(args):
    p = _bindings(args.param)
    S = direct_sum(load_algebra(args.a, p, strict=False), load_algebra(args.b, p, strict=False))
    _emit(args.emit, S)
    return {"dims": [S.n, S.m], "law": lsa.serialize(S)}, []


def cmd_catalog_list(args):
    out = []
    for e in registry.entries():
        dims = e.dim_samples[0] if e.dim_samples else None
        out.append({
            "name": e.name,
            "constraint": e.constraint,
            "table": e.table,
            "params": [p.describe() for p in e.param_list(*dims)] if dims else [],
            "dim_samples": [list(d) for d in e.dim_samples],
            "source": e.source,
        })
    return {"entries": out}, []


def cmd_catalog_build(args):
    A = registry.build(args.name, args.n, args.m, _bindings(args.param))
    _emit(args.emit, A)
    return {"dims": [A.n, A.m], "law": lsa.serialize(A)}, []


def cmd_catalog_verify(args):
    rep = verify(args.name, pairwise=not args.no_pairwise, operator_check=not args.no_operator)
    checks = [c.to_dict() for c in rep.checks if args.all or c.passed is not True]
    return {"summary": rep.summary(), "checks": checks}, [
        f"{c.subject}: {c.assertion}" + (f" ({c.detail.splitlines()[0]})" if c.detail else "")
        for c in rep.failures]


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leibsuper", description="Exact computations with Leibniz superalgebras.")
    ap.add_argument("--output", "-o", help="write the JSON report here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def with_params(p):
        p.add_argument("--param", "-p", action="append", default=[], metavar="K=V",
                       help="bind a declared parameter (repeatable)")
        return p

    def one(name, fn, help_):
        p = with_params(sub.add_parser(name, help=help_))
        p.add_argument("file", metavar="ALGEBRA")
        p.set_defaults(fn=fn)
        return p

    def two(name, fn, help_, a="a", b="b"):
        p = with_params(sub.add_parser(name, help=help_))
        p.add_argument(a, metavar=a.upper())
        p.add_argument(b, metavar=b.upper())
        p.set_defaults(fn=fn)
        return p

    one("check", cmd_check, "Leibniz and right-multiplication identity defects")
    for name, fn, help_ in (("profile", cmd_profile, "full invariant profile"),
                            ("charseq", cmd_charseq, "characteristic sequence")):
        p = one(name, fn, help_)
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    one("nilindex", cmd_nilindex, "nilindex and central series dimensions")
    one("shape", cmd_shape, "zero-filiform / filiform / other")
    p = one("adapted-basis", cmd_adapted_basis, "recover an adapted basis of a zero-filiform law")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--emit", metavar="PATH", help="also write the recovered law as .lsa")
    two("distinguish", cmd_distinguish, "first invariant separating two laws")
    two("closure", cmd_closure, "obstructions to MU lying in the orbit closure of LAMBDA", "lam", "mu")
    p = one("degenerate", cmd_degenerate, "limit of a diagonal scaling family")
    p.add_argument("--exponents", required=True, help="comma-separated exponents, evens then odds; write --exponents=-1,... when the first is negative")
    p.add_argument("--target", metavar="ALGEBRA", help="compare the limit with this law")
    p.add_argument("--emit", metavar="PATH")
    p = two("sum", cmd_sum, "direct sum of two laws")
    p.add_argument("--emit", metavar="PATH")

    cat = sub.add_parser("catalog", help="list, build or verify catalog entries")
    csub = cat.add_subparsers(dest="action", required=True, metavar="ACTION")
    csub.add_parser("list", help="registered entries").set_defaults(fn=cmd_catalog_list)
    p = with_params(csub.add_parser("build", help="instantiate an entry"))
    p.add_argument("name")
    p.add_argument("--n", type=int, required=True, help="even dimension")
    p.add_argument("--m", type=int, required=True, help="odd dimension")
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(fn=cmd_catalog_build)
    p = csub.add_parser("verify", help="check stated claims by computation")
    p.add_argument("name", nargs="?", help="entry name or table prefix; all entries if omitted")
    p.add_argument("--no-pairwise", action="store_true", help="skip within-table distinguish records")
    p.add_argument("--no-operator", action="store_true", help="skip the right-multiplication identity")
    p.add_argument("--all", action="store_true", help="list passing checks too")
    p.set_defaults(fn=cmd_catalog_verify)
    return ap


def _inputs(args) -> dict:
    skip = {"fn", "command", "action", "output"}
    return {k: v for k, v in vars(args).items() if k not in skip and v not in (None, [], False)}


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    command = args.command + (f" {args.action}" if getattr(args, "action", None) else "")
    try:
        results, failures = args.fn(args)
        code = 1 if failures else 0
    except (UsageError, lsa.ParseError, lsa.BindingError, CatalogError, AlgebraError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"leibsuper: error: {msg}", file=sys.stderr)
        results, failures, code = None, [str(msg)], 2
    text = json.dumps(_report(command, _inputs(args), results, failures), indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

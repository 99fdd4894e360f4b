"""Command-line interface: ``soliton-lab analyze|verify|scan|flow|catalog``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence, TextIO

from . import __version__
from .catalog import (CatalogError, Check, FamilyInstance, enumerate_families, get_family, instantiate, resolve,
                      verify_instance)
from .classify import classification_report
from .core import AlgebraFormatError, from_spec, to_spec, validate
from .curvature import curvature
from .flow import integrate, self_similarity_check, write_trajectory_csv
from .scalars import FLOAT, RATIONAL, FloatField, parse_scalar
from .scan import parse_grid, scan, thread_count

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


# ---------------------------------------------------------------------------
# helpers


def _params(text: str | None) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if not text:
        return out
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise InputError(f"--params entry {part!r} is not key=value")
        k, v = (s.strip() for s in part.split("=", 1))
        try:
            out[k] = parse_scalar(v)
        except (TypeError, ValueError) as exc:
            raise InputError(f"--params {k}: {exc}") from None
    return out


def _field(args: argparse.Namespace):
    if args.backend == "float":
        return FloatField(args.tol) if args.tol else FLOAT
    if args.backend == "rational":
        return RATIONAL
    return None


def _load_path(path: str, args: argparse.Namespace):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    if isinstance(spec, dict) and "algebra" in spec and "dim" not in spec:
        spec = spec["algebra"]
    try:
        a = from_spec(spec, _field(args))
    except AlgebraFormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    if args.backend == "float" and a.field.exact:
        a = a.as_float(args.tol)
    rep = validate(a)
    if not rep.ok:
        raise InputError(f"{path}: " + "; ".join(rep.messages))
    return a


def _instance(ref: str, params: dict[str, Any], args: argparse.Namespace) -> FamilyInstance:
    try:
        return instantiate(ref, params, args.backend, args.tol)
    except CatalogError as exc:
        raise InputError(str(exc)) from None


def _emit(obj: Any, out: TextIO) -> None:
    json.dump(obj, out, indent=2, sort_keys=False, default=_json_default)
    out.write("\n")


def _json_default(x: Any) -> Any:
    from fractions import Fraction

    import numpy as np

    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, tuple):
        return list(x)
    return str(x)


def _checks_dicts(checks: Sequence[Check]) -> list[dict[str, Any]]:
    return [{"field": c.name, "expected": c.expected, "actual": c.actual, "ok": c.ok, "anchor": c.anchor}
            for c in checks]


# ---------------------------------------------------------------------------
# analyze


def cmd_analyze(args: argparse.Namespace) -> int:
    if bool(args.path) == bool(args.catalog):
        raise InputError("analyze needs exactly one of a file path or --catalog ID")
    inst = None
    if args.catalog:
        inst = _instance(args.catalog, _params(args.params), args)
        a = inst.algebra
    else:
        a = _load_path(args.path, args)
    t = parse_scalar(args.t) if args.t is not None else None
    rep = classification_report(a, t=t)
    bundle = rep.to_dict()
    if inst is not None:
        bundle["catalog"] = {"id": inst.family.id, "params": {k: str(v) for k, v in inst.params.items()},
                             "checks": _checks_dicts(verify_instance(inst, rep))}
    if args.out == "json":
        _emit(bundle, sys.stdout)
    elif args.out == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in _flatten(bundle):
            w.writerow([k, v])
    else:
        _print_report_table(rep, inst)
    return EXIT_OK


def _flatten(d: Any, prefix: str = "") -> list[tuple[str, Any]]:
    if isinstance(d, dict):
        out = []
        for k, v in d.items():
            out.extend(_flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return out
    if isinstance(d, list) and d and isinstance(d[0], dict):
        out = []
        for i, v in enumerate(d):
            out.extend(_flatten(v, f"{prefix}[{i}]"))
        return out
    return [(prefix, json.dumps(d, default=_json_default) if isinstance(d, list) else d)]


def _print_report_table(rep, inst: FamilyInstance | None) -> None:
    s = rep.soliton
    w = rep.wave
    cv = rep.criticality
    fp = rep.fingerprint
    li = rep.left_invariant_soliton
    lines = [
        ("backend", rep.backend),
        ("signature", rep.summary["signature"]),
        ("tau", rep.summary["tau"]),
        ("|rho|^2", rep.summary["rho_norm2"]),
        ("unimodular", rep.unimodular),
        ("einstein", rep.einstein.einstein),
        ("locally symmetric", rep.locally_symmetric),
        ("algebraic soliton", f"{s.exists}" + (f" (c = {_show(s.c)}, {s.kind})" if s.exists else "")),
        ("left-invariant soliton", f"{li.exists}" + (f" (c = {_show(li.c)})" if li.exists else "")),
        ("wave", w.kind + (f", null direction {[_show(x) for x in w.null_direction]}" if w.null_direction is not None
                           else "")),
        ("ricci parallel", w.ricci_parallel),
        ("S-critical", cv.s_critical),
        ("F[t]-critical", "all t" if cv.critical_all_t else _show(cv.critical_t)),
        ("lie algebra", fp.label_guess + (f" {fp.label_params}" if fp.label_params else "")),
    ]
    if rep.structure_operator is not None:
        lines.append(("structure operator", rep.structure_operator.jordan_type))
    width = max(len(k) for k, _ in lines)
    for k, v in lines:
        print(f"{k:<{width}}  {v}")
    if inst is not None:
        checks = verify_instance(inst, rep)
        bad = [c for c in checks if not c.ok]
        print(f"{'expected':<{width}}  {len(checks) - len(bad)}/{len(checks)} checks pass")
        for c in bad:
            print(f"  FAIL {c.name}: expected {c.expected}, got {c.actual}")


def _show(x: Any) -> str:
    if x is None:
        return "none"
    from fractions import Fraction

    if isinstance(x, Fraction):
        return str(x)
    try:
        return f"{float(x):.10g}"
    except (TypeError, ValueError):
        return str(x)


# ---------------------------------------------------------------------------
# verify


def _verify_one(job: tuple[str, dict[str, Any], str | None]) -> tuple[str, list[dict[str, Any]]]:
    fid, params, backend = job
    inst = instantiate(fid, params, backend)
    checks = verify_instance(inst)
    return inst.key, [{"field": c.name, "expected": c.expected, "actual": c.actual, "ok": c.ok} for c in checks]


def cmd_verify(args: argparse.Namespace) -> int:
    if args.all:
        ids = [f.id for f in enumerate_families()]
    elif args.family:
        ids = []
        for ref in args.family:
            try:
                ids.extend(x for x in resolve(ref) if x not in ids)
            except CatalogError as exc:
                raise InputError(str(exc)) from None
    else:
        raise InputError("verify needs --all or --family ID")
    jobs = [(fid, pt, args.backend) for fid in ids for pt in get_family(fid).default_grid()]
    workers = thread_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    results.sort(key=lambda r: r[0])
    n_fail = sum(not all(c["ok"] for c in checks) for _, checks in results)
    if args.out == "json":
        _emit({"families": ids, "instances": [{"key": k, "ok": all(c["ok"] for c in ch), "checks": ch}
                                              for k, ch in results],
               "passed": len(results) - n_fail, "total": len(results)}, sys.stdout)
    elif args.out == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["instance", "field", "expected", "actual", "ok"])
        for k, ch in results:
            for c in ch:
                w.writerow([k, c["field"], _show_any(c["expected"]), _show_any(c["actual"]), c["ok"]])
    else:
        for k, ch in results:
            bad = [c for c in ch if not c["ok"]]
            print(f"{'PASS' if not bad else 'FAIL'}  {k}  ({len(ch) - len(bad)}/{len(ch)})")
            for c in bad:
                print(f"      {c['field']}: expected {_show_any(c['expected'])}, got {_show_any(c['actual'])}")
        print(f"{len(results) - n_fail}/{len(results)} instances pass")
    return EXIT_OK if n_fail == 0 else EXIT_FAIL


def _show_any(x: Any) -> str:
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_show_any(v) for v in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {_show_any(v)}" for k, v in x.items()) + "}"
    if isinstance(x, (bool, str)):
        return str(x)
    return _show(x)


# ---------------------------------------------------------------------------
# scan


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        get_family(args.family)
        axes = parse_grid(args.grid or "")
    except (CatalogError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if not axes:
        raise InputError("scan needs --grid name=lo:hi:num[,...]")
    fixed = _params(args.params)
    endpoints = None
    if args.endpoints:
        try:
            endpoints = [parse_scalar(e) for e in args.endpoints.split(",")]
        except (TypeError, ValueError) as exc:
            raise InputError(f"--endpoints: {exc}") from None
    try:
        res = scan(args.family, axes, fixed, args.backend, args.seed, endpoints, probe=not args.no_probe)
    except CatalogError as exc:
        raise InputError(str(exc)) from None
    names = list(axes)
    if args.out == "json":
        _emit({"summary": res.summary(),
               "rows": [{"params": {k: _show(v) for k, v in r.params.items()}, "exists": r.exists,
                         "c": _show(r.c), "tau": _show(r.tau), "t": _show(r.t), "kind": r.kind,
                         "einstein": r.einstein, "reducible": r.reducible, "strict": r.strict}
                        for r in res.rows]}, sys.stdout)
    elif args.out == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(names + ["exists", "c", "tau", "t", "kind", "einstein", "reducible", "strict"])
        for r in res.rows:
            w.writerow([_show(r.params[n]) for n in names] +
                       [r.exists, _show(r.c), _show(r.tau), _show(r.t), r.kind or "", r.einstein, r.reducible,
                        r.strict])
        _print_scan_summary(res, sys.stderr)
    else:
        _print_scan_summary(res, sys.stdout)
    return EXIT_OK


def _print_scan_summary(res, out: TextIO) -> None:
    print(f"{res.family}: {len(res.rows)} points, {len(res.strict_ts)} strict solitons", file=out)
    print(f"observed t in [{_show(res.t_min)}, {_show(res.t_max)}]  kinds {res.kinds()}", file=out)
    for e in res.endpoints:
        print(f"endpoint {_show(e.value)}: {e.verdict} (best gap {e.best_gap:.2e}"
              + (f", attained at {{{', '.join(f'{k}={_show(v)}' for k, v in e.attained_at.items())}}}"
                 if e.attained_at else "") + ")", file=out)


# ---------------------------------------------------------------------------
# flow


def cmd_flow(args: argparse.Namespace) -> int:
    if bool(args.path) == bool(args.catalog):
        raise InputError("flow needs exactly one of a file path or --catalog ID")
    if args.catalog:
        a = _instance(args.catalog, _params(args.params), args).algebra
    else:
        a = _load_path(args.path, args)
    try:
        traj = integrate(a.as_float(), float(args.T), float(args.h))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    c = args.c
    if c is None:
        from .classify import soliton_solve

        sol = soliton_solve(a, curvature(a))
        c = sol.c if sol.exists else None
    dev = self_similarity_check(traj, parse_scalar(c)) if c is not None else None
    info = {"steps": len(traj) - 1, "T": traj.times[-1], "h": traj.step, "degenerated": traj.degenerated,
            "message": traj.message, "c": _show(c) if c is not None else None, "self_similarity_deviation": dev}
    if args.out == "json":
        _emit(dict(info, trajectory=traj.to_dict()), sys.stdout)
    elif args.out == "csv":
        write_trajectory_csv(traj, sys.stdout)
        print(json.dumps(info, default=_json_default), file=sys.stderr)
    else:
        for k, v in info.items():
            print(f"{k:<26} {v}")
    return EXIT_FAIL if traj.degenerated else EXIT_OK


# ---------------------------------------------------------------------------
# catalog


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        fams = enumerate_families()
        if args.out == "json":
            _emit([{"id": f.id, "title": f.title, "dim": f.dim, "params": list(f.params),
                    "defaults": {k: _show(v) for k, v in f.defaults.items()},
                    "grid_size": len(f.default_grid())} for f in fams], sys.stdout)
        else:
            for f in fams:
                ps = ", ".join(f"{k}={_show(v)}" for k, v in f.defaults.items())
                print(f"{f.id:<20} {f.title}" + (f"  [{ps}]" if ps else ""))
        return EXIT_OK
    if not args.id:
        raise InputError("catalog get needs a family id")
    inst = _instance(args.id, _params(args.params), args)
    fam = inst.family
    if args.out == "json":
        _emit({"id": fam.id, "title": fam.title, "params": {k: _show(v) for k, v in inst.params.items()},
               "constraints": [text for text, _ in fam.constraints],
               "algebra": to_spec(inst.algebra),
               "expected": {k: _show_any(v) for k, v in inst.expected.populated().items()}}, sys.stdout)
    else:
        print(f"{fam.id}: {fam.title}")
        print("params: " + (", ".join(f"{k}={_show(v)}" for k, v in inst.params.items()) or "none"))
        for text, _ in fam.constraints:
            print(f"constraint: {text}")
        print("brackets:")
        for (i, j), vec in inst.algebra.brackets().items():
            print(f"  [e{i},e{j}] = {[_show(x) for x in vec]}")
        print("expected:")
        for k, v in inst.expected.populated().items():
            print(f"  {k} = {_show_any(v)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", choices=("rational", "float"), default=None,
                        help="scalar backend (default: rational when all inputs are rational)")
    common.add_argument("--tol", type=float, default=None, help="float backend zero tolerance")
    common.add_argument("--out", choices=("json", "table", "csv"), default="table")
    common.add_argument("--seed", type=int, default=None, help="grid jitter seed for scans")

    p = argparse.ArgumentParser(prog="soliton-lab",
                                description="Curvature and soliton analysis of left-invariant metrics on Lie groups.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", parents=[common], help="analyze an algebra file or catalog instance")
    an.add_argument("path", nargs="?")
    an.add_argument("--catalog", metavar="ID")
    an.add_argument("--params", metavar="K=V,...")
    an.add_argument("--t", default=None, help="also evaluate the F[t] Euler-Lagrange tensor at this t")
    an.set_defaults(func=cmd_analyze)

    ve = sub.add_parser("verify", parents=[common], help="check catalog expectations on default grids")
    ve.add_argument("--all", action="store_true")
    ve.add_argument("--family", action="append", metavar="ID")
    ve.set_defaults(func=cmd_verify)

    sc = sub.add_parser("scan", parents=[common], help="sweep a family and judge t-range endpoints")
    sc.add_argument("family")
    sc.add_argument("--grid", metavar="NAME=LO:HI:NUM,...")
    sc.add_argument("--params", metavar="K=V,...", help="fixed parameters")
    sc.add_argument("--endpoints", metavar="E1,E2,...", help="candidate endpoints to probe")
    sc.add_argument("--no-probe", action="store_true")
    sc.set_defaults(func=cmd_scan)

    fl = sub.add_parser("flow", parents=[common], help="integrate the Ricci flow with brackets fixed")
    fl.add_argument("path", nargs="?")
    fl.add_argument("--catalog", metavar="ID")
    fl.add_argument("--params", metavar="K=V,...")
    fl.add_argument("--T", default="0.1")
    fl.add_argument("--h", default="0.001")
    fl.add_argument("--c", default=None, help="soliton constant for the self-similarity check")
    fl.set_defaults(func=cmd_flow)

    ca = sub.add_parser("catalog", parents=[common], help="list families or show one instance")
    ca.add_argument("action", choices=("list", "get"))
    ca.add_argument("id", nargs="?")
    ca.add_argument("--params", metavar="K=V,...")
    ca.set_defaults(func=cmd_catalog)
    return p


_VALUE_OPTIONS = ("--t", "--c", "--T", "--h", "--tol", "--endpoints", "--params", "--grid")


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--t -1/4`` as ``--t=-1/4`` so argparse does not read ``-1/4`` as a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            if nxt is not None and nxt[:1] == "-" and nxt[1:2] in set("0123456789."):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_negative_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Parameter sweeps of catalog families and t-range endpoint probing.

A row is *strict* when an algebraic soliton exists, the metric is not
Einstein, ``tau != 0`` and the metric does not split off a flat line.  The
observed range of ``t = -c/tau`` is taken over strict rows.  Each candidate
endpoint ``E`` is judged by limit probing: a local search over strict
parameter points drives ``|t - E|`` down, recording witnesses within ``1e-3``
and ``1e-6``, and the best point is rationalized to test exact attainment.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

import numpy as np
from scipy.optimize import minimize

from .catalog import CatalogError, get_family, instantiate
from .classify import einstein_check, flat_line_factor, soliton_solve
from .curvature import curvature
from .scalars import parse_scalar

__all__ = ["ScanRow", "EndpointJudgment", "ScanResult", "parse_grid", "grid_points", "evaluate_point",
           "probe_endpoint", "scan", "PROBE_RADII", "thread_count"]

PROBE_RADII = (1e-3, 1e-6)


def thread_count(default: int = 1) -> int:
    """Worker cap from ``SOLITON_LAB_THREADS`` (at least one)."""
    raw = os.environ.get("SOLITON_LAB_THREADS", "")
    try:
        return max(1, int(raw)) if raw else default
    except ValueError:
        return default


@dataclass
class ScanRow:
    params: dict[str, Any]
    exists: bool
    c: Any
    tau: Any
    t: Any
    kind: str | None
    einstein: bool
    reducible: bool

    @property
    def strict(self) -> bool:
        return self.exists and not self.einstein and self.t is not None and not self.reducible

    def sort_key(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.params.values())


@dataclass
class EndpointJudgment:
    value: Any
    attained: bool
    verdict: str
    best_gap: float
    witnesses: dict[float, dict[str, float] | None] = field(default_factory=dict)
    attained_at: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"value": _js(self.value), "verdict": self.verdict, "attained": self.attained,
                "best_gap": self.best_gap, "attained_at": _jsd(self.attained_at),
                "witnesses": {f"{r:g}": w for r, w in self.witnesses.items()}}


@dataclass
class ScanResult:
    family: str
    axes: dict[str, list[Any]]
    fixed: dict[str, Any]
    rows: list[ScanRow]
    endpoints: list[EndpointJudgment]

    @property
    def strict_ts(self) -> list[Any]:
        return [r.t for r in self.rows if r.strict]

    @property
    def t_min(self) -> Any:
        ts = self.strict_ts
        return min(ts, key=float) if ts else None

    @property
    def t_max(self) -> Any:
        ts = self.strict_ts
        return max(ts, key=float) if ts else None

    def kinds(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.rows:
            if r.strict:
                out[r.kind] = out.get(r.kind, 0) + 1
        return out

    def summary(self) -> dict[str, Any]:
        return {"family": self.family, "points": len(self.rows), "strict": len(self.strict_ts),
                "t_min": _js(self.t_min), "t_max": _js(self.t_max), "kinds": self.kinds(),
                "endpoints": [e.to_dict() for e in self.endpoints]}


def _js(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if x is None or isinstance(x, (bool, str)):
        return x
    return float(x)


def _jsd(d: Mapping[str, Any] | None) -> dict[str, Any] | None:
    return None if d is None else {k: _js(v) for k, v in d.items()}


# ---------------------------------------------------------------------------
# grids


def parse_grid(text: str) -> dict[str, list[Any]]:
    """``name=lo:hi:num`` (inclusive, evenly spaced) or ``name=v1|v2|...``, comma separated."""
    axes: dict[str, list[Any]] = {}
    if not text:
        return axes
    for part in text.split(","):
        if "=" not in part:
            raise ValueError(f"grid axis {part!r} is not name=spec")
        name, spec = (s.strip() for s in part.split("=", 1))
        if "|" in spec:
            axes[name] = [parse_scalar(v) for v in spec.split("|")]
            continue
        bits = spec.split(":")
        if len(bits) != 3:
            raise ValueError(f"grid axis {name!r}: expected lo:hi:num or v1|v2|...")
        lo, hi, num = parse_scalar(bits[0]), parse_scalar(bits[1]), int(bits[2])
        if num < 1:
            raise ValueError(f"grid axis {name!r}: need at least one point")
        if num == 1:
            axes[name] = [lo]
        else:
            step = (hi - lo) / (num - 1)
            axes[name] = [lo + k * step for k in range(num)]
    return axes


def _jitter(axes: dict[str, list[Any]], seed: int) -> dict[str, list[Any]]:
    rng = np.random.default_rng(seed)
    out = {}
    for name, vals in axes.items():
        vals = list(vals)
        if len(vals) >= 3:
            step = min(abs(float(b) - float(a)) for a, b in zip(vals, vals[1:]))
            for k in range(1, len(vals) - 1):
                d = Fraction(rng.uniform(-step / 8, step / 8)).limit_denominator(1000)
                vals[k] = vals[k] + d if isinstance(vals[k], Fraction) else float(vals[k]) + float(d)
        out[name] = vals
    return out


def grid_points(fid: str, axes: Mapping[str, Sequence[Any]], fixed: Mapping[str, Any] | None = None,
                seed: int | None = None) -> list[dict[str, Any]]:
    """Admissible points of the product grid, deterministic order."""
    fam = get_family(fid)
    for name in list(axes) + list(fixed or {}):
        if name not in fam.defaults:
            raise CatalogError(f"{fid}: unknown parameter {name!r}")
    ax = _jitter(dict(axes), seed) if seed is not None else dict(axes)
    names = list(ax)
    pts = []
    for combo in itertools.product(*(ax[n] for n in names)):
        p = dict(fixed or {})
        p.update(zip(names, combo))
        try:
            instantiate(fid, p)
        except CatalogError:
            continue
        except ZeroDivisionError:
            continue
        pts.append(p)
    return pts


# ---------------------------------------------------------------------------
# evaluation


def evaluate_point(fid: str, params: Mapping[str, Any], backend: str | None = None) -> ScanRow:
    inst = instantiate(fid, params, backend)
    a = inst.algebra
    f = a.field
    pkg = curvature(a)
    sol = soliton_solve(a, pkg)
    ein = einstein_check(a, pkg).einstein
    t = None
    kind = None
    if sol.exists:
        kind = sol.kind
        if not f.is_zero(pkg.tau):
            t = -sol.c / pkg.tau
    return ScanRow(dict(inst.params), sol.exists, sol.c, pkg.tau, t, kind, ein,
                   flat_line_factor(a) is not None)


def _eval_star(args: tuple[str, dict[str, Any], str | None]) -> ScanRow:
    return evaluate_point(*args)


def _gap(row: ScanRow, E: Any) -> float:
    return abs(float(row.t) - float(E))


def probe_endpoint(fid: str, rows: Sequence[ScanRow], E: Any, free: Sequence[str],
                   fixed: Mapping[str, Any] | None = None, starts: int = 3) -> EndpointJudgment:
    """Judge whether ``E`` is attained, approached (open) or not approached."""
    fixed = dict(fixed or {})
    strict = [r for r in rows if r.strict]
    hits = [r for r in strict if (r.t == E if isinstance(r.t, Fraction) and isinstance(E, Fraction)
                                  else _gap(r, E) <= 1e-12)]
    witnesses: dict[float, dict[str, float] | None] = {r: None for r in PROBE_RADII}
    best: tuple[float, dict[str, float] | None] = (math.inf, None)
    for r in strict:
        g = _gap(r, E)
        for rad in PROBE_RADII:
            if g <= rad and witnesses[rad] is None:
                witnesses[rad] = {k: float(v) for k, v in r.params.items()}
        if g < best[0]:
            best = (g, {k: float(v) for k, v in r.params.items()})

    free = list(free)
    if free and strict:
        def objective(x: np.ndarray) -> float:
            nonlocal best
            p = dict(fixed)
            p.update({k: float(v) for k, v in zip(free, x)})
            try:
                row = evaluate_point(fid, p, "float")
            except (CatalogError, ZeroDivisionError, ValueError, np.linalg.LinAlgError):
                return 1e6
            if not row.strict:
                return 1e3
            g = _gap(row, E)
            for rad in PROBE_RADII:
                if g <= rad and witnesses[rad] is None:
                    witnesses[rad] = {k: float(v) for k, v in p.items()}
            if g < best[0]:
                best = (g, {k: float(v) for k, v in p.items()})
            return g

        seeds = sorted(strict, key=lambda r: _gap(r, E))[:starts]
        for r in seeds:
            x0 = np.array([float(r.params[k]) for k in free])
            simplex = [x0] + [x0 + 0.05 * max(1.0, abs(x0[i])) * np.eye(len(free))[i] for i in range(len(free))]
            minimize(objective, x0, method="Nelder-Mead",
                     options={"initial_simplex": np.array(simplex), "xatol": 1e-13, "fatol": 1e-15,
                              "maxiter": 600 * len(free), "maxfev": 900 * len(free)})
            if best[0] <= 1e-9:
                break

    attained_at = dict(hits[0].params) if hits else None
    if attained_at is None and best[1] is not None and best[0] <= 1e-6:
        attained_at = _exact_hit(fid, best[1], E, free, fixed)
    attained = attained_at is not None
    if attained:
        verdict = "closed"
    elif witnesses[PROBE_RADII[-1]] is not None:
        verdict = "open"
    else:
        verdict = "not_approached"
    return EndpointJudgment(E, attained, verdict, float(best[0]), witnesses, attained_at)


SNAP_DENOMINATORS = (1, 2, 3, 4, 6, 8, 12, 100, 1_000, 10_000)


def _exact_hit(fid: str, point: Mapping[str, float], E: Any, free: Sequence[str],
               fixed: Mapping[str, Any]) -> dict[str, Any] | None:
    """Rationalize a near-endpoint point with growing denominators and test ``t == E`` exactly.

    Coarse denominators catch attainment loci with small integer coefficients
    that a fine rationalization of a float point misses.
    """
    tried = set()
    for d in SNAP_DENOMINATORS:
        cand = dict(fixed)
        cand.update({k: Fraction(v).limit_denominator(d) for k, v in point.items() if k in free})
        key = tuple(sorted(cand.items()))
        if key in tried:
            continue
        tried.add(key)
        try:
            row = evaluate_point(fid, cand)
        except (CatalogError, ZeroDivisionError, ValueError):
            continue
        if row.strict and row.t == E:
            return dict(row.params)
    return None


def _snap(x: Any) -> Any:
    q = Fraction(float(x)).limit_denominator(12)
    return q if abs(float(q) - float(x)) <= 1e-2 * max(1.0, abs(float(x))) else x


def scan(fid: str, axes: Mapping[str, Sequence[Any]], fixed: Mapping[str, Any] | None = None,
         backend: str | None = None, seed: int | None = None, endpoints: Sequence[Any] | None = None,
         threads: int | None = None, probe: bool = True) -> ScanResult:
    """Evaluate the grid and judge the candidate t-endpoints.

    Without explicit ``endpoints`` the observed extremes, snapped to nearby
    simple fractions, are the candidates.
    """
    fixed = {k: parse_scalar(v) if isinstance(v, str) else v for k, v in (fixed or {}).items()}
    pts = grid_points(fid, axes, fixed, seed)
    workers = threads if threads is not None else thread_count()
    jobs = [(fid, p, backend) for p in pts]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_eval_star, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        rows = [_eval_star(j) for j in jobs]
    rows.sort(key=ScanRow.sort_key)
    res = ScanResult(fid, {k: list(v) for k, v in axes.items()}, fixed, rows, [])
    if probe:
        if endpoints is None:
            cands = [] if res.t_min is None else sorted({_snap(res.t_min), _snap(res.t_max)}, key=float)
        else:
            cands = [parse_scalar(e) if isinstance(e, str) else e for e in endpoints]
        res.endpoints = [probe_endpoint(fid, rows, E, list(axes), fixed) for E in cands]
    return res

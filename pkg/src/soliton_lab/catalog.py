"""Registry of parametric metric Lie algebra families with expected results.

Each :class:`FamilySpec` bundles a bracket/metric builder, admissible-range
constraints, a default verification grid and a function producing the
expected verdicts at given parameters.  Expected values are closed-form
expressions evaluated per instance; fields left as ``None`` are not checked.

Parameter names are ASCII: ``eta1``, ``g1`` (for gamma_1), ``k1`` (for
kappa_1), ``lam``, ``mu``, ``eps``, ``alpha``, ``beta``, ``delta``, ``nu``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from fractions import Fraction
from types import SimpleNamespace
from typing import Any, Callable, Iterable, Mapping

import numpy as np

from .core import MetricLieAlgebra, algebra, change_basis, null_pair_12, null_pair_34, orthonormal, scale_metric, validate
from .scalars import FLOAT, RATIONAL, Field, FloatField, parse_scalar

__all__ = [
    "CatalogError",
    "FamilySpec",
    "ExpectedRecord",
    "FamilyInstance",
    "Check",
    "enumerate_families",
    "family_ids",
    "get_family",
    "resolve",
    "instantiate",
    "grid_instances",
    "verify_instance",
    "HomothetyWitness",
    "HOMOTHETY_WITNESSES",
    "check_witness",
]

F = Fraction
H = F(1, 2)


class CatalogError(ValueError):
    """Unknown family, unknown parameter or violated parameter constraint."""


# ---------------------------------------------------------------------------
# records


@dataclass
class ExpectedRecord:
    """Expected verdicts.  ``None`` means "not asserted"."""

    unimodular: bool | None = None
    einstein: bool | None = None
    locally_symmetric: bool | None = None
    soliton_exists: bool | None = None
    soliton_c: Any = None
    tau: Any = None
    rho_norm2: Any = None
    t_zero_energy: Any = None
    critical_t: Any = None
    critical_all_t: bool | None = None
    never_critical: bool | None = None
    s_critical: bool | None = None
    wave: str | None = None
    null_direction: list[Any] | None = None
    ricci_parallel: bool | None = None
    lie_label: str | None = None
    lie_params: dict[str, Any] | None = None
    li_soliton: bool | None = None
    li_soliton_c: Any = None
    li_soliton_support: tuple[int, ...] | None = None
    jordan_type: str | None = None
    l_self_adjoint: bool | None = None
    anchors: dict[str, str] = field(default_factory=dict)

    @property
    def kind(self) -> str | None:
        if self.soliton_c is None:
            return None
        c = float(self.soliton_c)
        return "shrinking" if c > 0 else ("expanding" if c < 0 else "steady")

    def populated(self) -> dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)
                if f.name != "anchors" and getattr(self, f.name) is not None}


@dataclass(frozen=True)
class FamilySpec:
    id: str
    title: str
    params: tuple[str, ...]
    defaults: Mapping[str, Any]
    build: Callable[[SimpleNamespace], tuple[Any, dict[tuple[int, int], list[Any]]]]
    expect: Callable[[SimpleNamespace], dict[str, Any]]
    constraints: tuple[tuple[str, Callable[[SimpleNamespace], bool]], ...] = ()
    grid: tuple[Mapping[str, Any], ...] = ()
    dim: int = 4

    def check(self, p: SimpleNamespace) -> None:
        for text, pred in self.constraints:
            if not pred(p):
                raise CatalogError(f"{self.id}: parameter constraint violated: {text}")

    def default_grid(self) -> list[dict[str, Any]]:
        pts = self.grid or ({},)
        return [dict(self.defaults, **pt) for pt in pts]


@dataclass
class FamilyInstance:
    family: FamilySpec
    params: dict[str, Any]
    algebra: MetricLieAlgebra
    expected: ExpectedRecord

    @property
    def key(self) -> str:
        inner = ",".join(f"{k}={_fmt(self.params[k])}" for k in self.family.params)
        return f"{self.family.id}({inner})"


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    ok: bool
    anchor: str = ""


def _fmt(x: Any) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


# ---------------------------------------------------------------------------
# helpers for builders


def _sqrt(x: Any) -> Any:
    """Exact square root when ``x`` is a rational square, float otherwise."""
    if isinstance(x, (int, Fraction)):
        x = F(x)
        if x >= 0:
            n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
            if n * n == x.numerator and d * d == x.denominator:
                return F(n, d)
    return math.sqrt(float(x))


def _nz(x: Any, tol: float = 1e-12) -> bool:
    return abs(float(x)) > tol


def _z(x: Any, tol: float = 1e-12) -> bool:
    return not _nz(x, tol)


E4T = orthonormal(4, [4])
E3T = orthonormal(4, [3])
U12 = null_pair_12(4)
U34 = null_pair_34()
E3D = orthonormal(3, [3])


def _kappa_metric(kappa: Any) -> list[list[Any]]:
    """<v1,v1> = <v2,v2> = <v3,v4> = 1 and <v1,v2> = kappa."""
    return [[1, kappa, 0, 0], [kappa, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]


def _neg_one_or_one(x: Any) -> bool:
    return x in (1, -1)


_REGISTRY: dict[str, FamilySpec] = {}


def _family(id: str, title: str, params: str, defaults: Mapping[str, Any],
            build: Callable, expect: Callable, constraints: Iterable = (),
            grid: Iterable[Mapping[str, Any]] = (), dim: int = 4) -> None:
    names = tuple(params.split()) if params else ()
    fam = FamilySpec(id, title, names, {k: _coerce_param(v) for k, v in defaults.items()},
                     build, expect, tuple(constraints),
                     tuple({k: _coerce_param(v) for k, v in pt.items()} for pt in grid), dim)
    if set(fam.defaults) != set(names):
        raise AssertionError(f"{id}: defaults do not match parameter names")
    _REGISTRY[id] = fam


def _coerce_param(v: Any) -> Any:
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return F(v)
    if isinstance(v, str):
        return parse_scalar(v)
    return float(v)


# symmetric-rule shared by the diagonal almost abelian normal forms
_PAIRS = {(0, 1): "g1", (0, 2): "g2", (1, 2): "g3"}


def _diag_symmetric(eta: list[Any], coupling: Mapping[tuple[int, int], Any]) -> bool:
    """Local symmetry rule for ``ad`` diagonal plus couplings, up to relabelling."""
    if eta[0] == eta[1] == eta[2]:
        return True
    for k in range(3):
        i, j = (m for m in range(3) if m != k)
        free = _z(coupling[tuple(sorted((i, k)))]) and _z(coupling[tuple(sorted((j, k)))])
        if not free:
            continue
        if eta[i] == eta[j] and _nz(eta[i]) and _z(eta[k]):
            return True
        if _z(eta[i]) and _z(eta[j]) and _nz(eta[k]):
            return True
    return False


def _label(name: str, **params: Any) -> dict[str, Any]:
    return {"lie_label": name, "lie_params": params or None}


def _t0(c: Any, tau: Any) -> Any:
    """Zero-energy parameter ``-c/tau`` of a soliton."""
    return None if _z(tau) else -c / tau


def _soliton(c: Any, tau: Any, **extra: Any) -> dict[str, Any]:
    out = {"soliton_exists": True, "soliton_c": c, "tau": tau, "rho_norm2": c * tau,
           "t_zero_energy": _t0(c, tau)}
    if not _z(tau):
        out["critical_t"] = _t0(c, tau)
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# almost abelian, Riemannian R^3 (e4 timelike)


def _gR(p):
    return E4T, {(1, 4): [p.eta1, -p.g1, -p.g2, 0],
                 (2, 4): [p.g1, p.eta2, -p.g3, 0],
                 (3, 4): [p.g2, p.g3, p.eta3, 0]}


def _gR_expect(p):
    eta = [p.eta1, p.eta2, p.eta3]
    coup = {(0, 1): p.g1, (0, 2): p.g2, (1, 2): p.g3}
    return {"einstein": p.eta1 == p.eta2 == p.eta3, "locally_symmetric": _diag_symmetric(eta, coup),
            "unimodular": _z(p.eta1 + p.eta2 + p.eta3)}


_family("R3.g_R", "R^3 extension, Riemannian normal subalgebra, e4 timelike",
        "eta1 eta2 eta3 g1 g2 g3", dict(eta1=1, eta2=1, eta3=2, g1=0, g2=0, g3=0),
        _gR, _gR_expect,
        grid=[dict(), dict(eta3=1), dict(eta3=1, g1=1, g2=2, g3=-1), dict(eta3=0),
              dict(eta3=0, g1=3), dict(eta1=0, eta2=0, eta3=1, g1=2),
              dict(eta1=1, eta2=0, eta3=1), dict(eta1=1, eta2=2, eta3=3, g1=1, g2=1, g3=1),
              dict(eta3=0, g2=1)])

_family("R3.g_R.i", "filiform normal form on n4", "", {},
        lambda p: (E4T, {(1, 4): [0, 1, 0, 0], (2, 4): [0, 0, 1, 0]}),
        lambda p: dict(_soliton(F(3, 2), F(1)), einstein=False, locally_symmetric=False,
                       wave="none", unimodular=True, **_label("n4")))


def _R_ii_label(p):
    if p.g1 == 0:
        return _label("r4,mu,lambda", mu=1, **{"lambda": p.eta3})
    return _label("r'4,mu,lambda", mu=p.eta3 / p.g1, **{"lambda": 1 / p.g1})


_family("R3.g_R.ii", "shrinking family with a rotation block", "eta3 g1", dict(eta3=2, g1=0),
        lambda p: (E4T, {(1, 4): [1, -p.g1, 0, 0], (2, 4): [p.g1, 1, 0, 0], (3, 4): [0, 0, p.eta3, 0]}),
        lambda p: dict(_soliton(p.eta3 ** 2 + 2, 2 * (p.eta3 ** 2 + 2 * p.eta3 + 3)),
                       einstein=False, **_R_ii_label(p)),
        constraints=[("eta3 not in {0, 1}", lambda p: p.eta3 not in (0, 1)), ("g1 >= 0", lambda p: p.g1 >= 0)],
        grid=[dict(), dict(eta3=-1), dict(eta3=F(1, 2), g1=1), dict(eta3=-3, g1=2), dict(eta3=5, g1=F(1, 3))])

_family("R3.g_R.iii", "shrinking diagonal family", "eta2 eta3", dict(eta2=2, eta3=3),
        lambda p: (E4T, {(1, 4): [1, 0, 0, 0], (2, 4): [0, p.eta2, 0, 0], (3, 4): [0, 0, p.eta3, 0]}),
        lambda p: dict(_soliton(p.eta2 ** 2 + p.eta3 ** 2 + 1,
                                2 * (p.eta2 ** 2 + p.eta3 ** 2 + p.eta2 * p.eta3 + p.eta2 + p.eta3 + 1)),
                       einstein=False, **_label("r4,mu,lambda", mu=p.eta2, **{"lambda": p.eta3})),
        constraints=[("eta2 not in {0, 1}", lambda p: p.eta2 not in (0, 1)),
                     ("eta3 not in {0, 1}", lambda p: p.eta3 not in (0, 1)),
                     ("eta2 != eta3", lambda p: p.eta2 != p.eta3)],
        grid=[dict(), dict(eta2=-1, eta3=2), dict(eta2=F(1, 2), eta3=-F(1, 3)), dict(eta2=-2, eta3=-3)])


# ---------------------------------------------------------------------------
# almost abelian, Lorentzian R^3 (e3 timelike)


def _LIa(p):
    return E3T, {(1, 4): [p.eta1, -p.g1, p.g2, 0],
                 (2, 4): [p.g1, p.eta2, p.g3, 0],
                 (3, 4): [p.g2, p.g3, p.eta3, 0]}


def _LIa_expect(p):
    eta = [p.eta1, p.eta2, p.eta3]
    coup = {(0, 1): p.g1, (0, 2): p.g2, (1, 2): p.g3}
    return {"einstein": p.eta1 == p.eta2 == p.eta3, "locally_symmetric": _diag_symmetric(eta, coup)}


_family("R3.L.Ia", "R^3 extension, Lorentzian diagonalizable normal form", "eta1 eta2 eta3 g1 g2 g3",
        dict(eta1=1, eta2=1, eta3=2, g1=0, g2=0, g3=0), _LIa, _LIa_expect,
        grid=[dict(), dict(eta3=1, g1=1, g2=2, g3=3), dict(eta3=0, g1=2), dict(eta2=0, eta3=1, g2=3),
              dict(eta1=0, eta2=0, eta3=2, g1=1), dict(eta1=0, eta2=2, eta3=0, g2=1),
              dict(eta1=1, eta2=2, eta3=3, g1=1, g2=1, g3=1), dict(eta3=0, g3=1)])

_family("R3.L.Ia.i", "expanding family with a rotation block", "eta3 g1", dict(eta3=2, g1=0),
        lambda p: (E3T, {(1, 4): [1, -p.g1, 0, 0], (2, 4): [p.g1, 1, 0, 0], (3, 4): [0, 0, p.eta3, 0]}),
        lambda p: dict(_soliton(-(p.eta3 ** 2 + 2), -2 * (p.eta3 ** 2 + 2 * p.eta3 + 3)),
                       einstein=False, **_R_ii_label(p)),
        constraints=[("eta3 not in {0, 1}", lambda p: p.eta3 not in (0, 1)), ("g1 >= 0", lambda p: p.g1 >= 0)],
        grid=[dict(), dict(eta3=-1), dict(eta3=F(1, 2), g1=1), dict(eta3=-3, g1=2)])


def _Ia_ii_label(p):
    if p.g2 == 1:
        return _label("product")
    return _label("r4,mu,lambda", mu=(p.g2 + 1) / p.eta2, **{"lambda": (1 - p.g2) / p.eta2})


_family("R3.L.Ia.ii", "expanding family with a symmetric coupling", "eta2 g2", dict(eta2=2, g2=0),
        lambda p: (E3T, {(1, 4): [1, 0, p.g2, 0], (2, 4): [0, p.eta2, 0, 0], (3, 4): [p.g2, 0, 1, 0]}),
        lambda p: dict(_soliton(-(p.eta2 ** 2 + 2), -2 * (p.eta2 ** 2 + 2 * p.eta2 + 3)),
                       einstein=False, **_Ia_ii_label(p)),
        constraints=[("eta2 not in {0, 1}", lambda p: p.eta2 not in (0, 1)), ("g2 >= 0", lambda p: p.g2 >= 0)],
        grid=[dict(), dict(eta2=-2), dict(eta2=3, g2=F(1, 2)), dict(eta2=-1, g2=1), dict(eta2=F(1, 2), g2=2)])

_family("R3.L.Ia.iii", "expanding diagonal family", "eta2 eta3", dict(eta2=2, eta3=3),
        lambda p: (E3T, {(1, 4): [1, 0, 0, 0], (2, 4): [0, p.eta2, 0, 0], (3, 4): [0, 0, p.eta3, 0]}),
        lambda p: dict(_soliton(-(p.eta2 ** 2 + p.eta3 ** 2 + 1),
                                -2 * (p.eta2 ** 2 + p.eta3 ** 2 + p.eta2 * p.eta3 + p.eta2 + p.eta3 + 1)),
                       einstein=False, **_label("r4,mu,lambda", mu=p.eta2, **{"lambda": p.eta3})),
        constraints=[("eta2 not in {0, 1}", lambda p: p.eta2 not in (0, 1)),
                     ("eta3 not in {0, 1}", lambda p: p.eta3 not in (0, 1)),
                     ("eta2 != eta3", lambda p: p.eta2 != p.eta3)],
        grid=[dict(), dict(eta2=-1, eta3=2), dict(eta2=F(1, 2), eta3=-F(1, 3)), dict(eta2=-2, eta3=3)])


def _LIb(p):
    return E3T, {(1, 4): [p.eta, -p.g1, p.g2, 0],
                 (2, 4): [p.g1, p.delta, p.g3 - p.nu, 0],
                 (3, 4): [p.g2, p.g3 + p.nu, p.delta, 0]}


def _LIb_einstein(p):
    if any(_nz(x) for x in (p.g1, p.g2, p.g3)):
        return False
    r = 2 / math.sqrt(3) * float(p.nu)
    return abs(float(p.eta) + 2 * float(p.delta)) < 1e-12 and (
        abs(float(p.eta) - r) < 1e-12 or abs(float(p.eta) + r) < 1e-12)


_family("R3.L.Ib", "R^3 extension, Lorentzian complex normal form", "eta delta nu g1 g2 g3",
        dict(eta=1, delta=0, nu=1, g1=0, g2=0, g3=0), _LIb,
        lambda p: {"einstein": _LIb_einstein(p), "locally_symmetric": False},
        constraints=[("nu != 0", lambda p: p.nu != 0)],
        grid=[dict(), dict(eta=2 / math.sqrt(3), delta=-1 / math.sqrt(3)), dict(g1=1, g2=2, g3=-1),
              dict(eta=0, delta=1, nu=2), dict(eta=-2 / math.sqrt(3), delta=1 / math.sqrt(3))])


def _Ib_i_expect(p):
    c = 2 - p.eta ** 2 - 2 * p.delta ** 2
    tau = -2 * ((p.eta + p.delta) ** 2 + 2 * p.delta ** 2 - 1)
    out = dict(_soliton(c, tau), einstein=False, locally_symmetric=False,
               **_label("r'4,mu,lambda", mu=p.eta, **{"lambda": p.delta}))
    if _z(tau):
        out.update(s_critical=True, rho_norm2=0)
    return out


_family("R3.L.Ib.i", "complex normal form with nu = 1 and no couplings", "eta delta", dict(eta=1, delta=1),
        lambda p: _LIb(SimpleNamespace(eta=p.eta, delta=p.delta, nu=1, g1=0, g2=0, g3=0)),
        _Ib_i_expect,
        constraints=[("eta != 0", lambda p: p.eta != 0),
                     ("(eta, delta) != +-(2/sqrt3, -1/sqrt3)",
                      lambda p: not _LIb_einstein(SimpleNamespace(eta=p.eta, delta=p.delta, nu=1, g1=0, g2=0, g3=0)))],
        grid=[dict(), dict(eta=1, delta=0), dict(eta=1, delta=-F(2, 3)), dict(eta=F(4, 3), delta=F(1, 3)),
              dict(eta=F(1, 2), delta=F(1, 2)), dict(eta=-1, delta=F(1, 2)), dict(eta=2, delta=1)])

_family("R3.L.Ib.ii", "nilpotent complex normal form", "", {},
        lambda p: (E3T, {(1, 4): [0, 0, 1, 0], (2, 4): [0, 0, -1, 0], (3, 4): [1, 1, 0, 0]}),
        lambda p: dict(_soliton(F(3), F(2)), einstein=False, **_label("n4")))


def _LII(p):
    return U12, {(1, 4): [p.eta1 + p.g1, p.eps, -p.g3, 0],
                 (2, 4): [0, p.eta1 - p.g1, -p.g2, 0],
                 (3, 4): [p.g2, p.g3, p.eta2, 0]}


def _LII_expect(p):
    ein = p.eta2 == p.eta1 and p.g1 == -F(3, 2) * p.eta1 and p.g2 == 0
    sym = (p.eta1 == p.eta2 == p.g1 == p.g2 == 0) or (p.eta2 == p.g2 == p.g3 == 0 and p.g1 == -p.eta1 != 0)
    return {"einstein": ein, "locally_symmetric": sym}


_family("R3.L.II", "R^3 extension, Lorentzian type II normal form", "eps eta1 eta2 g1 g2 g3",
        dict(eps=1, eta1=1, eta2=2, g1=0, g2=0, g3=0), _LII, _LII_expect,
        constraints=[("eps in {1, -1}", lambda p: _neg_one_or_one(p.eps))],
        grid=[dict(), dict(eta1=2, eta2=2, g1=-3), dict(eta1=0, eta2=0, g3=1),
              dict(eta1=1, eta2=0, g1=-1), dict(eps=-1, eta1=1, eta2=0, g1=-1), dict(g1=1, g2=1, g3=1),
              dict(eta1=1, eta2=0, g1=-1, g3=1)])


_family("R3.L.II.i", "type II family with a Jordan block", "eta1 eta2", dict(eta1=1, eta2=2),
        lambda p: (U12, {(1, 4): [p.eta1, 1, 0, 0], (2, 4): [0, p.eta1, 0, 0], (3, 4): [0, 0, p.eta2, 0]}),
        lambda p: dict(_soliton(-(2 * p.eta1 ** 2 + p.eta2 ** 2),
                                -2 * (3 * p.eta1 ** 2 + p.eta2 ** 2 + 2 * p.eta1 * p.eta2)),
                       einstein=False, **_label("r4,lambda", **{"lambda": p.eta1 / p.eta2})),
        constraints=[("eta2 != 0", lambda p: p.eta2 != 0)],
        grid=[dict(), dict(eta1=0, eta2=1), dict(eta1=-1, eta2=2), dict(eta1=3, eta2=-1), dict(eta1=1, eta2=1)])


def _II_ii_label(p):
    if 4 * p.eta1 + p.eta2 == 0:
        return _label("product")
    return _label("r4,mu,lambda", mu=-2, **{"lambda": -(4 * p.eta1 + p.eta2) / p.eta2})


_family("R3.L.II.ii", "type II diagonalizable family", "eta1 eta2", dict(eta1=1, eta2=3),
        lambda p: (U12, {(1, 4): [-p.eta2 / 2, 1, 0, 0], (2, 4): [0, (4 * p.eta1 + p.eta2) / 2, 0, 0],
                         (3, 4): [0, 0, p.eta2, 0]}),
        lambda p: dict(_soliton(-(2 * p.eta1 ** 2 + p.eta2 ** 2),
                                -2 * (3 * p.eta1 ** 2 + p.eta2 ** 2 + 2 * p.eta1 * p.eta2)),
                       einstein=False, **_II_ii_label(p)),
        constraints=[("eta2 != 0", lambda p: p.eta2 != 0), ("eta2 != eta1", lambda p: p.eta2 != p.eta1),
                     ("eta2 + 2 eta1 != 0", lambda p: p.eta2 + 2 * p.eta1 != 0)],
        grid=[dict(), dict(eta1=-1, eta2=4), dict(eta1=0, eta2=1), dict(eta1=2, eta2=-1), dict(eta1=1, eta2=4)])

_family("R3.L.II.iii", "type II family with a triple eigenvalue", "eta1 g3", dict(eta1=1, g3=1),
        lambda p: (U12, {(1, 4): [p.eta1, 1, -p.g3, 0], (2, 4): [0, p.eta1, 0, 0], (3, 4): [0, p.g3, p.eta1, 0]}),
        lambda p: dict(_soliton(-3 * p.eta1 ** 2, -12 * p.eta1 ** 2), einstein=False, **_label("r4")),
        constraints=[("eta1 != 0", lambda p: p.eta1 != 0), ("g3 != 0", lambda p: p.g3 != 0)],
        grid=[dict(), dict(eta1=2, g3=-1), dict(eta1=-F(1, 2), g3=3)])


def _LIII(p):
    return U12, {(1, 4): [p.eta + p.g1, 0, -p.g3, 0],
                 (2, 4): [0, p.eta - p.g1, -(p.g2 - 1), 0],
                 (3, 4): [p.g2 + 1, p.g3, p.eta, 0]}


_family("R3.L.III", "R^3 extension, Lorentzian type III normal form", "eta g1 g2 g3",
        dict(eta=1, g1=0, g2=0, g3=0), _LIII,
        lambda p: {"einstein": p.g1 == 3 * p.eta and p.g2 == 0 and p.g3 == 0,
                   "locally_symmetric": p.eta == p.g1 == p.g3 == 0 and p.g2 == 1},
        grid=[dict(), dict(g1=3), dict(eta=0, g2=1), dict(eta=0, g2=2), dict(eta=1, g1=0, g2=0, g3=1),
              dict(eta=0, g2=1, g3=1), dict(eta=2, g1=1, g2=3, g3=-1)])

_family("R3.L.III.i", "type III expanding family", "eta", dict(eta=1),
        lambda p: _LIII(SimpleNamespace(eta=p.eta, g1=0, g2=0, g3=0)),
        lambda p: dict(_soliton(-3 * p.eta ** 2, -12 * p.eta ** 2), einstein=False, locally_symmetric=False,
                       **_label("r4")),
        constraints=[("eta != 0", lambda p: p.eta != 0)],
        grid=[dict(), dict(eta=-2), dict(eta=F(1, 3))])


def _LIII_pw_label(p):
    return _label("h3xR") if p.g2 in (1, -1) else _label("n4")


_family("R3.L.III.pw", "type III plane waves on nilpotent groups", "g2", dict(g2=2),
        lambda p: _LIII(SimpleNamespace(eta=0, g1=0, g2=p.g2, g3=0)),
        lambda p: dict(soliton_exists=True, soliton_c=0, wave="plane_wave", null_direction=[1, 0, 0, 0],
                       ricci_parallel=True, einstein=False, locally_symmetric=p.g2 == 1,
                       **_LIII_pw_label(p)),
        constraints=[("g2 != 0", lambda p: p.g2 != 0)],
        grid=[dict(), dict(g2=1), dict(g2=-1), dict(g2=-3), dict(g2=F(1, 2))])


# ---------------------------------------------------------------------------
# almost abelian, degenerate R^3


def _gD(p):
    return U34, {(1, 4): [p.g1, -p.g2, p.g3, 0],
                 (2, 4): [p.g2, p.g4, p.g5, 0],
                 (3, 4): [p.g6, p.g7, p.g8, 0]}


def _gD_sym(p):
    if p.g6 != 0 or p.g7 != 0:
        return False
    g1, g2, g4, g8 = p.g1, p.g2, p.g4, p.g8
    return ((g2 == 0 and g8 == 0)
            or (g2 == 0 and g1 == 0 and (g4 - g8) * g4 == 0 and g8 != 0)
            or (g2 == 0 and (g1 - g4) * g4 == 0 and g8 == g1 != 0)
            or (g2 != 0 and g1 == g4 and (g1 - g8) * g1 * g8 == 0))


def _gD_expect(p):
    flat_ric = p.g6 == 0 and p.g7 == 0
    ein = flat_ric and p.g1 ** 2 + p.g4 ** 2 - (p.g1 + p.g4) * p.g8 == 0
    out = {"einstein": ein, "locally_symmetric": _gD_sym(p), "tau": (p.g6 ** 2 + p.g7 ** 2) / 2,
           "soliton_exists": flat_ric}
    if flat_ric:
        out["soliton_c"] = 0
        if not ein:
            out.update(wave="plane_wave", null_direction=[0, 0, 1, 0], ricci_parallel=p.g8 == 0)
    return out


_D_PARAMS = "g1 g2 g3 g4 g5 g6 g7 g8"
_D_DEFAULTS = dict(g1=1, g2=0, g3=0, g4=2, g5=0, g6=0, g7=0, g8=1)

_family("R3.g_D", "R^3 extension, degenerate normal subalgebra", _D_PARAMS, _D_DEFAULTS, _gD, _gD_expect,
        grid=[dict(), dict(g6=1), dict(g7=2, g2=1), dict(g8=0), dict(g1=1, g4=1, g8=2),
              dict(g1=0, g2=0, g4=1, g8=1), dict(g1=2, g4=0, g8=2, g2=0), dict(g1=1, g4=1, g2=1, g8=0),
              dict(g1=1, g4=1, g2=1, g8=3), dict(g1=1, g2=1, g3=1, g4=2, g5=1, g6=1, g7=1, g8=1)])


def _pw_corpus(id: str, title: str, params: str, defaults: Mapping[str, Any],
               xi: Callable, label: Callable, constraints: Iterable = (), grid: Iterable = ()) -> None:
    def build(p):
        g1, g2, g3, g4, g5, g8 = xi(p)
        return _gD(SimpleNamespace(g1=g1, g2=g2, g3=g3, g4=g4, g5=g5, g6=0, g7=0, g8=g8))

    def expect(p):
        g1, g2, g3, g4, g5, g8 = xi(p)
        return dict(soliton_exists=True, soliton_c=0, wave="plane_wave", null_direction=[0, 0, 1, 0],
                    einstein=False, ricci_parallel=_z(g8), **label(p))

    _family(id, title, params, defaults, build, expect, constraints, grid)


def _r4ml_xi(p):
    if p.mu ** 2 - p.lam * p.mu - p.lam + 1 != 0:
        return (-1, 0, 0, -p.mu, 0, -p.lam)
    return (-p.mu, 0, 0, -p.lam, 0, -1)


_pw_corpus("R3.g_D.r3xR", "plane wave on r3 x R", "", {}, lambda p: (-2, -1, 1, 0, 0, 0),
           lambda p: _label("product"))
_pw_corpus("R3.g_D.r3lxR", "plane waves on r3,lambda x R", "lam", dict(lam=2),
           lambda p: (-1, 0, 0, -p.lam, 0, 0), lambda p: _label("product"),
           [("lam not in {0, -1}", lambda p: p.lam not in (0, -1))], [dict(), dict(lam=F(1, 2)), dict(lam=-3)])
_pw_corpus("R3.g_D.r3plxR", "plane waves on r'3,lambda x R", "lam", dict(lam=1),
           lambda p: (-p.lam + 1, math.sqrt(2), 0, -p.lam - 1, 0, 0), lambda p: _label("product"),
           [("lam != 0", lambda p: p.lam != 0)], [dict(), dict(lam=-2), dict(lam=F(1, 2))])
_pw_corpus("R3.g_D.r4", "plane wave on r4", "", {}, lambda p: (-2, -1, 1, 0, 0, -1), lambda p: _label("r4"))
_pw_corpus("R3.g_D.r4l", "plane waves on r4,lambda", "lam", dict(lam=2),
           lambda p: (-p.lam, 0, -1, -1, 0, -p.lam), lambda p: _label("r4,lambda", **{"lambda": p.lam}),
           [("lam != 1", lambda p: p.lam != 1), ("lam != 0", lambda p: p.lam != 0)],
           [dict(), dict(lam=-1), dict(lam=F(1, 3))])
_pw_corpus("R3.g_D.r41", "plane wave on r4,1", "", {}, lambda p: (-2, 1, 0, 0, 0, -1),
           lambda p: _label("r4,lambda", **{"lambda": 1}))
_pw_corpus("R3.g_D.r4ml", "plane waves on r4,mu,lambda", "mu lam", dict(mu=2, lam=3), _r4ml_xi,
           lambda p: _label("r4,mu,lambda", mu=p.mu, **{"lambda": p.lam}),
           [("(mu, lam) != (1, 1)", lambda p: (p.mu, p.lam) != (1, 1)),
            ("mu lam != 0", lambda p: p.mu * p.lam != 0)],
           [dict(), dict(mu=-1, lam=F(1, 2)), dict(mu=2, lam=F(5, 3)), dict(mu=1, lam=2)])
_pw_corpus("R3.g_D.r4pml", "plane waves on r'4,mu,lambda", "mu lam", dict(mu=1, lam=-F(1, 4)),
           lambda p: (-p.mu - 2 * p.lam, _sqrt((p.lam + p.mu) ** 2 + 1), 0, p.mu, 0, -p.mu),
           lambda p: _label("r'4,mu,lambda", mu=p.mu, **{"lambda": p.lam}),
           [("mu != 0", lambda p: p.mu != 0)],
           [dict(), dict(mu=2, lam=1), dict(mu=-1, lam=F(1, 2))])


# ---------------------------------------------------------------------------
# Heisenberg extensions


def _H3R(p):
    return E4T, {(1, 2): [0, 0, p.l3, 0],
                 (1, 4): [p.g1, -p.g2, p.g3, 0],
                 (2, 4): [p.g2, p.g4, p.g5, 0],
                 (3, 4): [0, 0, p.g1 + p.g4, 0]}


def _H3R_expect(p):
    out = {"einstein": False, "locally_symmetric": False}
    if not (p.g4 == -p.g1 and p.g1 ** 2 == p.g2 ** 2):
        out["soliton_exists"] = False
    return out


_H3_PARAMS = "l3 g1 g2 g3 g4 g5"
_family("H3.R", "Heisenberg extension, Riemannian normal subalgebra", _H3_PARAMS,
        dict(l3=1, g1=1, g2=0, g3=0, g4=1, g5=0), _H3R, _H3R_expect,
        constraints=[("l3 != 0", lambda p: p.l3 != 0)],
        grid=[dict(), dict(g2=1, g3=1, g5=-1), dict(l3=2, g1=1, g4=-1, g2=0), dict(g1=0, g4=0, g3=1),
              dict(g1=1, g2=1, g4=-1, g3=2, g5=1)])


def _H3Iap(p):
    return E3T, {(1, 2): [0, 0, -p.l3, 0],
                 (1, 4): [p.g1, -p.g2, p.g3, 0],
                 (2, 4): [p.g2, p.g4, p.g5, 0],
                 (3, 4): [0, 0, p.g1 + p.g4, 0]}


_family("H3.L.Ia+", "Heisenberg extension, Lorentzian, rank one with definite kernel", _H3_PARAMS,
        dict(l3=1, g1=1, g2=0, g3=0, g4=1, g5=0), _H3Iap, _H3R_expect,
        constraints=[("l3 != 0", lambda p: p.l3 != 0)],
        grid=[dict(), dict(g2=1, g3=1, g5=-1), dict(l3=2, g1=1, g4=-1), dict(g1=0, g4=0, g3=1),
              dict(g1=1, g2=1, g4=-1, g3=2, g5=1)])


def _H3Iam(p):
    return E3T, {(1, 3): [0, -p.l2, 0, 0],
                 (1, 4): [p.g1, p.g2, p.g3, 0],
                 (2, 4): [0, p.g4, 0, 0],
                 (3, 4): [p.g5, p.g6, -(p.g1 - p.g4), 0]}


def _H3Iam_expect(p):
    out = {"einstein": False, "locally_symmetric": False}
    almost_abelian = p.g4 == 0 and p.g1 ** 2 + p.g3 * p.g5 == 0
    if not almost_abelian:
        zeta = 4 * (p.g1 ** 2 + p.g4 ** 2 - p.g1 * p.g4) + 3 * p.l2 ** 2 - 4 * p.g3 ** 2
        out["soliton_exists"] = p.g2 == 0 and p.g6 == 0 and p.g5 == -p.g3 and _z(zeta)
    return out


_family("H3.L.Ia-", "Heisenberg extension, Lorentzian, rank one with Lorentzian kernel",
        "l2 g1 g2 g3 g4 g5 g6", dict(l2=1, g1=H, g2=0, g3=1, g4=0, g5=-1, g6=0), _H3Iam, _H3Iam_expect,
        constraints=[("l2 != 0", lambda p: p.l2 != 0)],
        grid=[dict(), dict(g3=2), dict(g1=H, g4=2, g3=2, g5=-2), dict(g2=1, g6=1, g4=1),
              dict(l2=2, g1=1, g4=0, g3=2, g5=-2), dict(g1=1, g4=1, g3=1, g5=1)])


def _H3Iam_thm_expect(p):
    s = 2 * p.g4 ** 2 - 1
    tau = -2 * s
    r2 = -3 * s
    lam = -float(p.g4) / math.sqrt(3 * (float(p.g4) ** 2 + 1))
    out = dict(soliton_exists=True, soliton_c=F(3, 2), tau=tau, rho_norm2=r2, einstein=False,
               locally_symmetric=False, **_label("d'4,lambda", **{"lambda": lam}))
    if _z(s):
        out.update(s_critical=True, never_critical=True)
    else:
        out.update(t_zero_energy=-r2 / tau ** 2, critical_t=-r2 / tau ** 2)
    return out


_family("H3.L.Ia-.thm", "shrinking Heisenberg extensions on d'4,lambda", "g1 g4", dict(g1=H, g4=0),
        lambda p: _H3Iam(SimpleNamespace(l2=1, g1=p.g1, g2=0, g4=p.g4, g6=0,
                                         g3=_sqrt(4 * (p.g1 ** 2 + p.g4 ** 2 - p.g1 * p.g4) + 3) / 2,
                                         g5=-_sqrt(4 * (p.g1 ** 2 + p.g4 ** 2 - p.g1 * p.g4) + 3) / 2)),
        _H3Iam_thm_expect,
        grid=[dict(), dict(g1=H, g4=2), dict(g1=0, g4=1), dict(g1=1, g4=1 / math.sqrt(2)),
              dict(g1=0, g4=-1 / math.sqrt(2)), dict(g1=2, g4=-1)])


def _H3II(p):
    return U12, {(1, 3): [0, -p.eps, 0, 0],
                 (1, 4): [p.g1, p.g2, p.g3, 0],
                 (2, 4): [0, p.g4, 0, 0],
                 (3, 4): [p.g5, p.g6, -(p.g1 - p.g4), 0]}


def _H3II_expect(p):
    ein = ((p.g1 == p.g4 == p.g5 == 0 and p.g6 in (p.g3, -p.g3))
           or (p.g4 == 3 * p.g1 != 0 and p.g2 == p.g5 == 0 and p.g6 == -p.g3))
    sym = ((p.g1 == p.g4 == p.g5 == 0 and p.g3 * (p.g3 + p.g6) == 0)
           or (p.g4 == 3 * p.g1 != 0 and p.g2 == p.g5 == 0 and p.g6 == -p.g3))
    out = {"einstein": ein, "locally_symmetric": sym}
    if not (p.g4 == 0 and p.g1 ** 2 + p.g3 * p.g5 == 0):
        out["soliton_exists"] = ein or (p.g5 == 0 and p.g4 == -p.g1 != 0 and p.g3 == 3 * p.g6)
    return out


_family("H3.L.II", "Heisenberg extension, Lorentzian, two-step nilpotent structure operator",
        "eps g1 g2 g3 g4 g5 g6", dict(eps=1, g1=1, g2=0, g3=3, g4=-1, g5=0, g6=1), _H3II, _H3II_expect,
        constraints=[("eps in {1, -1}", lambda p: _neg_one_or_one(p.eps))],
        grid=[dict(), dict(eps=-1), dict(g3=1), dict(g4=3, g3=1, g6=-1), dict(g4=3, g3=1, g6=-1, g2=1),
              dict(g1=0, g4=0, g5=0, g3=1, g6=-1), dict(g1=0, g4=0, g5=0, g3=2, g6=1),
              dict(g1=1, g4=2, g5=1)])

_family("H3.L.II.thm", "expanding Heisenberg extensions on d4,2", "g1 g2 g6", dict(g1=1, g2=0, g6=0),
        lambda p: _H3II(SimpleNamespace(eps=1, g1=p.g1, g2=p.g2, g3=3 * p.g6, g4=-p.g1, g5=0, g6=p.g6)),
        lambda p: dict(_soliton(-4 * p.g1 ** 2, -8 * p.g1 ** 2), einstein=False,
                       **_label("d4,lambda", **{"lambda": 2})),
        constraints=[("g1 != 0", lambda p: p.g1 != 0)],
        grid=[dict(), dict(g1=2, g2=1, g6=1), dict(g1=-1, g2=-3, g6=F(1, 2))])


def _D0(p):
    return U34, {(1, 2): [0, 0, p.l1, 0],
                 (1, 4): [p.g1, -p.g2, p.g3, 0],
                 (2, 4): [p.g2, p.g4, p.g5, 0],
                 (3, 4): [0, 0, p.g1 + p.g4, 0]}


def _D0_expect(p):
    ein = 4 * p.g1 * p.g4 + p.l1 ** 2 == 0
    par = p.g1 + p.g4 == 0 or ein
    sym = (par and p.g2 == p.l1 / 2) or (p.g2 != p.l1 / 2 and p.g1 == p.g4 == 0)
    out = {"einstein": ein, "locally_symmetric": sym, "soliton_exists": True, "soliton_c": 0}
    if not ein:
        out.update(wave="plane_wave", null_direction=[0, 0, 1, 0], ricci_parallel=par)
    return out


_D0_PARAMS = "l1 g1 g2 g3 g4 g5"
_family("H3.D0", "Heisenberg extension, degenerate with null derived algebra", _D0_PARAMS,
        dict(l1=1, g1=1, g2=0, g3=0, g4=1, g5=0), _D0, _D0_expect,
        constraints=[("l1 != 0", lambda p: p.l1 != 0)],
        grid=[dict(), dict(g4=-1), dict(g4=-1, g2=H), dict(g1=0, g4=0, g2=1), dict(g1=0, g4=0, g2=H),
              dict(g1=1, g4=-F(1, 4)), dict(l1=2, g1=1, g4=2, g2=1, g3=1, g5=-1), dict(g1=2, g4=-2, g3=1, g5=1)])


def _D0_corpus(id: str, title: str, params: str, defaults: Mapping[str, Any], xi: Callable,
               label: Callable, constraints: Iterable = (), grid: Iterable = ()) -> None:
    def build(p):
        g1, g2, g3, g4, g5 = xi(p)
        return _D0(SimpleNamespace(l1=1, g1=g1, g2=g2, g3=g3, g4=g4, g5=g5))

    def expect(p):
        g1, g2, g3, g4, g5 = xi(p)
        return dict(soliton_exists=True, soliton_c=0, wave="plane_wave", null_direction=[0, 0, 1, 0],
                    einstein=False, ricci_parallel=_z(g1 + g4), **label(p))

    _family(id, title, params, defaults, build, expect, constraints, grid)


_D0_corpus("H3.D0.n4", "plane wave on n4", "", {}, lambda p: (1, -1, 0, -1, 0), lambda p: _label("n4"))
_D0_corpus("H3.D0.h3xR", "plane wave on h3 x R", "", {}, lambda p: (0, 0, 0, 0, 0), lambda p: _label("h3xR"))
_D0_corpus("H3.D0.d4", "plane wave on d4", "", {}, lambda p: (-1, 0, 0, 1, 0), lambda p: _label("d4"))
_D0_corpus("H3.D0.h4", "plane wave on h4", "", {}, lambda p: (-2, 1, 0, 0, 0), lambda p: _label("h4"))
_D0_corpus("H3.D0.d4l", "plane waves on d4,lambda", "lam", dict(lam=2),
           lambda p: (-p.lam, 0, 0, p.lam - 1, 0),
           lambda p: _label("d4,lambda", **{"lambda": p.lam}),
           [("lam != 0, 1", lambda p: p.lam not in (0, 1)),
            ("lam != (1 +- sqrt2)/2", lambda p: _nz(p.lam ** 2 - p.lam - F(1, 4)))],
           [dict(), dict(lam=-1), dict(lam=F(1, 3)), dict(lam=H)])
_D0_corpus("H3.D0.d4l.special", "plane wave on d4,lambda at lambda = (1 + sqrt2)/2", "", {},
           lambda p: (-(1 + math.sqrt(6)) / 2, 1, 0, -(1 - math.sqrt(6)) / 2, 0),
           lambda p: _label("d4,lambda", **{"lambda": (1 + math.sqrt(2)) / 2}))
_D0_corpus("H3.D0.d4pl", "plane waves on d'4,lambda", "lam", dict(lam=1),
           lambda p: (-p.lam, -1, 0, -p.lam, 0),
           lambda p: _label("d'4,lambda", **{"lambda": p.lam}),
           [("lam != 0", lambda p: p.lam != 0)], [dict(), dict(lam=-2), dict(lam=F(1, 2))])


def _Dp(p):
    return U34, {(1, 4): [p.g1, 0, 0, 0],
                 (2, 3): [p.l3, 0, 0, 0],
                 (2, 4): [p.g2, p.g3, p.g4, 0],
                 (3, 4): [p.g5, p.g6, p.g1 - p.g3, 0]}


def _Dp_expect(p):
    out = {"einstein": False, "locally_symmetric": False}
    if not (p.g1 == 0 and p.g3 ** 2 + p.g4 * p.g6 == 0):
        out["soliton_exists"] = False
    return out


_family("H3.D+", "Heisenberg extension, degenerate with spacelike derived algebra",
        "l3 g1 g2 g3 g4 g5 g6", dict(l3=1, g1=1, g2=0, g3=0, g4=0, g5=0, g6=0), _Dp, _Dp_expect,
        constraints=[("l3 != 0", lambda p: p.l3 != 0)],
        grid=[dict(), dict(g1=0, g3=1), dict(g1=0, g4=1, g6=1), dict(g1=2, g2=1, g3=1, g4=-1, g5=1, g6=2),
              dict(g1=0, g3=1, g4=1, g6=-1)])


# ---------------------------------------------------------------------------
# homogeneous plane waves


def _PWa(p):
    return U34, {(1, 2): [0, 0, 1, 0],
                 (1, 4): [p.k1, -p.k2, p.k3, 0],
                 (2, 4): [p.k2, p.k4, p.k5, 0],
                 (3, 4): [0, 0, p.k1 + p.k4, 0]}


_family("PW.a", "plane waves on Heisenberg extensions", "k1 k2 k3 k4 k5",
        dict(k1=1, k2=0, k3=0, k4=-1, k5=0), _PWa,
        lambda p: dict(soliton_exists=True, soliton_c=0, einstein=False, wave="plane_wave",
                       null_direction=[0, 0, 1, 0], ricci_parallel=p.k1 + p.k4 == 0),
        constraints=[("4 k1 k4 + 1 != 0", lambda p: 4 * p.k1 * p.k4 + 1 != 0)],
        grid=[dict(), dict(k4=2), dict(k1=0, k4=0, k2=1), dict(k1=2, k2=1, k3=1, k4=3, k5=-1)])

_family("PW.b", "plane waves with parallel null u1", "k", dict(k=2),
        lambda p: (U12, {(2, 4): [0, 0, 1 - p.k, 0], (3, 4): [p.k + 1, 0, 0, 0]}),
        lambda p: dict(soliton_exists=True, soliton_c=0, einstein=False, wave="plane_wave",
                       null_direction=[1, 0, 0, 0], ricci_parallel=True),
        constraints=[("k != 0", lambda p: p.k != 0)],
        grid=[dict(), dict(k=1), dict(k=-1), dict(k=F(1, 2))])


def _PWc(p):
    return U34, {(1, 4): [p.k1, -p.k2, p.k3, 0],
                 (2, 4): [p.k2, p.k4, p.k5, 0],
                 (3, 4): [0, 0, p.k6, 0]}


_family("PW.c", "plane waves on R^3 extensions", "k1 k2 k3 k4 k5 k6",
        dict(k1=1, k2=0, k3=0, k4=2, k5=0, k6=0), _PWc,
        lambda p: dict(soliton_exists=True, soliton_c=0, einstein=False, wave="plane_wave",
                       null_direction=[0, 0, 1, 0], ricci_parallel=p.k6 == 0),
        constraints=[("k1^2 + k4^2 - (k1 + k4) k6 != 0",
                      lambda p: p.k1 ** 2 + p.k4 ** 2 - (p.k1 + p.k4) * p.k6 != 0)],
        grid=[dict(), dict(k6=1), dict(k1=-1, k2=1, k3=1, k4=1, k5=2, k6=-1)])

_family("PW.d", "symmetric plane waves on aff(C)", "k1 k2", dict(k1=1, k2=0),
        lambda p: (U34, {(1, 3): [0, 1, 0, 0], (2, 3): [-1, 0, 0, 0],
                         (1, 4): [p.k1, p.k2, 0, 0], (2, 4): [-p.k2, p.k1, 0, 0]}),
        lambda p: dict(soliton_exists=False, einstein=False, locally_symmetric=True, wave="plane_wave",
                       null_direction=[0, 0, 1, 0], ricci_parallel=True, unimodular=False),
        constraints=[("k1 != 0", lambda p: p.k1 != 0)],
        grid=[dict(), dict(k1=-2, k2=1), dict(k1=F(1, 2), k2=3)])


# ---------------------------------------------------------------------------
# direct products H3 x R


def _KT_expect(p):
    a, b = p.alpha, p.beta
    c = F(3, 2) * (a ** 2 - 1) * (a ** 2 - b ** 2 - 1)
    out = dict(soliton_exists=True, soliton_c=c)
    if (a, b) == (1, 0):
        out.update(wave="flat", locally_symmetric=True, einstein=True)
    elif (a, b) == (1, 1):
        out.update(locally_symmetric=True, wave="plane_wave", null_direction=[1, 0, 0, -1],
                   ricci_parallel=True)
    elif a == 2 and abs(float(b) - math.sqrt(3)) < 1e-12:
        out.update(locally_symmetric=False, wave="plane_wave", ricci_parallel=True,
                   null_direction=[1, 0, math.sqrt(3), -2])
    return out


_family("H3xR.KT", "six left-invariant metric classes on H3 x R", "alpha beta", dict(alpha=2, beta=2),
        lambda p: (E4T, {(1, 2): [-p.alpha, 0, 0, 1],
                         (2, 3): [p.alpha * p.beta, 0, 0, -p.beta],
                         (2, 4): [p.alpha ** 2, 0, 0, -p.alpha]}),
        _KT_expect,
        constraints=[("(alpha, beta) is one of the six classes",
                      lambda p: (p.alpha, p.beta) in ((0, 0), (1, 0), (1, 1), (2, 0), (2, 2))
                      or (p.alpha == 2 and abs(float(p.beta) - math.sqrt(3)) < 1e-12))],
        grid=[dict(alpha=0, beta=0), dict(alpha=1, beta=0), dict(alpha=1, beta=1), dict(alpha=2, beta=0),
              dict(alpha=2, beta=math.sqrt(3)), dict(alpha=2, beta=2)])


# ---------------------------------------------------------------------------
# Euclidean and Poincare extensions


def _ee(id: str, title: str, params: str, defaults: Mapping[str, Any], build: Callable,
        expect: Callable, constraints: Iterable = (), grid: Iterable = ()) -> None:
    _family(id, title, params, defaults, build, expect, constraints, grid)


_ee("EE.R", "Riemannian E(2)/E(1,1) extensions", "l1 l2 g1 g2 g3 g4",
    dict(l1=1, l2=2, g1=1, g2=0, g3=0, g4=0),
    lambda p: (E4T, {(1, 3): [0, -p.l2, 0, 0], (2, 3): [p.l1, 0, 0, 0],
                     (1, 4): [p.g1, p.g2 * p.l2, 0, 0], (2, 4): [-p.g2 * p.l1, p.g1, 0, 0],
                     (3, 4): [p.g3, p.g4, 0, 0]}),
    lambda p: dict(unimodular=p.g1 == 0, einstein=p.g1 == p.g3 == p.g4 == 0 and p.l1 == p.l2,
                   **({"soliton_exists": False} if p.g1 != 0 else {})),
    [("l1 l2 != 0", lambda p: p.l1 * p.l2 != 0)],
    [dict(), dict(l1=-1, l2=1, g1=2, g2=1), dict(l1=1, l2=1, g1=1, g3=1), dict(g1=-1, g2=2, g3=1, g4=1),
     dict(l1=1, l2=1, g1=1)])

_ee("EE.Ia.s", "Lorentzian diagonalizable extensions, spacelike kernel", "l2 l3 g1 g2 g3 g4",
    dict(l2=1, l3=2, g1=0, g2=0, g3=1, g4=0),
    lambda p: (E3T, {(1, 2): [0, 0, -p.l3, 0], (1, 3): [0, -p.l2, 0, 0],
                     (1, 4): [0, p.g1, p.g2, 0], (2, 4): [0, p.g3, p.g4 * p.l3, 0],
                     (3, 4): [0, p.g4 * p.l2, p.g3, 0]}),
    lambda p: dict(unimodular=p.g3 == 0, einstein=p.g1 == p.g2 == p.g3 == 0 and p.l2 == p.l3,
                   **({"soliton_exists": False} if p.g3 != 0 else {})),
    [("l2 l3 != 0", lambda p: p.l2 * p.l3 != 0)],
    [dict(), dict(l2=-1, l3=1, g3=2, g4=1), dict(l2=1, l3=1, g3=1, g1=1), dict(g1=1, g2=-1, g3=-1, g4=2),
     dict(l2=1, l3=1, g3=1)])

_ee("EE.Ia.t", "Lorentzian diagonalizable extensions, timelike kernel", "l1 l2 g1 g2 g3 g4",
    dict(l1=1, l2=2, g1=1, g2=0, g3=0, g4=0),
    lambda p: (E3T, {(1, 3): [0, -p.l2, 0, 0], (2, 3): [p.l1, 0, 0, 0],
                     (1, 4): [p.g1, p.g2 * p.l2, 0, 0], (2, 4): [-p.g2 * p.l1, p.g1, 0, 0],
                     (3, 4): [p.g3, p.g4, 0, 0]}),
    lambda p: dict(unimodular=p.g1 == 0, einstein=p.g1 == p.g3 == p.g4 == 0 and p.l1 == p.l2,
                   **({"soliton_exists": False} if p.g1 != 0 else {})),
    [("l1 l2 != 0", lambda p: p.l1 * p.l2 != 0)],
    [dict(), dict(l1=-1, l2=1, g1=2, g2=1), dict(l1=1, l2=1, g1=1, g3=1), dict(g1=-1, g2=2, g3=1, g4=1)])


def _EE_Ib_expect(p):
    uni = p.g3 + p.g4 == 0
    ein = p.alpha == p.g1 == p.g2 == 0 and p.g3 == p.g4 and p.g3 in (H, -H)
    out = dict(unimodular=uni, einstein=ein)
    if not uni and not ein:
        out["soliton_exists"] = False
    return out


_ee("EE.Ib", "Lorentzian complex extensions", "alpha beta g1 g2 g3 g4",
    dict(alpha=0, beta=1, g1=0, g2=0, g3=1, g4=0),
    lambda p: (E3T, {(1, 2): [0, -p.beta, -p.alpha, 0], (1, 3): [0, -p.alpha, p.beta, 0],
                     (1, 4): [0, p.g1, p.g2, 0],
                     (2, 4): [0, 2 * p.g3 * p.beta, (p.g3 - p.g4) * p.alpha, 0],
                     (3, 4): [0, (p.g3 - p.g4) * p.alpha, 2 * p.g4 * p.beta, 0]}),
    _EE_Ib_expect,
    [("beta != 0", lambda p: p.beta != 0)],
    [dict(), dict(g3=H, g4=H), dict(alpha=1, g3=1, g4=1), dict(alpha=2, beta=-1, g1=1, g2=1, g3=1, g4=2),
     dict(g3=-H, g4=-H)])

_ee("EE.II.deg", "type II extensions with degenerate kernel", "eps l2 g1 g2 g3 g4",
    dict(eps=1, l2=1, g1=0, g2=0, g3=0, g4=0),
    lambda p: (U12, {(1, 2): [0, 0, p.l2, 0], (1, 3): [0, -p.eps, 0, 0],
                     (1, 4): [0, p.g1, p.g2, 0], (2, 4): [0, p.g3, p.g4 * p.l2, 0],
                     (3, 4): [0, -p.eps * p.g4, p.g3, 0]}),
    lambda p: dict(unimodular=p.g3 == 0, einstein=False, soliton_exists=False),
    [("eps in {1, -1}", lambda p: _neg_one_or_one(p.eps)), ("l2 != 0", lambda p: p.l2 != 0)],
    [dict(), dict(eps=-1, g3=1), dict(l2=2, g1=1, g2=1, g3=1, g4=1), dict(g4=1)])

_ee("EE.II.sp", "type II extensions with spacelike kernel", "eps l1 g1 g2 g3 g4",
    dict(eps=1, l1=1, g1=0, g2=0, g3=0, g4=0),
    lambda p: (U12, {(1, 3): [-p.l1, -p.eps, 0, 0], (2, 3): [0, p.l1, 0, 0],
                     (1, 4): [p.g1, p.g2, 0, 0], (2, 4): [0, p.g1 - 2 * p.eps * p.g2 * p.l1, 0, 0],
                     (3, 4): [p.g3, p.g4, 0, 0]}),
    lambda p: dict(unimodular=p.eps * p.g2 * p.l1 - p.g1 == 0, einstein=False, soliton_exists=False),
    [("eps in {1, -1}", lambda p: _neg_one_or_one(p.eps)), ("l1 != 0", lambda p: p.l1 != 0)],
    [dict(), dict(eps=-1, g1=1), dict(l1=2, g1=1, g2=1, g3=1, g4=1), dict(g1=1, g2=1)])


def _EE_III_expect(p):
    uni = p.g1 + p.g4 == 0
    ein = p.g1 == 2 * p.g4 and p.g3 == 0 and p.g2 * p.g4 == -2
    out = dict(unimodular=uni, einstein=ein)
    if not uni and not ein:
        out["soliton_exists"] = False
    return out


_ee("EE.III", "type III extensions", "g1 g2 g3 g4", dict(g1=1, g2=0, g3=0, g4=0),
    lambda p: (U12, {(1, 2): [1, 0, 0, 0], (2, 3): [0, 0, 1, 0],
                     (1, 4): [p.g1, 0, 0, 0], (2, 4): [p.g2, 0, p.g3, 0], (3, 4): [0, 0, p.g4, 0]}),
    _EE_III_expect,
    grid=[dict(), dict(g1=2, g4=1, g2=-2), dict(g1=2, g4=1, g2=1), dict(g1=1, g2=1, g3=1, g4=1)])


def _EE_riem1(p):
    return U34, {(1, 3): [0, p.l1, 0, 0], (2, 3): [-p.l1, 0, 0, 0],
                 (1, 4): [p.g1, p.g2, 0, 0], (2, 4): [-p.g2, p.g1, 0, 0], (3, 4): [p.g3, p.g4, 0, 0]}


_ee("EE.D.riem1", "degenerate extensions, Riemannian derived algebra, case 1", "l1 g1 g2 g3 g4",
    dict(l1=1, g1=1, g2=0, g3=1, g4=0), _EE_riem1,
    lambda p: dict(unimodular=p.g1 == 0, einstein=p.g1 == p.g3 == p.g4 == 0,
                   **({"soliton_exists": False} if p.g1 != 0 else {})),
    [("l1 != 0", lambda p: p.l1 != 0)],
    [dict(), dict(g3=0), dict(l1=2, g1=-1, g2=1, g3=1, g4=1), dict(g1=3, g2=2, g3=0, g4=1)])


def _EE_riem2(p):
    b = (p.g1 - p.g2) * p.l2 / (2 * p.l1)
    return U34, {(1, 3): [p.l1, p.l2, 0, 0], (2, 3): [-p.l2, -p.l1, 0, 0], (3, 4): [p.g3, p.g4, 0, 0],
                 (1, 4): [p.g1, b, 0, 0], (2, 4): [-b, p.g2, 0, 0]}


_ee("EE.D.riem2", "degenerate extensions, Riemannian derived algebra, case 2", "l1 l2 g1 g2 g3 g4",
    dict(l1=1, l2=2, g1=1, g2=0, g3=0, g4=0), _EE_riem2,
    lambda p: dict(unimodular=p.g1 + p.g2 == 0, einstein=False,
                   **({"soliton_exists": False} if p.g1 + p.g2 != 0 else {})),
    [("l1 != 0", lambda p: p.l1 != 0), ("l1^2 != l2^2", lambda p: p.l1 ** 2 != p.l2 ** 2)],
    [dict(), dict(l2=0, g1=1, g2=1), dict(l1=2, l2=1, g1=1, g2=2, g3=1, g4=1), dict(g1=-1, g2=3)])

_ee("EE.D.deg1", "degenerate extensions, degenerate derived algebra, case 1", "l1 l2 g1 g2 g3 g4",
    dict(l1=1, l2=1, g1=0, g2=0, g3=0, g4=0),
    lambda p: (U34, {(1, 2): [0, 0, p.l1, 0], (2, 3): [p.l2, 0, 0, 0],
                     (1, 4): [p.g1, 0, p.g2, 0], (2, 4): [p.g3, 0, p.g4, 0],
                     (3, 4): [-p.g2 * p.l2 / p.l1, 0, p.g1, 0]}),
    lambda p: dict(unimodular=p.g1 == 0, einstein=False, soliton_exists=False),
    [("l1 l2 != 0", lambda p: p.l1 * p.l2 != 0)],
    [dict(), dict(l2=-1, g1=1), dict(l1=2, l2=3, g1=1, g2=1, g3=1, g4=1)])


def _EE_deg2(p):
    return U34, {(1, 2): [p.l1, 0, p.l2, 0], (2, 3): [p.l3, 0, p.l1, 0], (2, 4): [p.g2, 0, p.g3, 0],
                 (1, 4): [p.g1, 0, (p.g1 - p.g4) * p.l2 / (2 * p.l1), 0],
                 (3, 4): [-(p.g1 - p.g4) * p.l3 / (2 * p.l1), 0, p.g4, 0]}


_ee("EE.D.deg2", "degenerate extensions, degenerate derived algebra, case 2", "l1 l2 l3 g1 g2 g3 g4",
    dict(l1=1, l2=0, l3=0, g1=1, g2=0, g3=0, g4=0), _EE_deg2,
    lambda p: dict(unimodular=p.g1 + p.g4 == 0, einstein=False,
                   **({"soliton_exists": False} if p.g1 + p.g4 != 0 else {})),
    [("l1 != 0", lambda p: p.l1 != 0), ("l1^2 - l2 l3 != 0", lambda p: p.l1 ** 2 - p.l2 * p.l3 != 0)],
    [dict(), dict(l2=1, l3=2, g1=1, g4=1), dict(l2=2, g1=2, g2=1, g3=1, g4=-1), dict(l3=1, g1=1, g4=1)])


# ---------------------------------------------------------------------------
# non-solvable direct extensions


def _NS_R(p):
    return E4T, {(1, 2): [0, 0, p.l3, 0], (1, 3): [0, -p.l2, 0, 0], (2, 3): [p.l1, 0, 0, 0],
                 (1, 4): [0, p.g1 * p.l2, p.g2 * p.l3, 0], (2, 4): [-p.g1 * p.l1, 0, p.g3 * p.l3, 0],
                 (3, 4): [-p.g2 * p.l1, -p.g3 * p.l2, 0, 0]}


def _NS_product_expect(p):
    prod = p.g1 == p.g2 == p.g3 == 0
    return dict(einstein=False, soliton_exists=prod and p.l1 == p.l2 == p.l3)


_NS_L = [("l1 l2 l3 != 0", lambda p: p.l1 * p.l2 * p.l3 != 0)]
_family("NS.R", "su(2)/sl(2,R) x R, Riemannian factor", "l1 l2 l3 g1 g2 g3",
        dict(l1=1, l2=1, l3=1, g1=0, g2=0, g3=0), _NS_R, _NS_product_expect, _NS_L,
        [dict(), dict(l3=2), dict(g1=1), dict(l1=1, l2=1, l3=2, g1=1), dict(l1=1, l2=2, l3=3, g2=1),
         dict(l1=-1, l2=1, l3=1), dict(l1=-1, l2=-1, l3=-1)])


def _NS_Ia(p):
    return E3T, {(1, 2): [0, 0, -p.l3, 0], (1, 3): [0, -p.l2, 0, 0], (2, 3): [p.l1, 0, 0, 0],
                 (1, 4): [0, p.g1 * p.l2, p.g2 * p.l3, 0], (2, 4): [-p.g1 * p.l1, 0, p.g3 * p.l3, 0],
                 (3, 4): [p.g2 * p.l1, p.g3 * p.l2, 0, 0]}


_family("NS.Ia", "sl(2,R)/su(2) x R, Lorentzian diagonalizable factor", "l1 l2 l3 g1 g2 g3",
        dict(l1=1, l2=1, l3=1, g1=0, g2=0, g3=0), _NS_Ia, _NS_product_expect, _NS_L,
        [dict(), dict(l3=2), dict(g1=1), dict(l1=1, l2=2, l3=1, g2=1), dict(l1=1, l2=2, l3=2, g3=1),
         dict(l1=1, l2=2, l3=3, g1=1, g2=1, g3=1)])


def _NS_Ib(p):
    s = p.alpha ** 2 + p.beta ** 2
    return E3T, {(1, 2): [0, -p.beta, -p.alpha, 0], (1, 3): [0, -p.alpha, p.beta, 0], (2, 3): [p.lam, 0, 0, 0],
                 (1, 4): [0, s * p.g1, s * p.g2, 0],
                 (2, 4): [-(p.g1 * p.alpha - p.g2 * p.beta) * p.lam, p.g3 * p.beta, p.g3 * p.alpha, 0],
                 (3, 4): [(p.g2 * p.alpha + p.g1 * p.beta) * p.lam, p.g3 * p.alpha, -p.g3 * p.beta, 0]}


_family("NS.Ib", "sl(2,R) x R, Lorentzian complex factor", "alpha beta lam g1 g2 g3",
        dict(alpha=0, beta=1, lam=1, g1=0, g2=0, g3=0), _NS_Ib,
        lambda p: dict(einstein=False, soliton_exists=False),
        [("beta lam != 0", lambda p: p.beta * p.lam != 0)],
        [dict(), dict(alpha=1, lam=1), dict(alpha=1, beta=2, lam=-1, g1=1, g2=1, g3=1), dict(g3=1)])

_family("NS.II", "sl(2,R) x R, type II factor", "eps l1 l2 g1 g2 g3",
        dict(eps=1, l1=1, l2=1, g1=0, g2=0, g3=0),
        lambda p: (U12, {(1, 2): [0, 0, p.l2, 0], (1, 3): [-p.l1, -p.eps, 0, 0], (2, 3): [0, p.l1, 0, 0],
                         (1, 4): [p.g1 * p.l1, p.eps * p.g1, p.g2 * p.l2, 0],
                         (2, 4): [0, -p.g1 * p.l1, p.g3 * p.l2, 0],
                         (3, 4): [-p.g3 * p.l1, -(p.g2 * p.l1 + p.eps * p.g3), 0, 0]}),
        lambda p: dict(einstein=False, soliton_exists=False),
        [("eps in {1, -1}", lambda p: _neg_one_or_one(p.eps)), ("l1 l2 != 0", lambda p: p.l1 * p.l2 != 0)],
        [dict(), dict(eps=-1, l2=2), dict(g1=1, g3=1), dict(l1=2, l2=-1, g1=1, g2=1, g3=1)])

_family("NS.III", "sl(2,R) x R, type III factor", "lam g1 g2 g3", dict(lam=1, g1=0, g2=0, g3=0),
        lambda p: (U12, {(1, 2): [1, 0, p.lam, 0], (1, 3): [-p.lam, 0, 0, 0], (2, 3): [0, p.lam, 1, 0],
                         (1, 4): [p.g1 * p.lam, 0, p.g2 * p.lam ** 2, 0],
                         (2, 4): [p.g3, -(p.g1 - p.g2) * p.lam, -(p.g1 - p.g2 - p.g3 * p.lam), 0],
                         (3, 4): [-p.g3 * p.lam, -p.g2 * p.lam ** 2, -p.g2 * p.lam, 0]}),
        lambda p: dict(einstein=False, soliton_exists=False),
        [("lam != 0", lambda p: p.lam != 0)],
        [dict(), dict(lam=2, g1=1), dict(lam=-1, g1=1, g2=1, g3=1)])

_family("NS.complex", "degenerate factor, ad_u with complex eigenvalues", "beta lam kappa g1 g2 g3",
        dict(beta=1, lam=1, kappa=0, g1=0, g2=0, g3=0),
        lambda p: (_kappa_metric(p.kappa), {
            (1, 2): [0, 0, 1, 0], (1, 3): [0, p.beta * p.lam ** 2, 0, 0],
            (1, 4): [0, p.g1 * p.lam ** 2, p.g2, 0], (2, 3): [-p.beta, 0, 0, 0],
            (2, 4): [-p.g1, 0, p.g3, 0], (3, 4): [p.g2 * p.beta, p.g3 * p.beta * p.lam ** 2, 0, 0]}),
        lambda p: dict(einstein=False, soliton_exists=False),
        [("beta lam != 0", lambda p: p.beta * p.lam != 0), ("kappa^2 < 1", lambda p: p.kappa ** 2 < 1)],
        [dict(), dict(beta=-1), dict(beta=2, lam=F(1, 2), kappa=F(1, 3), g1=1, g2=1, g3=1), dict(g3=1)])

_family("NS.real", "degenerate factor, ad_u with nonzero real eigenvalues", "lam kappa g1 g2 g3",
        dict(lam=1, kappa=0, g1=0, g2=0, g3=0),
        lambda p: (_kappa_metric(p.kappa), {
            (1, 2): [0, 0, 1, 0], (1, 3): [p.lam, 0, 0, 0], (1, 4): [p.g1, 0, p.g2, 0],
            (2, 3): [0, -p.lam, 0, 0], (2, 4): [0, -p.g1, p.g3, 0], (3, 4): [p.g3 * p.lam, p.g2 * p.lam, 0, 0]}),
        lambda p: dict(einstein=False, soliton_exists=False),
        [("lam != 0", lambda p: p.lam != 0), ("kappa^2 < 1", lambda p: p.kappa ** 2 < 1)],
        [dict(), dict(lam=2, kappa=F(1, 2)), dict(lam=-1, kappa=-F(1, 3), g1=1, g2=1, g3=1)])

_family("NS.nil", "degenerate factor, three-step nilpotent ad_u", "alpha beta kappa g1 g2 g3",
        dict(alpha=1, beta=0, kappa=0, g1=0, g2=0, g3=0),
        lambda p: (_kappa_metric(p.kappa), {
            (1, 2): [p.alpha, 0, p.beta, 0], (1, 3): [0, -1, 0, 0],
            (1, 4): [p.g1, p.g2, p.beta * p.g1 / p.alpha, 0], (2, 3): [0, 0, p.alpha, 0],
            (3, 4): [0, p.g3, -p.g1, 0], (2, 4): [-p.alpha * p.g3, 0, -(p.alpha * p.g2 + p.beta * p.g3), 0]}),
        lambda p: dict(einstein=False, locally_symmetric=False, soliton_exists=False),
        [("alpha != 0", lambda p: p.alpha != 0), ("kappa^2 != 1", lambda p: p.kappa ** 2 != 1)],
        [dict(), dict(alpha=2, beta=1, kappa=F(1, 2)), dict(alpha=-1, beta=1, g1=1, g2=1, g3=1)])


# ---------------------------------------------------------------------------
# left-invariant Ricci solitons that are not all algebraic


def _LIRS_i(p):
    lam = p.eps * _sqrt(1 - p.alpha ** 2 / 2)
    return E3T, {(1, 4): [p.alpha, 0, 0, 0], (2, 4): [0, lam, -1, 0], (3, 4): [0, 1, lam, 0]}


_family("LIRS.i", "steady solitons on R^3 extensions", "alpha eps", dict(alpha=0, eps=1), _LIRS_i,
        lambda p: dict(soliton_exists=True, soliton_c=0, rho_norm2=0, li_soliton=True, li_soliton_c=0,
                       critical_t=0, einstein=False, locally_symmetric=False),
        [("0 <= alpha <= sqrt2", lambda p: 0 <= p.alpha and p.alpha ** 2 <= 2),
         ("eps in {1, -1}", lambda p: _neg_one_or_one(p.eps)),
         ("eps = 1 when alpha = 0", lambda p: p.alpha != 0 or p.eps == 1)],
        [dict(), dict(alpha=F(4, 3)), dict(alpha=F(4, 3), eps=-1), dict(alpha=1), dict(alpha=1, eps=-1)])

_family("LIRS.ii", "steady Brinkmann solitons on E(1,1) x R", "alpha", dict(alpha=1),
        lambda p: (U12, {(1, 4): [p.alpha, 0, 0, 0], (2, 4): [0, -p.alpha, 1, 0], (3, 4): [1, 0, 0, 0]}),
        lambda p: dict(soliton_exists=False, li_soliton=True, li_soliton_c=0, s_critical=True, tau=0,
                       rho_norm2=0, wave="brinkmann_only"),
        [("alpha > 0", lambda p: p.alpha > 0)],
        [dict(), dict(alpha=2), dict(alpha=F(1, 3))])

_family("LIRS.iii", "steady solitons on aff(R) x aff(R)", "", {},
        lambda p: (E3T, {(2, 4): [0, 1, 0, 0], (1, 2): [0, -1, 0, 0], (1, 3): [0, 0, 1, 0],
                         (3, 4): [0, 0, 1, 0], (1, 4): [0, 0, 2, 0]}),
        lambda p: dict(soliton_exists=False, li_soliton=True, li_soliton_c=0, never_critical=True,
                       s_critical=False))


def _LIRS_iv_t(p):
    ab = p.alpha * p.beta
    return -(2 * ab ** 2 + 4 * ab + 3) / (2 * (3 * ab ** 2 + 4 * ab + 2))


_family("LIRS.iv", "expanding solitons on aff(R) x aff(R)", "alpha beta", dict(alpha=1, beta=0),
        lambda p: (U12, {(1, 2): [1, 0, 0, 0], (1, 4): [-2 * p.alpha * (p.alpha * p.beta + 1), 0, 0, 0],
                         (2, 3): [0, 0, 1, 0], (2, 4): [p.beta, 0, 0, 0], (3, 4): [0, 0, p.alpha, 0]}),
        lambda p: dict(soliton_exists=False, li_soliton=True, t_zero_energy=_LIRS_iv_t(p),
                       critical_t=_LIRS_iv_t(p)),
        [("alpha > 0", lambda p: p.alpha > 0),
         ("alpha beta not in {-2, -1, -1/2}", lambda p: p.alpha * p.beta not in (-2, -1, -H))],
        [dict(), dict(alpha=2, beta=1), dict(alpha=F(1, 2), beta=2), dict(alpha=3, beta=F(1, 3))])


def _LIRS_v(p):
    return U34, {(1, 2): [p.l1, 0, p.l2, 0], (2, 3): [0, 0, p.l1, 0], (3, 4): [0, 0, p.g4, 0],
                 (1, 4): [p.g1, 0, (p.g1 - p.g4) * p.l2 / (2 * p.l1), 0],
                 (2, 4): [-p.l2 / 2, 0, -(3 * p.l2 ** 2 + 4 * p.g1 ** 2 + 8 * p.g1 * p.g4) / (8 * p.l1), 0]}


_family("LIRS.v", "expanding solitons on aff(R) x aff(R), degenerate case", "l1 l2 g1 g4",
        dict(l1=1, l2=0, g1=1, g4=0), _LIRS_v,
        lambda p: dict(soliton_exists=False, li_soliton=True, t_zero_energy=-1, critical_t=-1),
        [("l1 != 0", lambda p: p.l1 != 0), ("g1 + g4 != 0", lambda p: p.g1 + p.g4 != 0)],
        [dict(), dict(l2=1, g1=1, g4=1), dict(l1=2, l2=-1, g1=-1, g4=3), dict(l1=-1, l2=2, g1=2, g4=-1)])

_family("LIRS.pw.i", "plane wave steady solitons on n4", "g3", dict(g3=1),
        lambda p: (U12, {(1, 3): [0, 1, 0, 0], (1, 4): [0, 0, p.g3, 0]}),
        lambda p: dict(soliton_exists=True, soliton_c=0, li_soliton=True, li_soliton_c=0, wave="plane_wave",
                       ricci_parallel=True, einstein=False, **_label("n4")),
        [("g3 != 0", lambda p: p.g3 != 0)], [dict(), dict(g3=-2), dict(g3=F(1, 2))])

_family("LIRS.pw.ii", "plane wave steady solitons on E(1,1) x R", "g3", dict(g3=1),
        lambda p: (U12, {(1, 2): [1, 0, 0, 0], (2, 3): [0, 0, 1, 0], (2, 4): [0, 0, p.g3, 0]}),
        lambda p: dict(soliton_exists=True, soliton_c=0, li_soliton=True, li_soliton_c=0, wave="plane_wave",
                       ricci_parallel=False, einstein=False),
        grid=[dict(), dict(g3=0), dict(g3=-3)])

_family("LIRS.pp", "pp-wave steady solitons on E(1,1) x R", "g1 eps", dict(g1=1, eps=1),
        lambda p: (U12, {(1, 4): [p.g1, p.eps, 0, 0], (2, 4): [0, -p.g1, 0, 0]}),
        lambda p: dict(soliton_exists=False, li_soliton=True, li_soliton_c=0, li_soliton_support=(2, 3),
                       wave="pp_wave_only", tau=0, never_critical=True, s_critical=True),
        [("g1 != 0", lambda p: p.g1 != 0), ("eps in {1, -1}", lambda p: _neg_one_or_one(p.eps))],
        [dict(), dict(g1=-2, eps=-1), dict(g1=F(1, 2))])


# ---------------------------------------------------------------------------
# three-dimensional Lorentzian Lie algebras


def _three(id: str, title: str, params: str, defaults: Mapping[str, Any], build: Callable,
           expect: Callable, constraints: Iterable = (), grid: Iterable = ()) -> None:
    _family(id, title, params, defaults, build, expect, constraints, grid, dim=3)


_IA_SOLITONS = {(1, 0, 0): ("h3", F(-3)), (0, 0, 1): ("h3", F(-3)), (2, 0, 0): ("h3", F(-3)),
                (1, 0, -1): ("e(2)", F(-1)), (1, -1, 0): ("e(1,1)", F(-1))}


def _3Ia_expect(p):
    key = (p.l1, p.l2, p.l3)
    out = dict(unimodular=True, jordan_type="Ia", l_self_adjoint=True)
    if key in _IA_SOLITONS:
        label, t = _IA_SOLITONS[key]
        out.update(soliton_exists=True, einstein=False, t_zero_energy=t, critical_t=t, **_label(label))
    elif key == (1, 1, 1):
        out.update(soliton_exists=True, einstein=True)
    elif key == (1, 2, 3):
        out.update(soliton_exists=False, einstein=False)
    return out


_three("3D.Ia", "unimodular, diagonalizable structure operator", "l1 l2 l3", dict(l1=1, l2=0, l3=-1),
       lambda p: (E3D, {(1, 2): [0, 0, -p.l3], (1, 3): [0, -p.l2, 0], (2, 3): [p.l1, 0, 0]}),
       _3Ia_expect,
       grid=[dict(l1=1, l2=0, l3=0), dict(l1=0, l2=0, l3=1), dict(l1=2, l2=0, l3=0), dict(l1=1, l2=0, l3=-1),
             dict(l1=1, l2=-1, l3=0), dict(l1=1, l2=1, l3=1), dict(l1=1, l2=2, l3=3)])


def _3Ib_expect(p):
    out = dict(unimodular=True, jordan_type="Ib", l_self_adjoint=True)
    if (p.alpha, p.beta, p.lam) == (0, 1, 0):
        out.update(soliton_exists=True, einstein=False, t_zero_energy=-1, critical_t=-1, **_label("e(1,1)"))
    return out


_three("3D.Ib", "unimodular, complex structure operator", "alpha beta lam", dict(alpha=0, beta=1, lam=0),
       lambda p: (E3D, {(1, 2): [0, -p.beta, -p.alpha], (1, 3): [0, -p.alpha, p.beta], (2, 3): [p.lam, 0, 0]}),
       _3Ib_expect, [("beta != 0", lambda p: p.beta != 0)],
       [dict(), dict(alpha=1, beta=1, lam=1), dict(alpha=0, beta=2, lam=1)])

_three("3D.II", "unimodular, type II structure operator", "eps l1 l2", dict(eps=1, l1=1, l2=0),
       lambda p: (null_pair_12(3), {(1, 2): [0, 0, p.l2], (1, 3): [-p.l1, -p.eps, 0], (2, 3): [0, p.l1, 0]}),
       lambda p: dict(unimodular=True, jordan_type="II", l_self_adjoint=True),
       [("eps in {1, -1}", lambda p: _neg_one_or_one(p.eps))],
       [dict(), dict(eps=-1, l1=1, l2=1), dict(l1=0, l2=1), dict(l1=2, l2=3)])

_three("3D.III", "unimodular, type III structure operator", "lam", dict(lam=0),
       lambda p: (null_pair_12(3), {(1, 2): [1, 0, p.lam], (1, 3): [-p.lam, 0, 0], (2, 3): [0, p.lam, 1]}),
       lambda p: dict(unimodular=True, jordan_type="III", l_self_adjoint=True,
                      **(dict(soliton_exists=True, einstein=False, wave="plane_wave", **_label("e(1,1)"))
                         if p.lam == 0 else dict(soliton_exists=False, einstein=False))),
       grid=[dict(), dict(lam=1), dict(lam=-2)])


def _IV(metric: Any, self_adj: Callable) -> tuple[Callable, Callable]:
    def build(p):
        return metric, {(1, 3): [p.alpha, p.beta, 0], (2, 3): [p.gamma, p.delta, 0]}

    def expect(p):
        out = dict(unimodular=False, l_self_adjoint=False)
        if self_adj(p):
            out["soliton_exists"] = True
        return out

    return build, expect


_IV_PARAMS = "alpha beta gamma delta"
_IV_C = [("alpha + delta != 0", lambda p: p.alpha + p.delta != 0)]

_three("3D.IV1", "non-unimodular, Lorentzian unimodular kernel", _IV_PARAMS,
       dict(alpha=1, beta=1, gamma=-1, delta=2),
       *_IV([[-1, 0, 0], [0, 1, 0], [0, 0, 1]], lambda p: p.beta == -p.gamma), _IV_C,
       [dict(), dict(beta=0, gamma=0), dict(alpha=2, beta=1, gamma=1, delta=1), dict(alpha=1, beta=3, gamma=-3, delta=0)])

_three("3D.IV2", "non-unimodular, Riemannian unimodular kernel", _IV_PARAMS,
       dict(alpha=1, beta=1, gamma=1, delta=2),
       *_IV(E3D, lambda p: p.beta == p.gamma), _IV_C,
       [dict(), dict(beta=0, gamma=0), dict(alpha=2, beta=1, gamma=-1, delta=1), dict(alpha=1, beta=2, gamma=2, delta=-3)])


def _IV3_expect(p):
    out = dict(unimodular=False, l_self_adjoint=False)
    if p.gamma == 0:
        out.update(soliton_exists=True, soliton_c=0, critical_all_t=True)
    elif p.alpha * p.delta - p.beta * p.gamma == 0:
        out.update(soliton_exists=False, critical_t=-3)
    return out


_three("3D.IV3", "non-unimodular, degenerate unimodular kernel", _IV_PARAMS,
       dict(alpha=1, beta=1, gamma=0, delta=2),
       lambda p: ([[1, 0, 0], [0, 0, 1], [0, 1, 0]], {(1, 3): [p.alpha, p.beta, 0], (2, 3): [p.gamma, p.delta, 0]}),
       _IV3_expect, _IV_C,
       [dict(), dict(beta=0), dict(alpha=1, beta=1, gamma=1, delta=1), dict(alpha=2, beta=-1, gamma=2, delta=-1),
        dict(alpha=1, beta=2, gamma=1, delta=3)])


def _sa(id: str, title: str, metric: Any, gamma: Callable) -> None:
    def build(p):
        return metric, {(1, 3): [p.alpha, p.beta, 0], (2, 3): [gamma(p), p.delta, 0]}

    _three(id, title, "alpha beta delta", dict(alpha=1, beta=1, delta=2), build,
           lambda p: dict(unimodular=False, soliton_exists=True), _IV_C,
           [dict(), dict(alpha=-2, beta=1, delta=0), dict(alpha=3, beta=2, delta=1), dict(alpha=1, beta=0, delta=1)])


_sa("3D.IV1.sa", "type IV.1 with self-adjoint phi", [[-1, 0, 0], [0, 1, 0], [0, 0, 1]], lambda p: -p.beta)
_sa("3D.IV2.sa", "type IV.2 with self-adjoint phi", E3D, lambda p: p.beta)
_sa("3D.IV3.sa", "type IV.3 with self-adjoint phi", [[1, 0, 0], [0, 0, 1], [0, 1, 0]], lambda p: 0)


# ---------------------------------------------------------------------------
# public API


def enumerate_families() -> list[FamilySpec]:
    """All registered families, sorted by id."""
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def family_ids() -> list[str]:
    return sorted(_REGISTRY)


def get_family(fid: str) -> FamilySpec:
    try:
        return _REGISTRY[fid]
    except KeyError:
        raise CatalogError(f"unknown family id {fid!r}") from None


def resolve(ref: str) -> list[str]:
    """Expand a family reference: an id, an ``X.all`` group, or an id prefix."""
    if ref in ("all", "*"):
        return family_ids()
    if ref.endswith(".all"):
        stem = ref[: -len(".all")]
        out = [k for k in family_ids() if k.startswith(stem + ".")]
    else:
        out = [k for k in family_ids() if k == ref or k.startswith(ref + ".")]
    if not out:
        raise CatalogError(f"unknown family id {ref!r}")
    return out


def _namespace(fam: FamilySpec, params: Mapping[str, Any] | None) -> tuple[SimpleNamespace, dict[str, Any]]:
    vals = dict(fam.defaults)
    for k, v in (params or {}).items():
        if k not in fam.defaults:
            raise CatalogError(f"{fam.id}: unknown parameter {k!r} (expected one of {', '.join(fam.params) or 'none'})")
        vals[k] = _coerce_param(v)
    return SimpleNamespace(**vals), vals


def _all_exact(metric: Any, brackets: Mapping[Any, Any]) -> bool:
    vals = list(np.asarray(metric, dtype=object).flat)
    for vec in brackets.values():
        vals.extend(vec)
    return all(isinstance(v, (int, Fraction, np.integer)) for v in vals)


def instantiate(fid: str, params: Mapping[str, Any] | None = None, backend: str | Field | None = None,
                tol: float | None = None) -> FamilyInstance:
    """Build the algebra and the expected record of a family at ``params``.

    ``backend`` is ``"rational"``, ``"float"``, a :class:`Field`, or ``None``
    (rational when every structure constant is rational).
    """
    fam = get_family(fid)
    p, vals = _namespace(fam, params)
    fam.check(p)
    metric, brackets = fam.build(p)
    if isinstance(backend, Field):
        fld = backend
    elif backend == "float" or (backend is None and not _all_exact(metric, brackets)):
        fld = FloatField(tol) if tol else FLOAT
    elif backend in (None, "rational"):
        if not _all_exact(metric, brackets):
            raise CatalogError(f"{fid}: parameters {vals} need the float backend")
        fld = RATIONAL
    else:
        raise CatalogError(f"unknown backend {backend!r}")
    a = algebra(fam.dim, metric, brackets, fld, note=fid)
    exp = ExpectedRecord(**fam.expect(p))
    exp.anchors = {k: f"{fid}: {k}" for k in exp.populated()}
    return FamilyInstance(fam, vals, a, exp)


def grid_instances(fid: str, backend: str | Field | None = None) -> list[FamilyInstance]:
    fam = get_family(fid)
    return [instantiate(fid, pt, backend) for pt in fam.default_grid()]


# ---------------------------------------------------------------------------
# homothety witnesses


@dataclass(frozen=True)
class HomothetyWitness:
    """An explicit equivalence between two catalog instances.

    ``scale_metric(change_basis(source, basis), scale)`` must reproduce
    ``target`` entry by entry: the basis change carries the brackets and the
    metric, then the metric is multiplied by ``scale``.
    """

    source: tuple[str, Mapping[str, Any]]
    target: tuple[str, Mapping[str, Any]]
    basis: list[list[Any]]
    scale: Any
    note: str = ""


def _diag(*d: Any) -> list[list[Any]]:
    return [[d[i] if i == j else 0 for j in range(len(d))] for i in range(len(d))]


_WG = dict(g1=F(1), g2=F(2), g3=F(-1), g4=F(3), g5=H)

HOMOTHETY_WITNESSES: list[HomothetyWitness] = [
    HomothetyWitness(("H3.R", dict(l3=F(2), **_WG)), ("H3.R", dict(l3=F(1), **{k: v / 2 for k, v in _WG.items()})),
                     _diag(H, H, H, H), F(4), "normalize l3 to 1 by uniform rescaling"),
    HomothetyWitness(("H3.D0", dict(l1=F(-3), **_WG)),
                     ("H3.D0", dict(l1=F(1), **{k: v / -3 for k, v in _WG.items()})),
                     _diag(*[F(-1, 3)] * 4), F(9), "normalize l1 to 1 by uniform rescaling"),
    HomothetyWitness(("R3.L.II.i", dict(eta1=F(2), eta2=F(4))), ("R3.L.II.i", dict(eta1=H, eta2=F(1))),
                     _diag(H, F(1, 8), F(1, 4), F(1, 4)), F(16), "boost in the null pair keeps the Jordan entry at 1"),
]


def check_witness(w: HomothetyWitness) -> bool:
    """Exact (rational) check that ``w`` maps its source onto its target."""
    a = instantiate(*w.source, backend=RATIONAL).algebra
    b = instantiate(*w.target, backend=RATIONAL).algebra
    m = scale_metric(change_basis(a, w.basis), w.scale)
    return bool((m.c == b.c).all() and (m.g == b.g).all())


# ---------------------------------------------------------------------------
# verification


def _close(f: Field, x: Any, y: Any) -> bool:
    if x is None or y is None:
        return x is None and y is None
    if f.exact and isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    x, y = float(x), float(y)
    return abs(x - y) <= 1e-8 * max(1.0, abs(x), abs(y))


def _proportional(u: Any, v: Any) -> bool:
    if u is None or v is None:
        return False
    u = np.asarray([float(x) for x in u])
    v = np.asarray([float(x) for x in v])
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0 or nv == 0:
        return False
    u, v = u / nu, v / nv
    return min(np.linalg.norm(u - v), np.linalg.norm(u + v)) <= 1e-7


def verify_instance(inst: FamilyInstance, report: Any = None) -> list[Check]:
    """Compare every populated expected field against the computed verdicts."""
    from .classify import classification_report, structure_operator_matrix
    from .lie import label_matches

    a = inst.algebra
    f = a.field
    rep = report if report is not None else classification_report(a)
    exp = inst.expected
    checks: list[Check] = [Check("valid", True, validate(a).ok, validate(a).ok)]

    def add(name: str, want: Any, got: Any, ok: bool) -> None:
        checks.append(Check(name, want, got, bool(ok), exp.anchors.get(name, "")))

    from .curvature import curvature

    pkg = curvature(a)
    for name, want in exp.populated().items():
        if name == "unimodular":
            add(name, want, rep.unimodular, rep.unimodular == want)
        elif name == "einstein":
            add(name, want, rep.einstein.einstein, rep.einstein.einstein == want)
        elif name == "locally_symmetric":
            add(name, want, rep.locally_symmetric, rep.locally_symmetric == want)
        elif name == "soliton_exists":
            add(name, want, rep.soliton.exists, rep.soliton.exists == want)
        elif name == "soliton_c":
            add(name, want, rep.soliton.c, rep.soliton.exists and _close(f, rep.soliton.c, want))
        elif name == "tau":
            add(name, want, pkg.tau, _close(f, pkg.tau, want))
        elif name == "rho_norm2":
            add(name, want, pkg.rho_norm2, _close(f, pkg.rho_norm2, want))
        elif name == "t_zero_energy":
            got = rep.criticality.t_zero_energy
            add(name, want, got, _close(f, got, want))
        elif name == "critical_t":
            got = rep.criticality.critical_t
            add(name, want, got, _close(f, got, want))
        elif name == "critical_all_t":
            add(name, want, rep.criticality.critical_all_t, rep.criticality.critical_all_t == want)
        elif name == "never_critical":
            cv = rep.criticality
            got = cv.critical_t is None and not cv.critical_all_t
            add(name, want, got, got == want)
        elif name == "s_critical":
            add(name, want, rep.criticality.s_critical, rep.criticality.s_critical == want)
        elif name == "wave":
            add(name, want, rep.wave.kind, rep.wave.kind == want)
        elif name == "null_direction":
            got = rep.wave.null_direction
            add(name, want, got, _proportional(got, want))
        elif name == "ricci_parallel":
            add(name, want, rep.wave.ricci_parallel, rep.wave.ricci_parallel == want)
        elif name == "lie_label":
            ok = label_matches(rep.fingerprint, want, exp.lie_params)
            add(name, (want, exp.lie_params), (rep.fingerprint.label_guess, rep.fingerprint.label_params), ok)
        elif name == "lie_params":
            continue
        elif name == "li_soliton":
            add(name, want, rep.left_invariant_soliton.exists, rep.left_invariant_soliton.exists == want)
        elif name == "li_soliton_c":
            li = rep.left_invariant_soliton
            add(name, want, li.c, li.exists and _close(f, li.c, want))
        elif name == "li_soliton_support":
            li = rep.left_invariant_soliton
            X = li.X
            ok = li.exists and X is not None and all(f.is_zero(X[i]) for i in range(a.n) if i not in want)
            add(name, want, None if X is None else [float(x) for x in X], ok)
        elif name == "jordan_type":
            got = rep.structure_operator.jordan_type if rep.structure_operator else None
            add(name, want, got, got == want)
        elif name == "l_self_adjoint":
            L = structure_operator_matrix(a)
            g = np.asarray(a.g, dtype=float)
            gL = g @ np.asarray(L, dtype=float)
            got = bool(np.allclose(gL, gL.T, atol=1e-9))
            add(name, want, got, got == want)
        else:  # pragma: no cover - registry typo guard
            raise AssertionError(f"unhandled expectation {name}")
    return checks

"""Verdicts on a metric Lie algebra: solitons, symmetry, waves, criticality.

Every function takes the algebra together with its precomputed
:class:`~soliton_lab.curvature.CurvaturePackage` so that curvature is only
computed once per instance.  On the rational backend all verdicts are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .core import MetricLieAlgebra, algebra_hash, to_spec, validate, AlgebraFormatError
from .curvature import CurvaturePackage, connection_operators, curvature, euler_lagrange
from .lie import LieFingerprint, cubic_structure, fingerprint, label_matches
from .scalars import Field, NotExactError, scalar_to_json

__all__ = [
    "SCHEMA_VERSION",
    "SolitonVerdict",
    "WaveVerdict",
    "CriticalityVerdict",
    "StructureOperator3D",
    "LeftInvariantSoliton",
    "EinsteinVerdict",
    "ClassificationReport",
    "is_unimodular",
    "einstein_check",
    "derivation_residual",
    "soliton_solve",
    "locally_symmetric",
    "wave_classify",
    "structure_operator_matrix",
    "structure_operator_3d",
    "functional_criticality",
    "left_invariant_soliton",
    "fingerprint",
    "label_matches",
    "classification_report",
]

SCHEMA_VERSION = "1.0"


def _js(x: Any) -> Any:
    if x is None:
        return None
    if isinstance(x, np.ndarray):
        return [_js(v) for v in x]
    if isinstance(x, (list, tuple)):
        return [_js(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    return scalar_to_json(x)


def _scale(f: Field, *arrays: Any) -> float:
    return max([1.0] + [float(f.to_float(f.max_abs(np.asarray(a)))) for a in arrays])


def _kind(f: Field, c: Any) -> str:
    s = f.sign(c)
    return "shrinking" if s > 0 else ("expanding" if s < 0 else "steady")


# ---------------------------------------------------------------------------
# unimodularity, Einstein, local symmetry


def is_unimodular(a: MetricLieAlgebra) -> bool:
    f = a.field
    return all(f.is_zero(sum(a.c[i, k, k] for k in range(a.n))) for i in range(a.n))


def flat_line_factor(a: MetricLieAlgebra) -> np.ndarray | None:
    """A non-null central ``v`` orthogonal to ``[g, g]``, if one exists.

    Such ``v`` splits the metric Lie algebra as an orthogonal product with a
    line, so the metric is reducible.
    """
    f = a.field
    n = a.n
    rows = [a.c[:, j, :].T for j in range(n)]
    derived = np.stack([a.c[i, j] for i in range(n) for j in range(n)], axis=1)
    rows.append((a.g @ derived).T)
    W = f.nullspace(np.concatenate(rows, axis=0))
    if W.shape[1] == 0:
        return None
    q = W.T @ a.g @ W
    scale = max(1.0, float(f.to_float(f.max_abs(a.g))))
    for i in range(W.shape[1]):
        if not f.all_zero(q[i, i], scale):
            return W[:, i]
    for i, j in itertools.combinations(range(W.shape[1]), 2):
        if not f.all_zero(q[i, j], scale):
            return W[:, i] + W[:, j]
    return None


@dataclass
class EinsteinVerdict:
    einstein: bool
    lam: Any = None

    def to_dict(self) -> dict[str, Any]:
        return {"einstein": self.einstein, "lambda": _js(self.lam)}


def einstein_check(a: MetricLieAlgebra, pkg: CurvaturePackage) -> EinsteinVerdict:
    f = a.field
    lam = pkg.tau / f.coerce(a.n)
    ok = f.all_zero(pkg.rho - lam * a.g, _scale(f, pkg.rho))
    return EinsteinVerdict(ok, lam if ok else None)


def locally_symmetric(a: MetricLieAlgebra, pkg: CurvaturePackage) -> bool:
    return a.field.all_zero(pkg.nabla_riem, _scale(a.field, pkg.riem) ** 2)


# ---------------------------------------------------------------------------
# algebraic Ricci solitons


@dataclass
class SolitonVerdict:
    exists: bool
    c: Any
    D: np.ndarray | None
    kind: str | None
    residual_norm: Any
    any_c: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "exists": self.exists,
            "c": _js(self.c),
            "D": _js(self.D),
            "kind": self.kind,
            "residual_norm": _js(self.residual_norm),
            "any_c": self.any_c,
        }


def derivation_residual(a: MetricLieAlgebra, pkg: CurvaturePackage, c: Any) -> np.ndarray:
    """``T[i, j, k]``: the ``e_k`` component of ``D[e_i,e_j] - [De_i,e_j] - [e_i,De_j]``
    with ``D = Ric - c Id``."""
    M = pkg.ric
    A = (np.einsum("kl,ijl->ijk", M, a.c)
         - np.einsum("li,ljk->ijk", M, a.c)
         - np.einsum("lj,ilk->ijk", M, a.c))
    return A + a.field.coerce(c) * a.c


def soliton_solve(a: MetricLieAlgebra, pkg: CurvaturePackage) -> SolitonVerdict:
    """Solve the affine equation ``A + c C = 0`` for the soliton constant."""
    f = a.field
    A = derivation_residual(a, pkg, 0)
    C = a.c
    zero = f.coerce(0)
    if f.all_zero(C):
        # abelian: every c works; report the flat representative
        return SolitonVerdict(True, zero, pkg.ric - zero * f.eye(a.n), "steady", zero, any_c=True)
    if f.exact:
        idx = next(i for i in np.ndindex(C.shape) if C[i] != 0)
        c = -A[idx] / C[idx]
        R = A + c * C
        ok = f.all_zero(R)
        if ok:
            return SolitonVerdict(True, c, pkg.ric - c * f.eye(a.n), _kind(f, c), zero)
        cf = _lsq_c(A, C)
        res = float(np.sqrt(np.sum(np.asarray(A + f.coerce(Fraction(cf).limit_denominator(10 ** 12)) * C,
                                              dtype=float) ** 2)))
        return SolitonVerdict(False, None, None, None, res)
    c = _lsq_c(A, C)
    R = A + c * C
    res = float(np.sqrt(np.sum(R ** 2)))
    if f.all_zero(R, _scale(f, A, c * C)):
        return SolitonVerdict(True, c, pkg.ric - c * np.eye(a.n), _kind(f, c), res)
    return SolitonVerdict(False, None, None, None, res)


def _lsq_c(A: np.ndarray, C: np.ndarray) -> float:
    A = np.asarray(A, dtype=float).ravel()
    C = np.asarray(C, dtype=float).ravel()
    return float(-(A @ C) / (C @ C))


# ---------------------------------------------------------------------------
# waves


@dataclass
class WaveVerdict:
    kind: str
    null_direction: np.ndarray | None
    ricci_parallel: bool
    planewave_type: str
    exact: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "null_direction": _js(self.null_direction),
            "ricci_parallel": self.ricci_parallel,
            "planewave_type": self.planewave_type,
            "exact": self.exact,
        }


_WAVE_RANK = {"none": 0, "brinkmann_only": 1, "pp_wave_only": 2, "plane_wave": 3}


def _real_eigenvalues(f: Field, M: np.ndarray) -> tuple[list[Any], bool]:
    """Clustered real eigenvalues; on the exact backend only verified rationals.

    The flag is False when some real eigenvalue could not be made exact.
    """
    w = np.linalg.eigvals(np.asarray(M, dtype=float))
    scale = max(1.0, float(np.max(np.abs(w))) if w.size else 1.0)
    # Jordan blocks split a real eigenvalue into a small complex cloud of
    # radius ~eps^(1/k); cluster in the plane and keep clusters with real mean
    clusters: list[list[complex]] = []
    for z in sorted(w, key=lambda z: (z.real, z.imag)):
        for cl in clusters:
            if abs(z - np.mean(cl)) <= 1e-4 * scale:
                cl.append(z)
                break
        else:
            clusters.append([z])
    means = sorted(float(np.mean(cl).real) for cl in clusters
                   if abs(np.mean(cl).imag) <= 1e-7 * scale)
    if not f.exact:
        return means, True
    out, complete = [], True
    n = M.shape[0]
    for m in means:
        q = Fraction(m).limit_denominator(10 ** 6)
        if f.is_zero(f.det(M - q * f.eye(n))):
            out.append(q)
        else:
            complete = False
    return out, complete


def _float_nullspace(M: np.ndarray, rel: float = 1e-7) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    _, s, vh = np.linalg.svd(M)
    cut = rel * max(1.0, float(s[0]) if s.size else 1.0)
    r = int(np.sum(s > cut))
    return vh[r:].T.copy()


def _joint_eigenspaces(f: Field, ops: np.ndarray) -> tuple[list[np.ndarray], bool]:
    """Maximal subspaces on which every operator acts by a real scalar."""
    n = ops.shape[1]
    spaces = [f.eye(n)]
    complete = True
    for A in ops:
        nxt = []
        for W in spaces:
            # eigenvalues of A restricted to W need W invariant; use A on the full space
            eigs, ok = _real_eigenvalues(f, A)
            complete &= ok
            for lam in eigs:
                K = (A - lam * f.eye(n)) @ W
                Z = f.nullspace(K) if f.exact else _float_nullspace(K)
                if Z.shape[1]:
                    V = W @ Z
                    if not f.exact:
                        V, _ = np.linalg.qr(V)
                    nxt.append(V)
        spaces = nxt
        if not spaces:
            break
    return spaces, complete


def _null_candidates(f: Field, g: np.ndarray, W: np.ndarray) -> list[np.ndarray]:
    k = W.shape[1]
    q = W.T @ g @ W
    scale = _scale(f, g)
    out: list[np.ndarray] = []
    if k == 1:
        if f.all_zero(q, scale):
            out.append(W[:, 0])
        return out
    R = f.nullspace(q) if f.exact else _float_nullspace(q, 1e-8)
    out.extend(W @ R[:, j] for j in range(R.shape[1]))
    if k == 2 and R.shape[1] == 0:
        a, b, d = q[0, 0], q[0, 1], q[1, 1]
        disc = b * b - a * d
        if f.sign(disc) > 0:
            if f.is_zero(a):
                ys = [[1, 0], [-d, 2 * b]]
            else:
                try:
                    r = f.sqrt(disc)
                except NotExactError:
                    r = None
                if r is None:
                    rf = float(np.sqrt(float(disc)))
                    af, bf = float(a), float(b)
                    ys = [[-bf + rf, af], [-bf - rf, af]]
                    Wf = np.asarray(W, dtype=float)
                    return out + [Wf @ np.array(y) for y in ys]
                ys = [[-b + r, a], [-b - r, a]]
            out.extend(W @ f.array(y) for y in ys)
    elif k >= 3:
        Wf = np.asarray(W, dtype=float)
        ev, U = np.linalg.eigh(np.asarray(q, dtype=float))
        pos = [U[:, i] / np.sqrt(ev[i]) for i in range(k) if ev[i] > 1e-9]
        neg = [U[:, i] / np.sqrt(-ev[i]) for i in range(k) if ev[i] < -1e-9]
        for p in pos:
            for m in neg:
                out.append(Wf @ (p + m))
                out.append(Wf @ (p - m))
    return out


def _normalize(v: np.ndarray) -> np.ndarray:
    i = int(np.argmax([abs(x) for x in v]))
    return v / v[i]


def _rationalize(f: Field, v: np.ndarray) -> np.ndarray | None:
    if not f.exact:
        return None
    if v.dtype == object:
        return v
    v = _normalize(np.asarray(v, dtype=float))
    return f.array([Fraction(x).limit_denominator(10 ** 6) for x in v])


def _is_recurrent_null(f: Field, ops: np.ndarray, g: np.ndarray, v: np.ndarray) -> bool:
    scale = _scale(f, ops)
    if not f.is_zero(v @ g @ v) and not f.all_zero(v @ g @ v, scale):
        return False
    for A in ops:
        w = A @ v
        # w parallel to v: all 2x2 minors vanish
        M = np.outer(w, v) - np.outer(v, w)
        if not f.all_zero(M, scale):
            return False
    return True


def _wave_level(f: Field, pkg: CurvaturePackage, v: np.ndarray) -> tuple[int, bool]:
    g = np.asarray(pkg.algebra.g) if f.exact else np.asarray(pkg.algebra.g, dtype=float)
    riem, nriem, ric = pkg.riem, pkg.nabla_riem, pkg.ric
    if not f.exact:
        v = np.asarray(v, dtype=float)
    row = (g @ v).reshape(1, -1)
    V = f.nullspace(row) if f.exact else _float_nullspace(row, 1e-12)
    sR = _scale(f, riem)
    flat_t = f.all_zero(np.einsum("ia,jb,ijkl->abkl", V, V, riem), sR)
    iso = f.all_zero(ric @ ric, _scale(f, ric) ** 2)
    if not (flat_t and iso):
        return 1, False
    par = f.all_zero(np.einsum("ma,mijkl->aijkl", V, nriem), sR ** 2)
    return (3 if par else 2), True


def wave_classify(a: MetricLieAlgebra, pkg: CurvaturePackage) -> WaveVerdict:
    """Search for a left-invariant recurrent null line and grade the wave."""
    f = a.field
    ricci_parallel = f.all_zero(pkg.nabla_rho, _scale(f, pkg.rho) ** 2)
    if pkg.is_flat():
        return WaveVerdict("flat", None, True, "n/a")
    signature = _lorentzian(a)
    if not signature:
        return WaveVerdict("none", None, ricci_parallel, "n/a")
    best = _wave_search(a, pkg)
    if best is None and f.exact:
        fa = a.as_float()
        fbest = _wave_search(fa, curvature(fa))
        if fbest is not None:
            level, v = fbest
            return _wave_verdict(level, _normalize(np.asarray(v, dtype=float)), ricci_parallel, False)
    if best is None:
        return WaveVerdict("none", None, ricci_parallel, "n/a", f.exact)
    level, v = best
    return _wave_verdict(level, _normalize(v), ricci_parallel, f.exact)


def _wave_verdict(level: int, v: np.ndarray, ricci_parallel: bool, exact: bool) -> WaveVerdict:
    kind = {1: "brinkmann_only", 2: "pp_wave_only", 3: "plane_wave"}[level]
    ptype = ("i" if ricci_parallel else "ii") if level == 3 else "n/a"
    return WaveVerdict(kind, v, ricci_parallel, ptype, exact)


def _lorentzian(a: MetricLieAlgebra) -> bool:
    from .core import _inertia

    sig = _inertia(a.field, a.g)
    return min(sig.plus, sig.minus) == 1


def _wave_search(a: MetricLieAlgebra, pkg: CurvaturePackage) -> tuple[int, np.ndarray] | None:
    f = a.field
    ops = connection_operators(pkg.gamma)
    spaces, _ = _joint_eigenspaces(f, ops)
    best: tuple[int, np.ndarray] | None = None
    for W in spaces:
        for v in _null_candidates(f, a.g, W):
            if f.exact and v.dtype != object:
                r = _rationalize(f, v)
                if r is None or not _is_recurrent_null(f, ops, a.g, r):
                    continue
                v = r
            elif not _is_recurrent_null(f, ops, a.g, v):
                continue
            level, _ = _wave_level(f, pkg, v)
            if best is None or level > best[0]:
                best = (level, v)
    return best


# ---------------------------------------------------------------------------
# three-dimensional structure operator


@dataclass
class StructureOperator3D:
    L: np.ndarray
    jordan_type: str
    eigen_data: dict[str, Any]
    self_adjoint: bool
    rank: int

    def to_dict(self) -> dict[str, Any]:
        ed = {k: _js(v) if not isinstance(v, (str, bool, type(None))) else v
              for k, v in self.eigen_data.items()}
        return {"L": _js(self.L), "jordan_type": self.jordan_type, "eigen_data": ed,
                "self_adjoint": self.self_adjoint, "rank": self.rank}


_CROSS_PAIRS = ((1, 2), (2, 0), (0, 1))


def structure_operator_matrix(a: MetricLieAlgebra) -> np.ndarray:
    """Matrix of ``L`` with ``L(x cross y) = [x, y]``, no unimodularity check."""
    if a.n != 3:
        raise ValueError("structure operator is defined in dimension three")
    f = a.field
    try:
        s = f.sqrt(abs(f.det(a.g)))
    except NotExactError:
        return structure_operator_matrix(a.as_float())
    ginv = f.inv(a.g)
    eps = f.zeros((3, 3, 3))
    for (i, j, k), sgn in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                           ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
        eps[i, j, k] = f.coerce(sgn)
    W = np.column_stack([s * (ginv @ eps[i, j]) for i, j in _CROSS_PAIRS])
    C = np.column_stack([a.c[i, j] for i, j in _CROSS_PAIRS])
    return C @ f.inv(W)


def structure_operator_3d(a: MetricLieAlgebra) -> StructureOperator3D:
    if a.n != 3:
        raise ValueError("structure operator is defined in dimension three")
    if not is_unimodular(a):
        raise ValueError("structure operator requires unimodularity")
    L = structure_operator_matrix(a)
    # an irrational volume factor forces the float fallback
    exact = L.dtype == object
    f = a.field if exact or not a.field.exact else a.as_float().field
    g = a.g if exact else np.asarray(a.g, dtype=float)
    gL = g @ L
    self_adj = f.all_zero(gL - gL.T, _scale(f, gL))
    info = cubic_structure(f, L)
    if info["kind"] == "complex":
        jt = "Ib"
    elif info["diagonalizable"]:
        jt = "Ia"
    else:
        jt = "II" if info["blocks"] == (2, 1) else "III"
    return StructureOperator3D(L, jt, info, self_adj, f.rank(L))


# ---------------------------------------------------------------------------
# quadratic curvature functionals


@dataclass
class CriticalityVerdict:
    tau_zero: bool
    rho_zero_norm: bool
    s_critical: bool
    t_zero_energy: Any
    el_residual_norm: Any
    critical_t: Any = None
    critical_all_t: bool = False
    t: Any = None
    el_residual_at_t: Any = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "tau_zero": self.tau_zero,
            "rho_norm2_zero": self.rho_zero_norm,
            "s_critical": self.s_critical,
            "t_zero_energy": _js(self.t_zero_energy),
            "el_residual_norm": _js(self.el_residual_norm),
            "critical_t": _js(self.critical_t),
            "critical_all_t": self.critical_all_t,
            "t": _js(self.t),
            "el_residual_at_t": _js(self.el_residual_at_t),
        }


def functional_criticality(a: MetricLieAlgebra, pkg: CurvaturePackage,
                           t: Any = None) -> CriticalityVerdict:
    f = a.field
    tau, r2 = pkg.tau, pkg.rho_norm2
    n = f.coerce(a.n)
    tau_zero = f.is_zero(tau)
    r2_zero = f.is_zero(r2)
    s_crit = f.all_zero(tau * (pkg.rho - (tau / n) * a.g), _scale(f, pkg.rho) ** 2)
    t0 = None
    el_norm = None
    if not tau_zero:
        t0 = -r2 / (tau * tau)
        el_norm = f.max_abs(euler_lagrange(pkg, t0))
    elif r2_zero:
        el_norm = f.max_abs(euler_lagrange(pkg, 0))
    # the Euler-Lagrange tensor is affine in t: E0 + t E1
    E0 = euler_lagrange(pkg, 0)
    E1 = euler_lagrange(pkg, 1) - E0
    scale = _scale(f, pkg.riem) ** 2
    crit_t, crit_all = None, False
    if f.all_zero(E1, scale):
        crit_all = f.all_zero(E0, scale)
    else:
        if f.exact:
            idx = next(i for i in np.ndindex(E1.shape) if E1[i] != 0)
            cand = -E0[idx] / E1[idx]
        else:
            e0, e1 = np.asarray(E0, float).ravel(), np.asarray(E1, float).ravel()
            cand = float(-(e0 @ e1) / (e1 @ e1))
        if f.all_zero(E0 + cand * E1, scale):
            crit_t = cand
    out = CriticalityVerdict(tau_zero, r2_zero, s_crit, t0, el_norm, crit_t, crit_all)
    if t is not None:
        out.t = f.coerce(t)
        out.el_residual_at_t = f.max_abs(euler_lagrange(pkg, out.t))
    return out


# ---------------------------------------------------------------------------
# left-invariant Ricci soliton vector fields


@dataclass
class LeftInvariantSoliton:
    exists: bool
    X: np.ndarray | None
    c: Any
    solution_dim: int
    kind: str | None

    def to_dict(self) -> dict[str, Any]:
        return {"exists": self.exists, "X": _js(self.X), "c": _js(self.c),
                "solution_dim": self.solution_dim, "kind": self.kind}


def _lie_derivative_system(a: MetricLieAlgebra, pkg: CurvaturePackage) -> tuple[np.ndarray, np.ndarray]:
    """Rows of ``L_X g + rho - c g = 0`` in the unknowns ``(X_1..X_n, c)``."""
    f = a.field
    n = a.n
    G = np.einsum("ikm,mj->ijk", pkg.gamma, a.g)  # <nabla_{e_i} e_k, e_j>
    rows, rhs = [], []
    for i in range(n):
        for j in range(i, n):
            row = [G[i, j, k] + G[j, i, k] for k in range(n)] + [-a.g[i, j]]
            rows.append(row)
            rhs.append(-pkg.rho[i, j])
    return f.array(rows), f.array(rhs)


def left_invariant_soliton(a: MetricLieAlgebra, pkg: CurvaturePackage) -> LeftInvariantSoliton:
    """Left-invariant ``X`` and ``c`` with ``L_X g + rho = c g``.

    Among all solutions the one whose ``X`` has the smallest support (ties
    broken lexicographically) is returned.  ``X`` is only determined up to
    Killing fields.
    """
    f = a.field
    n = a.n
    M, b = _lie_derivative_system(a, pkg)
    full = f.solve(M, b)
    if full is None:
        return LeftInvariantSoliton(False, None, None, -1, None)
    dim = M.shape[1] - f.rank(M)
    for size in range(n + 1):
        for S in itertools.combinations(range(n), size):
            cols = list(S) + [n]
            z = f.solve(M[:, cols], b)
            if z is None:
                continue
            X = f.zeros(n)
            for k, idx in enumerate(S):
                X[idx] = z[k]
            c = z[-1]
            return LeftInvariantSoliton(True, X, c, dim, _kind(f, c))
    raise AssertionError("unreachable: full support is consistent")


# ---------------------------------------------------------------------------
# report


@dataclass
class ClassificationReport:
    input_hash: str
    backend: str
    algebra: dict[str, Any]
    summary: dict[str, Any]
    unimodular: bool
    einstein: EinsteinVerdict
    soliton: SolitonVerdict
    locally_symmetric: bool
    wave: WaveVerdict
    criticality: CriticalityVerdict
    left_invariant_soliton: LeftInvariantSoliton
    fingerprint: LieFingerprint
    structure_operator: StructureOperator3D | None = None
    schema_version: str = SCHEMA_VERSION
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "schema_version": self.schema_version,
            "input_hash": self.input_hash,
            "backend": self.backend,
            "algebra": self.algebra,
            "curvature": self.summary,
            "unimodular": self.unimodular,
            "einstein": self.einstein.to_dict(),
            "soliton": self.soliton.to_dict(),
            "locally_symmetric": self.locally_symmetric,
            "wave": self.wave.to_dict(),
            "criticality": self.criticality.to_dict(),
            "left_invariant_soliton": self.left_invariant_soliton.to_dict(),
            "fingerprint": self.fingerprint.to_dict(),
            "structure_operator": self.structure_operator.to_dict() if self.structure_operator else None,
        }
        out.update(self.extra)
        return out


def classification_report(a: MetricLieAlgebra, pkg: CurvaturePackage | None = None,
                          t: Any = None) -> ClassificationReport:
    """Run every verdict.  Raises :class:`AlgebraFormatError` on invalid input."""
    rep = validate(a)
    if not rep.ok:
        raise AlgebraFormatError("; ".join(rep.messages))
    pkg = pkg if pkg is not None else curvature(a)
    uni = is_unimodular(a)
    so = None
    if a.n == 3 and uni:
        so = structure_operator_3d(a)
    summary = {
        "tau": _js(pkg.tau),
        "rho_norm2": _js(pkg.rho_norm2),
        "rho": _js(pkg.rho),
        "ric": _js(pkg.ric),
        "flat": pkg.is_flat(),
        "signature": str(rep.signature),
    }
    return ClassificationReport(
        input_hash=algebra_hash(a),
        backend=a.field.name,
        algebra=to_spec(a),
        summary=summary,
        unimodular=uni,
        einstein=einstein_check(a, pkg),
        soliton=soliton_solve(a, pkg),
        locally_symmetric=locally_symmetric(a, pkg),
        wave=wave_classify(a, pkg),
        criticality=functional_criticality(a, pkg, t),
        left_invariant_soliton=left_invariant_soliton(a, pkg),
        fingerprint=fingerprint(a),
        structure_operator=so,
    )

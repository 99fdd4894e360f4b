"""Basis-independent invariants of small real Lie algebras.

The fingerprint never decides isomorphism in general.  It reports the
derived series, the nilradical and the spectrum of the action of a
complement of the nilradical, and names the four-dimensional solvable
algebra only when those invariants pin it down.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .core import MetricLieAlgebra
from .scalars import Field

__all__ = [
    "LieFingerprint",
    "charpoly",
    "cubic_structure",
    "span_basis",
    "derived_series",
    "is_solvable",
    "nilradical",
    "center",
    "semisimple_part",
    "fingerprint",
    "label_matches",
    "LABEL_DISPLAY",
]

LABEL_DISPLAY = {
    "abelian": "abelian",
    "n4": "𝔫₄",
    "h3xR": "𝔥₃×ℝ",
    "r4": "𝔯₄",
    "r4,lambda": "𝔯₄,λ",
    "r4,mu,lambda": "𝔯₄,μ,λ",
    "r'4,mu,lambda": "𝔯'₄,μ,λ",
    "d4": "𝔡₄",
    "d4,lambda": "𝔡₄,λ",
    "d'4,lambda": "𝔡'₄,λ",
    "h4": "𝔥₄",
    "product": "products",
    "unknown": "unknown",
}


# ---------------------------------------------------------------------------
# polynomials and matrices


def charpoly(f: Field, M: np.ndarray) -> list[Any]:
    """Coefficients of ``det(x I - M)``, highest degree first."""
    n = M.shape[0]
    coeffs = [f.coerce(1)]
    Mk = f.zeros((n, n))
    I = f.eye(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + coeffs[-1] * I
        coeffs.append(-np.trace(M @ Mk) / f.coerce(k))
    return coeffs


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[0] == 0:
        p = p[1:]
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        coef = a[0] / b[0]
        k = len(a) - len(b)
        q[len(q) - 1 - k] = coef
        for i in range(len(b)):
            a[i] -= coef * b[i]
        a = a[1:]
    return q, _poly_trim(a or [Fraction(0)])


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(a), _poly_trim(b)
    while any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return [x / a[0] for x in a]


def _poly_deriv(p: list[Any]) -> list[Any]:
    n = len(p) - 1
    return [p[i] * (n - i) for i in range(n)] or [0 * p[0]]


def _poly_eval_matrix(f: Field, p: Sequence[Any], M: np.ndarray) -> np.ndarray:
    out = f.zeros(M.shape)
    I = f.eye(M.shape[0])
    for coef in p:
        out = out @ M + coef * I
    return out


def _squarefree_part(f: Field, M: np.ndarray) -> list[Any]:
    if f.exact:
        p = charpoly(f, M)
        g = _poly_gcd(p, _poly_deriv(p))
        q, _ = _poly_divmod(p, g)
        return q
    # float: cluster the roots; the mean of a cluster is well conditioned
    w = np.linalg.eigvals(np.asarray(M, dtype=float))
    scale = max(1.0, float(np.max(np.abs(w))) if w.size else 1.0)
    centers: list[list[complex]] = []
    for z in sorted(w, key=lambda z: (z.real, z.imag)):
        for cl in centers:
            if abs(np.mean(cl) - z) <= 1e-5 * scale:
                cl.append(z)
                break
        else:
            centers.append([z])
    roots = [complex(np.mean(cl)) for cl in centers]
    return list(np.real_if_close(np.poly(roots), tol=1e6).astype(float))


def semisimple_part(f: Field, M: np.ndarray) -> np.ndarray:
    """Semisimple part of the Jordan-Chevalley decomposition (Newton iteration)."""
    if M.shape[0] == 0:
        return M.copy()
    p = _squarefree_part(f, M)
    dp = _poly_deriv(p)
    S = M.copy()
    for _ in range(8):
        P = _poly_eval_matrix(f, p, S)
        if f.all_zero(P, float(f.to_float(f.max_abs(M))) or 1.0):
            break
        S = S - P @ f.inv(_poly_eval_matrix(f, dp, S))
    return S


def cubic_structure(f: Field, M: np.ndarray) -> dict[str, Any]:
    """Eigen-structure of a 3x3 matrix: ``kind`` plus Jordan block data.

    ``kind`` is one of ``distinct_real``, ``complex``, ``double``, ``triple``.
    ``diagonalizable`` is exact on the rational backend.
    """
    _, a, b, c = charpoly(f, M)
    disc = 18 * a * b * c - 4 * a ** 3 * c + a * a * b * b - 4 * b ** 3 - 27 * c * c
    scale = max(1.0, float(f.to_float(f.max_abs(M)))) ** 6
    I = f.eye(3)
    out: dict[str, Any] = {"charpoly": [1, a, b, c]}
    disc_zero = f.is_zero(disc) if f.exact else abs(float(disc)) <= 1e3 * f.tol * scale
    if not disc_zero and disc < 0:
        out.update(kind="complex", diagonalizable=False, blocks=None)
    elif not disc_zero:
        out.update(kind="distinct_real", diagonalizable=True, blocks=(1, 1, 1))
    else:
        shift = a * a - 3 * b
        triple = f.is_zero(shift) if f.exact else abs(float(shift)) <= 1e-6 * max(1.0, float(f.to_float(f.max_abs(M)))) ** 2
        if triple:
            r = -a / f.coerce(3)
            N = M - r * I
            rk = f.rank(N)
            blocks = {0: (1, 1, 1), 1: (2, 1), 2: (3,)}[rk]
            out.update(kind="triple", roots=(r, r, r), diagonalizable=rk == 0, blocks=blocks)
        else:
            d = (9 * c - a * b) / (2 * shift)
            s = -a - 2 * d
            diag = f.all_zero((M - d * I) @ (M - s * I), float(f.to_float(f.max_abs(M))) ** 2)
            out.update(kind="double", roots=(d, d, s), double=d, simple=s,
                       diagonalizable=diag, blocks=(1, 1, 1) if diag else (2, 1))
    out["eigenvalues"] = [complex(z) for z in np.linalg.eigvals(np.asarray(M, dtype=float))]
    return out


# ---------------------------------------------------------------------------
# subspaces


def span_basis(f: Field, V: np.ndarray) -> np.ndarray:
    """Columns forming a basis of the column span of ``V``."""
    n = V.shape[0]
    if V.size == 0:
        return f.zeros((n, 0))
    if f.exact:
        from .scalars import _rref

        _, piv = _rref(V)
        return V[:, piv].copy()
    u, s, _ = np.linalg.svd(np.asarray(V, dtype=float), full_matrices=False)
    r = int(np.sum(s > f.tol * max(1.0, float(s[0]))))
    return u[:, :r].copy()


def _brackets_of(a: MetricLieAlgebra, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    n = a.n
    cols = np.einsum("ia,jb,ijk->kab", U, V, a.c).reshape(n, -1)
    return span_basis(a.field, cols)


def _coords(f: Field, B: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Coordinates of the columns of ``X`` in the basis ``B`` (assumed in span)."""
    G = B.T @ B
    return f.inv(G) @ (B.T @ X)


def _complement(f: Field, B: np.ndarray) -> np.ndarray:
    """Standard basis vectors completing ``B`` to a basis."""
    n = B.shape[0]
    cols = [B[:, k] for k in range(B.shape[1])]
    extra = []
    I = f.eye(n)
    for i in range(n):
        trial = np.column_stack(cols + extra + [I[:, i]]) if cols or extra else I[:, [i]]
        if f.rank(trial) > len(cols) + len(extra):
            extra.append(I[:, i])
    return np.column_stack(extra) if extra else f.zeros((n, 0))


def derived_series(a: MetricLieAlgebra) -> list[int]:
    f = a.field
    cur = f.eye(a.n)
    dims = [a.n]
    while cur.shape[1]:
        nxt = _brackets_of(a, cur, cur)
        if nxt.shape[1] == cur.shape[1]:
            break
        dims.append(nxt.shape[1])
        cur = nxt
    return dims


def is_solvable(a: MetricLieAlgebra) -> bool:
    return derived_series(a)[-1] == 0


def _is_nilpotent_subalgebra(a: MetricLieAlgebra, V: np.ndarray) -> bool:
    cur = V
    for _ in range(a.n + 1):
        if cur.shape[1] == 0:
            return True
        nxt = _brackets_of(a, V, cur)
        if nxt.shape[1] == cur.shape[1]:
            return False
        cur = nxt
    return cur.shape[1] == 0


def center(a: MetricLieAlgebra) -> np.ndarray:
    n = a.n
    rows = np.concatenate([a.c[:, j, :].T for j in range(n)], axis=0)
    return a.field.nullspace(rows)


def nilradical(a: MetricLieAlgebra) -> np.ndarray:
    """Basis (columns) of the maximal nilpotent ideal."""
    f = a.field
    if not is_solvable(a):
        return center(a)
    D = _brackets_of(a, f.eye(a.n), f.eye(a.n))
    if D.shape[1] == 0:
        return f.eye(a.n)
    W = _complement(f, D)
    # x = sum s_k w_k is ad-nilpotent iff sum s_k S_k = 0, S_k the semisimple
    # part of ad_{w_k} on the derived algebra (these commute for n <= 4)
    cols = []
    for k in range(W.shape[1]):
        T = _coords(f, D, a.ad(W[:, k]) @ D)
        cols.append(semisimple_part(f, T).reshape(-1))
    K = f.nullspace(np.column_stack(cols))
    N = np.column_stack([D, W @ K]) if K.shape[1] else D
    return span_basis(f, N)


# ---------------------------------------------------------------------------
# fingerprint


@dataclass
class LieFingerprint:
    derived_series_dims: list[int]
    nilradical_dim: int
    unimodular: bool
    solvable: bool
    ad_spectrum: list[tuple[float, float]]
    label_guess: str
    label_params: dict[str, float] = field(default_factory=dict)
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "derived_series_dims": list(self.derived_series_dims),
            "nilradical_dim": self.nilradical_dim,
            "unimodular": self.unimodular,
            "solvable": self.solvable,
            "ad_spectrum": [list(z) for z in self.ad_spectrum],
            "label_guess": self.label_guess,
            "label_display": LABEL_DISPLAY.get(self.label_guess, self.label_guess),
            "label_params": dict(self.label_params),
            "detail": self.detail,
        }


def _normalized_spectrum(eigs: Sequence[complex]) -> list[tuple[float, float]]:
    """Eigenvalue multiset up to a nonzero real scale, in a canonical form."""
    eigs = [complex(z) for z in eigs]
    m = max((abs(z) for z in eigs), default=0.0)
    if m == 0:
        return [(0.0, 0.0) for _ in eigs]
    reals = [z.real for z in eigs if abs(z.imag) <= 1e-9 * m]
    top = max((abs(r) for r in reals), default=0.0)
    pivots = [r for r in reals if abs(abs(r) - top) <= 1e-9 * m] if top > 1e-9 * m else [m, -m]

    def form(piv: float) -> list[tuple[float, float]]:
        out = sorted(((z / piv).real, abs((z / piv).imag)) for z in eigs)
        return [(round(x, 10) + 0.0, round(y, 10) + 0.0) for x, y in out]

    return min(form(p) for p in pivots)


def _is_unimodular(a: MetricLieAlgebra) -> bool:
    f = a.field
    return all(f.is_zero(sum(a.c[i, k, k] for k in range(a.n))) for i in range(a.n))


def _killing(a: MetricLieAlgebra) -> np.ndarray:
    ads = [a.ad_basis(i) for i in range(a.n)]
    return a.field.array([[np.trace(x @ y) for y in ads] for x in ads])


def fingerprint(a: MetricLieAlgebra) -> LieFingerprint:
    f = a.field
    dims = derived_series(a)
    solv = dims[-1] == 0
    N = nilradical(a)
    uni = _is_unimodular(a)
    fp = LieFingerprint(dims, N.shape[1], uni, solv, [], "unknown")
    n = a.n
    if dims == [n, 0] or (len(dims) == 1 and n == 0):
        fp.label_guess, fp.detail = "abelian", "abelian"
        return fp
    if not solv:
        from .core import _inertia

        K = _killing(a)
        D = span_basis(f, np.einsum("ia,jb,ijk->kab", f.eye(n), f.eye(n), a.c).reshape(n, -1))
        sig = _inertia(f, D.T @ K @ D)
        simple = "su(2)" if sig.minus == 3 else "sl(2,R)"
        fp.label_guess = "product" if n == 4 else simple
        fp.detail = simple + ("xR" if n == 4 else "")
        return fp
    if N.shape[1] == n:
        if n == 4:
            fp.label_guess = {1: "h3xR", 2: "n4"}.get(dims[1], "unknown")
        else:
            fp.label_guess = "h3"
        fp.detail = fp.label_guess
        return fp

    W = _complement(f, N)
    if n == 3:
        T = _coords(f, N, a.ad(W[:, 0]) @ N) if W.shape[1] == 1 else None
        if T is not None:
            fp.ad_spectrum = _normalized_spectrum(np.linalg.eigvals(np.asarray(T, dtype=float)))
        if uni and T is not None:
            tr, det = np.trace(T), f.det(T)
            disc = tr * tr - 4 * det
            fp.label_guess = "e(2)" if disc < 0 else "e(1,1)"
        fp.detail = fp.label_guess
        return fp

    if N.shape[1] == 2:
        Ts = [_coords(f, N, a.ad(W[:, k]) @ N) for k in range(W.shape[1])]
        complex_pair = any(float(np.trace(T) ** 2 - 4 * f.det(T)) < 0 for T in Ts)
        fp.label_guess = "unknown" if complex_pair else "product"
        fp.detail = "aff(C)" if complex_pair else "aff(R)xaff(R)"
        eigs = np.concatenate([np.linalg.eigvals(np.asarray(T, dtype=float)) for T in Ts])
        fp.ad_spectrum = _normalized_spectrum(eigs)
        return fp

    # nilradical of dimension three, complement spanned by x
    x = W[:, 0]
    T = _coords(f, N, a.ad(x) @ N)
    NN = _brackets_of(a, N, N)
    if NN.shape[1] == 0:
        _label_abelian_nilradical(f, T, fp)
    else:
        _label_heisenberg_nilradical(a, N, NN, x, fp)
    return fp


def _label_abelian_nilradical(f: Field, T: np.ndarray, fp: LieFingerprint) -> None:
    info = cubic_structure(f, T)
    eigs = info["eigenvalues"]
    fp.ad_spectrum = _normalized_spectrum(eigs)
    tol = 1e-9 * max(1.0, max(abs(z) for z in eigs))
    if info["kind"] == "complex":
        real = min(eigs, key=lambda z: abs(z.imag)).real
        pair = max(eigs, key=lambda z: z.imag)
        if abs(real) <= tol:
            fp.label_guess, fp.detail = "product", "r'3xR"
            return
        mu, lam = real / pair.imag, pair.real / pair.imag
        if mu < 0:
            mu, lam = -mu, -lam
        fp.label_guess, fp.label_params = "r'4,mu,lambda", {"mu": mu, "lambda": lam}
        fp.detail = "r'4,mu,lambda"
        return
    if info["kind"] == "triple":
        fp.label_guess = {(3,): "r4", (2, 1): "r4,lambda", (1, 1, 1): "r4,mu,lambda"}[info["blocks"]]
        if fp.label_guess == "r4,lambda":
            fp.label_params = {"lambda": 1.0}
        elif fp.label_guess == "r4,mu,lambda":
            fp.label_params = {"mu": 1.0, "lambda": 1.0}
        fp.detail = fp.label_guess
        return
    reals = sorted(z.real for z in eigs)
    if info["kind"] == "double" and not info["diagonalizable"]:
        d, s = float(info["double"]), float(info["simple"])
        if abs(s) <= tol:
            fp.label_guess, fp.detail = "product", "r3xR"
            return
        fp.label_guess, fp.label_params, fp.detail = "r4,lambda", {"lambda": d / s}, "r4,lambda"
        return
    if any(abs(r) <= tol for r in reals):
        fp.label_guess, fp.detail = "product", "3-dimensional x R"
        return
    sp = [p[0] for p in fp.ad_spectrum]
    others = sorted(sp)
    others.remove(1.0) if 1.0 in others else others.pop()
    fp.label_guess = "r4,mu,lambda"
    fp.label_params = {"mu": others[0], "lambda": others[1]}
    fp.detail = "r4,mu,lambda"


def _label_heisenberg_nilradical(a: MetricLieAlgebra, N: np.ndarray, NN: np.ndarray,
                                 x: np.ndarray, fp: LieFingerprint) -> None:
    f = a.field
    # basis p, q of a complement of the center of N inside N
    comp = []
    for k in range(N.shape[1]):
        trial = np.column_stack([NN] + comp + [N[:, k]])
        if f.rank(trial) > 1 + len(comp):
            comp.append(N[:, k])
    B = np.column_stack(comp + [NN[:, 0]])
    T = _coords(f, B, a.ad(x) @ B)[:2, :2]
    eigs = np.linalg.eigvals(np.asarray(T, dtype=float))
    fp.ad_spectrum = _normalized_spectrum(list(eigs) + [eigs.sum()])
    tr, det = np.trace(T), f.det(T)
    disc = tr * tr - 4 * det
    scale = max(1.0, float(f.to_float(f.max_abs(T)))) ** 2
    disc_zero = f.is_zero(disc) if f.exact else abs(float(disc)) <= 1e-9 * scale
    if not disc_zero and disc < 0:
        fp.label_guess, fp.label_params = "d'4,lambda", {"lambda": abs(float(tr)) / np.sqrt(-float(disc))}
        fp.detail = "d'4,lambda"
        return
    if disc_zero:
        r = tr / f.coerce(2)
        if f.all_zero(T - r * f.eye(2), scale):
            fp.label_guess, fp.label_params = "d4,lambda", {"lambda": 0.5}
        else:
            fp.label_guess = "h4"
        fp.detail = fp.label_guess
        return
    re = sorted(float(z.real) for z in eigs)
    s = re[0] + re[1]
    if abs(s) <= 1e-9 * max(1.0, abs(re[0]), abs(re[1])):
        fp.label_guess = "d4"
    else:
        fp.label_guess, fp.label_params = "d4,lambda", {"lambda": max(re[0] / s, re[1] / s)}
    fp.detail = fp.label_guess


def label_matches(fp: LieFingerprint, label: str, params: dict[str, float] | None = None,
                  tol: float = 1e-8) -> bool:
    """Whether the fingerprint is compatible with a stated algebra label."""
    params = {k: float(v) for k, v in (params or {}).items()}
    if fp.label_guess != label:
        return False

    def close(x: float, y: float) -> bool:
        return abs(x - y) <= tol * max(1.0, abs(x), abs(y))

    if label == "r4,mu,lambda":
        want = _normalized_spectrum([1.0, params["mu"], params["lambda"]])
        return all(close(u[0], v[0]) for u, v in zip(want, fp.ad_spectrum))
    if label == "r'4,mu,lambda":
        mu, lam = params["mu"], params["lambda"]
        if mu < 0:
            mu, lam = -mu, -lam
        return close(mu, fp.label_params["mu"]) and close(lam, fp.label_params["lambda"])
    if label == "r4,lambda":
        return close(params["lambda"], fp.label_params["lambda"])
    if label == "d4,lambda":
        lam = params["lambda"]
        return close(max(lam, 1 - lam), fp.label_params["lambda"])
    if label == "d'4,lambda":
        return close(abs(params["lambda"]), fp.label_params["lambda"])
    return True

"""Metric Lie algebras: data model, validation, basis changes and constructors.

Structure constants are stored densely as ``c[i, j, k]`` with
``[e_i, e_j] = sum_k c[i, j, k] e_k`` (0-based in code, 1-based in every
user-facing message and file).  The metric is the Gram matrix ``g[i, j]``.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .scalars import (
    FLOAT,
    RATIONAL,
    Field,
    FloatField,
    NotExactError,
    parse_scalar,
    scalar_to_json,
)

__all__ = [
    "MetricLieAlgebra",
    "Signature",
    "ValidationReport",
    "AlgebraFormatError",
    "algebra",
    "validate",
    "change_basis",
    "direct_product",
    "semidirect_extension",
    "restricted_signature",
    "scale_metric",
    "orthonormal",
    "null_pair_12",
    "null_pair_34",
    "to_spec",
    "from_spec",
    "load_algebra",
    "dump_algebra",
    "algebra_hash",
]


class AlgebraFormatError(ValueError):
    """Malformed algebra specification or invalid algebra."""


@dataclass(frozen=True)
class Signature:
    plus: int
    minus: int
    zero: int = 0

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.plus, self.minus, self.zero)

    def __str__(self) -> str:
        return f"({self.plus},{self.minus},{self.zero})"


@dataclass(frozen=True, eq=False)
class MetricLieAlgebra:
    """Structure constants plus a nondegenerate metric, over one scalar field."""

    c: np.ndarray
    g: np.ndarray
    field: Field = RATIONAL
    note: str = ""

    def __post_init__(self) -> None:
        n = self.g.shape[0]
        if self.g.shape != (n, n) or self.c.shape != (n, n, n):
            raise AlgebraFormatError(
                f"shape mismatch: c {self.c.shape}, g {self.g.shape}")
        if n not in (3, 4):
            raise AlgebraFormatError(f"dimension must be 3 or 4, got {n}")
        self.c.setflags(write=False)
        self.g.setflags(write=False)

    @property
    def n(self) -> int:
        return self.g.shape[0]

    def bracket(self, x: Sequence[Any], y: Sequence[Any]) -> np.ndarray:
        x = self.field.array(x)
        y = self.field.array(y)
        return np.einsum("i,j,ijk->k", x, y, self.c)

    def ad(self, x: Sequence[Any]) -> np.ndarray:
        """Matrix of ``ad_x`` acting on column coordinate vectors."""
        x = self.field.array(x)
        return np.einsum("i,ijk->kj", x, self.c)

    def ad_basis(self, i: int) -> np.ndarray:
        return self.c[i].T.copy()

    def inner(self, x: Sequence[Any], y: Sequence[Any]) -> Any:
        return self.field.array(x) @ self.g @ self.field.array(y)

    def with_field(self, field: Field) -> "MetricLieAlgebra":
        if field is self.field:
            return self
        if field.exact and not self.field.exact:
            raise NotExactError("cannot convert a float algebra to exact arithmetic")
        return MetricLieAlgebra(field.array(self.c), field.array(self.g), field, self.note)

    def as_float(self, tol: float | None = None) -> "MetricLieAlgebra":
        f = FloatField(tol) if tol is not None else (
            self.field if isinstance(self.field, FloatField) else FLOAT)
        return MetricLieAlgebra(np.asarray(self.c, dtype=float),
                                np.asarray(self.g, dtype=float), f, self.note)

    def brackets(self) -> dict[tuple[int, int], list[Any]]:
        """Nonzero brackets ``[e_i, e_j]`` with ``i < j`` (1-based keys)."""
        out = {}
        for i, j in itertools.combinations(range(self.n), 2):
            v = self.c[i, j]
            if not self.field.all_zero(v):
                out[(i + 1, j + 1)] = list(v)
        return out

    def __repr__(self) -> str:
        parts = []
        names = [f"e{i + 1}" for i in range(self.n)]
        for (i, j), v in self.brackets().items():
            terms = [f"{_fmt(coef)}*{names[k]}" for k, coef in enumerate(v)
                     if not self.field.is_zero(coef)]
            parts.append(f"[{names[i - 1]},{names[j - 1]}]={' + '.join(terms)}")
        return f"MetricLieAlgebra(n={self.n}, {self.field.name}, " + "; ".join(parts) + ")"


def _fmt(x: Any) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return f"{float(x):.6g}"


# ---------------------------------------------------------------------------
# constructors


def algebra(n: int, metric: Any, brackets: Mapping[tuple[int, int], Sequence[Any]],
            field: Field = RATIONAL, note: str = "") -> MetricLieAlgebra:
    """Build an algebra from 1-based bracket vectors.

    ``brackets[(i, j)]`` is the coordinate vector of ``[e_i, e_j]``; the
    antisymmetric completion is implied.
    """
    c = field.zeros((n, n, n))
    for (i, j), vec in brackets.items():
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise AlgebraFormatError(f"bad bracket index ({i},{j})")
        if len(vec) != n:
            raise AlgebraFormatError(f"bracket ({i},{j}) needs {n} coefficients")
        for k, v in enumerate(vec):
            v = field.coerce(v)
            c[i - 1, j - 1, k] = v
            c[j - 1, i - 1, k] = -v
    g = field.array(metric)
    return MetricLieAlgebra(c, g, field, note)


def orthonormal(n: int, timelike: Iterable[int] = ()) -> list[list[int]]:
    """Diagonal metric with -1 at the given 1-based positions."""
    neg = set(timelike)
    return [[(-1 if i + 1 in neg else 1) if i == j else 0 for j in range(n)]
            for i in range(n)]


def null_pair_12(n: int = 4) -> list[list[int]]:
    """Metric with <u1,u2> = 1 and the remaining basis vectors unit spacelike."""
    g = [[0] * n for _ in range(n)]
    g[0][1] = g[1][0] = 1
    for k in range(2, n):
        g[k][k] = 1
    return g


def null_pair_34() -> list[list[int]]:
    """Metric with <u1,u1> = <u2,u2> = <u3,u4> = 1."""
    return [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]


# ---------------------------------------------------------------------------
# validation


def _inertia(field: Field, S: np.ndarray) -> Signature:
    """Inertia of a symmetric matrix."""
    k = S.shape[0]
    if k == 0:
        return Signature(0, 0, 0)
    if not field.exact:
        w = np.linalg.eigvalsh(np.asarray(S, dtype=float))
        cut = field.tol * max(1.0, float(np.max(np.abs(w))))
        return Signature(int(np.sum(w > cut)), int(np.sum(w < -cut)),
                         int(np.sum(np.abs(w) <= cut)))
    # exact congruence diagonalization
    A = np.array(S, dtype=object, copy=True)
    plus = minus = 0
    size = k
    while size:
        d = next((i for i in range(size) if A[i, i] != 0), None)
        if d is None:
            pair = next(((i, j) for i in range(size) for j in range(i + 1, size)
                         if A[i, j] != 0), None)
            if pair is None:
                break
            i, j = pair
            A[i, :size] = A[i, :size] + A[j, :size]
            A[:size, i] = A[:size, i] + A[:size, j]
            continue
        A[[d, size - 1]] = A[[size - 1, d]]
        A[:, [d, size - 1]] = A[:, [size - 1, d]]
        p = A[size - 1, size - 1]
        if p > 0:
            plus += 1
        else:
            minus += 1
        for i in range(size - 1):
            if A[i, size - 1] != 0:
                f = A[i, size - 1] / p
                A[i, :size] = A[i, :size] - f * A[size - 1, :size]
                A[:size, i] = A[:size, i] - f * A[:size, size - 1]
        size -= 1
    return Signature(plus, minus, k - plus - minus)


@dataclass
class ValidationReport:
    antisymmetric: bool
    jacobi: bool
    metric_symmetric: bool
    nondegenerate: bool
    signature: Signature
    jacobi_failure: tuple[int, int, int, int] | None = None
    antisymmetry_failure: tuple[int, int, int] | None = None
    messages: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.antisymmetric and self.jacobi and self.metric_symmetric and self.nondegenerate

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "antisymmetric": self.antisymmetric,
            "jacobi": self.jacobi,
            "jacobi_failure": list(self.jacobi_failure) if self.jacobi_failure else None,
            "metric_symmetric": self.metric_symmetric,
            "nondegenerate": self.nondegenerate,
            "signature": list(self.signature.as_tuple()),
            "messages": list(self.messages),
        }


def jacobiator(a: MetricLieAlgebra) -> np.ndarray:
    """``J[i,j,k,l]``: the e_l component of the cyclic Jacobi sum."""
    c = a.c
    t = np.einsum("ijm,mkl->ijkl", c, c)
    return t + np.transpose(t, (1, 2, 0, 3)) + np.transpose(t, (2, 0, 1, 3))


def validate(a: MetricLieAlgebra) -> ValidationReport:
    f = a.field
    n = a.n
    msgs: list[str] = []
    scale = max(1.0, float(f.to_float(f.max_abs(a.c))))

    anti_fail = None
    for i, j, k in itertools.product(range(n), repeat=3):
        if not f.is_zero(a.c[i, j, k] + a.c[j, i, k]):
            anti_fail = (i + 1, j + 1, k + 1)
            msgs.append(f"antisymmetry fails at (i,j,k)={anti_fail}")
            break

    J = jacobiator(a)
    jac_fail = None
    for idx in itertools.product(range(n), repeat=4):
        if not f.all_zero(J[idx], scale * scale):
            jac_fail = tuple(i + 1 for i in idx)
            msgs.append(f"Jacobi identity fails at (i,j,k,l)={jac_fail}")
            break

    sym = f.all_zero(a.g - a.g.T, float(f.to_float(f.max_abs(a.g))))
    if not sym:
        msgs.append("metric is not symmetric")
    sig = _inertia(f, (a.g + a.g.T) / 2 if not f.exact else _sym_exact(a.g))
    nondeg = sig.zero == 0
    if not nondeg:
        msgs.append("metric is degenerate")
    return ValidationReport(anti_fail is None, jac_fail is None, sym, nondeg, sig,
                            jac_fail, anti_fail, msgs)


def _sym_exact(g: np.ndarray) -> np.ndarray:
    return (g + g.T) * Fraction(1, 2)


# ---------------------------------------------------------------------------
# basis changes and derived constructions


def change_basis(a: MetricLieAlgebra, M: Any) -> MetricLieAlgebra:
    """Express the algebra in the basis given by the columns of ``M``."""
    f = a.field
    M = f.array(M)
    if M.shape != (a.n, a.n) or f.is_zero(f.det(M)):
        raise AlgebraFormatError("not a basis")
    Minv = f.inv(M)
    c = np.einsum("ia,jb,ijk,dk->abd", M, M, a.c, Minv)
    g = M.T @ a.g @ M
    return MetricLieAlgebra(c, g, f, a.note)


def scale_metric(a: MetricLieAlgebra, s: Any) -> MetricLieAlgebra:
    """Same brackets, metric multiplied by ``s``."""
    s = a.field.coerce(s)
    return MetricLieAlgebra(a.c.copy(), a.g * s, a.field, a.note)


def direct_product(a: MetricLieAlgebra, k: int, signs: Sequence[int] | None = None
                   ) -> MetricLieAlgebra:
    """Append ``k`` central basis vectors with metric entries ``signs``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    signs = list(signs) if signs is not None else [1] * k
    if len(signs) != k or any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be k values of +1 or -1")
    f = a.field
    n = a.n + k
    c = f.zeros((n, n, n))
    c[: a.n, : a.n, : a.n] = a.c
    g = f.zeros((n, n))
    g[: a.n, : a.n] = a.g
    for t, s in enumerate(signs):
        g[a.n + t, a.n + t] = f.coerce(s)
    return MetricLieAlgebra(c, g, f, a.note)


def semidirect_extension(base: MetricLieAlgebra, A: Any, metric: Any,
                         note: str = "") -> MetricLieAlgebra:
    """Extend ``base`` by one vector ``e_{n+1}`` with ``[x, e_{n+1}] = A x``.

    ``A`` must be a derivation of ``base`` (checked through Jacobi by
    :func:`validate`).
    """
    f = base.field
    A = f.array(A)
    n = base.n + 1
    c = f.zeros((n, n, n))
    c[: base.n, : base.n, : base.n] = base.c
    for i in range(base.n):
        c[i, n - 1, : base.n] = A[:, i]
        c[n - 1, i, : base.n] = -A[:, i]
    return MetricLieAlgebra(c, f.array(metric), f, note or base.note)


def restricted_signature(a: MetricLieAlgebra, subspace: Any) -> Signature:
    """Signature of the metric restricted to a subspace.

    ``subspace`` is either a list of 1-based basis indices or an ``n x k``
    matrix whose columns span the subspace.
    """
    f = a.field
    if isinstance(subspace, (list, tuple)) and all(isinstance(i, int) for i in subspace):
        V = f.zeros((a.n, len(subspace)))
        for col, i in enumerate(subspace):
            if not 1 <= i <= a.n:
                raise ValueError(f"basis index {i} out of range")
            V[i - 1, col] = f.coerce(1)
    else:
        V = f.array(subspace)
        if V.ndim == 1:
            V = V.reshape(-1, 1)
    if V.shape[0] != a.n:
        raise ValueError("spanning vectors have the wrong length")
    if f.rank(V) != V.shape[1]:
        raise ValueError("spanning vectors are linearly dependent")
    G = V.T @ a.g @ V
    return _inertia(f, G)


# ---------------------------------------------------------------------------
# algebra specification files


def to_spec(a: MetricLieAlgebra) -> dict[str, Any]:
    entries = []
    for i, j in itertools.combinations(range(a.n), 2):
        for k in range(a.n):
            v = a.c[i, j, k]
            if not a.field.is_zero(v) or (not a.field.exact and v != 0):
                entries.append({"i": i + 1, "j": j + 1, "k": k + 1, "v": scalar_to_json(v)})
    return {
        "dim": a.n,
        "metric": [[scalar_to_json(v) for v in row] for row in a.g],
        "brackets": entries,
        "scalar": a.field.name,
        "note": a.note,
    }


def from_spec(spec: Mapping[str, Any], field: Field | None = None) -> MetricLieAlgebra:
    """Parse the JSON algebra format; raises :class:`AlgebraFormatError`."""
    try:
        n = int(spec["dim"])
        metric = spec["metric"]
        entries = spec.get("brackets", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise AlgebraFormatError(f"missing or malformed field: {exc}") from None
    if field is None:
        kind = spec.get("scalar", "rational")
        if kind == "rational":
            field = RATIONAL
        elif kind == "float":
            field = FLOAT
        else:
            raise AlgebraFormatError(f"unknown scalar backend {kind!r}")
    if n not in (3, 4):
        raise AlgebraFormatError(f"dim must be 3 or 4, got {n}")
    if len(metric) != n or any(len(row) != n for row in metric):
        raise AlgebraFormatError(f"metric must be {n}x{n}")
    try:
        g = field.array([[parse_scalar(v) for v in row] for row in metric])
    except (TypeError, ValueError) as exc:
        raise AlgebraFormatError(f"metric entry: {exc}") from None
    c = field.zeros((n, n, n))
    for pos, e in enumerate(entries):
        try:
            i, j, k = int(e["i"]), int(e["j"]), int(e["k"])
            v = field.coerce(parse_scalar(e["v"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise AlgebraFormatError(f"bracket entry #{pos + 1}: {exc}") from None
        if not (1 <= i < j <= n and 1 <= k <= n):
            raise AlgebraFormatError(
                f"bracket entry #{pos + 1}: indices must satisfy 1 <= i < j <= {n}")
        c[i - 1, j - 1, k - 1] = v
        c[j - 1, i - 1, k - 1] = -v
    return MetricLieAlgebra(c, g, field, str(spec.get("note", "")))


def load_algebra(path: str, field: Field | None = None) -> MetricLieAlgebra:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(
            f"{path}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})") from None
    return from_spec(spec, field)


def dump_algebra(a: MetricLieAlgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_spec(a), fh, indent=2, ensure_ascii=False)
        fh.write("\n")


def algebra_hash(a: MetricLieAlgebra) -> str:
    payload = json.dumps(to_spec(a), sort_keys=True, ensure_ascii=True)
    return hashlib.sha256(payload.encode()).hexdigest()

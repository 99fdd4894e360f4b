"""Scalar backends.

Every computation in the package is written against a :class:`Field`, which
owns array construction, zero tests and the small amount of linear algebra the
pipeline needs.  Two backends exist:

* :class:`RationalField` stores ``fractions.Fraction`` values in numpy object
  arrays.  Arithmetic is exact and equality is exact.
* :class:`FloatField` stores ``float64`` arrays.  Two numbers are equal when
  ``|a - b| <= tol * max(1, |a|, |b|)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational, Real
from typing import Any, Iterable, Sequence

import numpy as np

__all__ = [
    "Field",
    "RationalField",
    "FloatField",
    "RATIONAL",
    "FLOAT",
    "NotExactError",
    "parse_scalar",
    "field_for",
    "scalar_to_json",
]

DEFAULT_TOL = 1e-9


class NotExactError(ValueError):
    """Raised when an exact result (e.g. a square root) is not rational."""


def parse_scalar(value: Any) -> Fraction | float:
    """Parse a user supplied scalar.

    Strings such as ``"-1/2"`` (ASCII or Unicode minus) become fractions,
    integers and fractions stay exact, floats stay floats.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        text = value.strip().replace("−", "-").replace(" ", "")
        if not text:
            raise ValueError("empty scalar")
        try:
            return Fraction(text)
        except ValueError:
            return float(text)
    if isinstance(value, Real):
        return float(value)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def scalar_to_json(x: Any) -> str | float | int:
    """Serialize a scalar: fractions as ``"p/q"`` strings, floats as numbers."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (np.floating, float)):
        return float(x)
    if isinstance(x, (np.integer, int)):
        return int(x)
    raise TypeError(f"not a scalar: {x!r}")


class Field:
    """Common interface of the two scalar backends."""

    name: str = "abstract"
    exact: bool = False
    tol: float = 0.0

    # construction -----------------------------------------------------
    def coerce(self, x: Any) -> Any:
        raise NotImplementedError

    def array(self, data: Any) -> np.ndarray:
        raise NotImplementedError

    def zeros(self, shape: int | Sequence[int]) -> np.ndarray:
        raise NotImplementedError

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.coerce(1)
        return out

    # comparisons ------------------------------------------------------
    def is_zero(self, x: Any) -> bool:
        raise NotImplementedError

    def eq(self, a: Any, b: Any) -> bool:
        raise NotImplementedError

    def all_zero(self, arr: Any, scale: float = 1.0) -> bool:
        raise NotImplementedError

    def sign(self, x: Any) -> int:
        if self.is_zero(x):
            return 0
        return 1 if x > 0 else -1

    def max_abs(self, arr: Any) -> Any:
        arr = np.asarray(arr)
        if arr.size == 0:
            return self.coerce(0)
        return max(abs(v) for v in arr.flat)

    # numerics ---------------------------------------------------------
    def sqrt(self, x: Any) -> Any:
        raise NotImplementedError

    def to_float(self, arr: Any) -> np.ndarray:
        return np.asarray(arr, dtype=float)

    def rank(self, M: np.ndarray) -> int:
        raise NotImplementedError

    def nullspace(self, M: np.ndarray) -> np.ndarray:
        """Columns spanning ``{x : M x = 0}``."""
        raise NotImplementedError

    def solve(self, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """One solution of ``A x = b`` or ``None`` when inconsistent."""
        raise NotImplementedError

    def inv(self, M: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def det(self, M: np.ndarray) -> Any:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


def _rref(M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Exact reduced row echelon form of a Fraction object matrix."""
    A = np.array(M, dtype=object, copy=True)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if A[i, c] != 0), None)
        if p is None:
            continue
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = A[r] / A[r, c]
        for i in range(rows):
            if i != r and A[i, c] != 0:
                A[i] = A[i] - A[i, c] * A[r]
        pivots.append(c)
        r += 1
    return A, pivots


class RationalField(Field):
    name = "rational"
    exact = True
    tol = 0.0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("rational")

    def coerce(self, x: Any) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, np.integer)):
            return Fraction(int(x))
        if isinstance(x, Rational):
            return Fraction(int(x.numerator), int(x.denominator))
        if isinstance(x, str):
            v = parse_scalar(x)
            if isinstance(v, Fraction):
                return v
            raise NotExactError(f"{x!r} is not a rational literal")
        if isinstance(x, (float, np.floating)):
            if not math.isfinite(x):
                raise NotExactError(f"{x!r} is not finite")
            # shortest decimal representation, so 0.1 means 1/10
            return Fraction(repr(float(x)))
        raise NotExactError(f"cannot represent {x!r} exactly")

    def array(self, data: Any) -> np.ndarray:
        arr = np.array(data, dtype=object)
        flat = [self.coerce(v) for v in arr.flat]
        out = np.empty(arr.shape, dtype=object)
        for idx, v in zip(np.ndindex(arr.shape), flat):
            out[idx] = v
        return out

    def zeros(self, shape: int | Sequence[int]) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def is_zero(self, x: Any) -> bool:
        return x == 0

    def eq(self, a: Any, b: Any) -> bool:
        return a == b

    def all_zero(self, arr: Any, scale: float = 1.0) -> bool:
        return all(v == 0 for v in np.asarray(arr, dtype=object).flat)

    def sqrt(self, x: Any) -> Fraction:
        x = self.coerce(x)
        if x < 0:
            raise NotExactError(f"negative radicand {x}")
        p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
        if p * p == x.numerator and q * q == x.denominator:
            return Fraction(p, q)
        raise NotExactError(f"sqrt({x}) is irrational")

    def rank(self, M: np.ndarray) -> int:
        if M.size == 0:
            return 0
        return len(_rref(M)[1])

    def nullspace(self, M: np.ndarray) -> np.ndarray:
        rows, cols = M.shape
        R, piv = _rref(M) if rows else (M, [])
        free = [c for c in range(cols) if c not in piv]
        basis = self.zeros((cols, len(free)))
        for k, f in enumerate(free):
            basis[f, k] = Fraction(1)
            for r, p in enumerate(piv):
                basis[p, k] = -R[r, f]
        return basis

    def solve(self, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        rows, cols = A.shape
        aug = np.concatenate([A, np.asarray(b, dtype=object).reshape(rows, 1)], axis=1)
        R, piv = _rref(aug)
        if cols in piv:
            return None
        x = self.zeros(cols)
        for r, p in enumerate(piv):
            x[p] = R[r, cols]
        return x

    def inv(self, M: np.ndarray) -> np.ndarray:
        n = M.shape[0]
        R, piv = _rref(np.concatenate([M, self.eye(n)], axis=1))
        if piv[:n] != list(range(n)):
            raise np.linalg.LinAlgError("singular matrix")
        return R[:, n:]

    def det(self, M: np.ndarray) -> Fraction:
        A = np.array(M, dtype=object, copy=True)
        n = A.shape[0]
        d = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if A[i, c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                A[[c, p]] = A[[p, c]]
                d = -d
            d *= A[c, c]
            for i in range(c + 1, n):
                if A[i, c] != 0:
                    A[i] = A[i] - (A[i, c] / A[c, c]) * A[c]
        return d

    def __repr__(self) -> str:
        return "RationalField()"


class FloatField(Field):
    name = "float"
    exact = False

    def __init__(self, tol: float = DEFAULT_TOL):
        if not tol > 0:
            raise ValueError("tolerance must be positive")
        self.tol = float(tol)

    def coerce(self, x: Any) -> float:
        if isinstance(x, str):
            return float(parse_scalar(x))
        return float(x)

    def array(self, data: Any) -> np.ndarray:
        return np.array(data, dtype=float)

    def zeros(self, shape: int | Sequence[int]) -> np.ndarray:
        return np.zeros(shape, dtype=float)

    def is_zero(self, x: Any) -> bool:
        return abs(float(x)) <= self.tol

    def eq(self, a: Any, b: Any) -> bool:
        a, b = float(a), float(b)
        return abs(a - b) <= self.tol * max(1.0, abs(a), abs(b))

    def all_zero(self, arr: Any, scale: float = 1.0) -> bool:
        arr = np.asarray(arr, dtype=float)
        if arr.size == 0:
            return True
        return float(np.max(np.abs(arr))) <= self.tol * max(1.0, float(scale))

    def max_abs(self, arr: Any) -> float:
        arr = np.asarray(arr, dtype=float)
        return float(np.max(np.abs(arr))) if arr.size else 0.0

    def sqrt(self, x: Any) -> float:
        x = float(x)
        if x < 0:
            if x >= -self.tol:
                return 0.0
            raise ValueError(f"negative radicand {x}")
        return math.sqrt(x)

    def _svd_tol(self, M: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
        _, s, vh = np.linalg.svd(M)
        cut = self.tol * max(1.0, float(s[0]) if s.size else 1.0)
        return s, vh, cut

    def rank(self, M: np.ndarray) -> int:
        M = np.asarray(M, dtype=float)
        if M.size == 0:
            return 0
        s, _, cut = self._svd_tol(M)
        return int(np.sum(s > cut))

    def nullspace(self, M: np.ndarray) -> np.ndarray:
        M = np.asarray(M, dtype=float)
        rows, cols = M.shape
        if rows == 0:
            return np.eye(cols)
        s, vh, cut = self._svd_tol(M)
        r = int(np.sum(s > cut))
        return vh[r:].T.copy()

    def solve(self, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        A = np.asarray(A, dtype=float)
        b = np.asarray(b, dtype=float)
        x, *_ = np.linalg.lstsq(A, b, rcond=None)
        scale = max(1.0, float(np.max(np.abs(b))) if b.size else 1.0,
                    float(np.max(np.abs(A))) if A.size else 1.0)
        if np.max(np.abs(A @ x - b), initial=0.0) > self.tol * scale:
            return None
        return x

    def inv(self, M: np.ndarray) -> np.ndarray:
        return np.linalg.inv(np.asarray(M, dtype=float))

    def det(self, M: np.ndarray) -> float:
        return float(np.linalg.det(np.asarray(M, dtype=float)))

    def __repr__(self) -> str:
        return f"FloatField(tol={self.tol:g})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FloatField) and other.tol == self.tol

    def __hash__(self) -> int:
        return hash(("float", self.tol))


RATIONAL = RationalField()
FLOAT = FloatField()


def field_for(values: Iterable[Any], tol: float = DEFAULT_TOL) -> Field:
    """Rational backend when every value is exact, float otherwise."""
    for v in values:
        if isinstance(v, (float, np.floating)):
            return FloatField(tol)
        if isinstance(v, str) and not isinstance(parse_scalar(v), Fraction):
            return FloatField(tol)
    return RATIONAL

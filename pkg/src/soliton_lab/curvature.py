"""Levi-Civita connection and curvature of a left-invariant metric.

All tensors are components in the Lie algebra basis ``e_i``.  Because the
frame is left-invariant every component is constant, so covariant derivatives
reduce to connection terms only.

Conventions (also written into :meth:`CurvaturePackage.to_dict`):

* ``nabla_{e_i} e_j = gamma[i, j, k] e_k``
* ``R(x, y) z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z`` and
  ``riem[i, j, k, l]`` is the ``e_l`` component of ``R(e_i, e_j) e_k``
* ``rho(x, y) = tr(z -> R(z, x) y)``, ``ric = g^{-1} rho`` (columns are the
  images of basis vectors), ``tau = tr ric``, ``rho_norm2 = tr(ric @ ric)``
* ``nabla_rho[m, i, j] = (nabla_{e_m} rho)(e_i, e_j)`` and likewise for
  ``nabla_riem[m, i, j, k, l]``
* ``lap_rho = g^{mn} (nabla^2 rho)(e_m, e_n; ., .)`` (rough Laplacian)
* ``r_rho[i, j] = sum <R(e_k, e_i) e_j, e_l> rho^{kl}``, normalized so that
  contracting with ``g^{kl}`` instead of ``rho^{kl}`` returns ``rho``
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .core import MetricLieAlgebra
from .scalars import Field, scalar_to_json

__all__ = [
    "CurvaturePackage",
    "levi_civita",
    "riemann",
    "ricci_data",
    "covariant_derivatives",
    "laplacian_and_contraction",
    "curvature",
    "euler_lagrange",
    "connection_operators",
    "CONVENTIONS",
]

# Global sign of the curvature operator.  Pinned by the normal form on the
# four-dimensional filiform algebra, whose scalar curvature must be +1.
RIEMANN_SIGN = 1

CONVENTIONS = {
    "index_base": 1,
    "connection": "nabla_{e_i} e_j = Gamma_ij^k e_k",
    "riemann": "R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z; "
               "riem[i][j][k][l] = e_l component of R(e_i,e_j)e_k",
    "ricci": "rho(x,y) = tr(z -> R(z,x)y); Ric = g^-1 rho acting on column vectors",
    "rho_norm2": "tr(Ric o Ric) (indefinite contraction, may be negative)",
    "nabla_rho": "nabla_rho[m][i][j] = (nabla_{e_m} rho)(e_i,e_j)",
    "laplacian": "rough Laplacian g^{mn}(nabla^2 rho)_{mn;ij}",
    "r_rho": "R[rho]_ij = <R(e_k,e_i)e_j, e_l> rho^{kl}",
}


def _half(f: Field) -> Any:
    return f.coerce(Fraction(1, 2))


def levi_civita(a: MetricLieAlgebra) -> np.ndarray:
    """Connection coefficients from the Koszul formula."""
    f = a.field
    if f.is_zero(f.det(a.g)):
        raise ValueError("degenerate metric: Levi-Civita connection undefined")
    ginv = f.inv(a.g)
    C = np.einsum("ijk,kl->ijl", a.c, a.g)  # <[e_i, e_j], e_l>
    K = (C - np.einsum("jki->ijk", C) + np.einsum("kij->ijk", C)) * _half(f)
    return np.einsum("ijk,km->ijm", K, ginv)


def connection_operators(gamma: np.ndarray) -> np.ndarray:
    """``A[i]`` is the matrix of ``y -> nabla_{e_i} y`` on column vectors."""
    return np.einsum("ijk->ikj", gamma)


def riemann(a: MetricLieAlgebra, gamma: np.ndarray) -> np.ndarray:
    t1 = np.einsum("jkp,ipl->ijkl", gamma, gamma)
    t2 = np.einsum("ikp,jpl->ijkl", gamma, gamma)
    t3 = np.einsum("ijm,mkl->ijkl", a.c, gamma)
    R = t1 - t2 - t3
    return R if RIEMANN_SIGN == 1 else -R


def ricci_data(a: MetricLieAlgebra, riem: np.ndarray) -> tuple[np.ndarray, np.ndarray, Any, Any]:
    f = a.field
    rho = np.einsum("ijki->jk", riem)
    ric = f.inv(a.g) @ rho
    tau = np.trace(ric)
    rho_norm2 = np.trace(ric @ ric)
    return rho, ric, tau, rho_norm2


def _nabla2(gamma: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Covariant derivative of an invariant (0,2) tensor: ``[m, i, j]``."""
    return -np.einsum("mip,pj->mij", gamma, T) - np.einsum("mjp,ip->mij", gamma, T)


def covariant_derivatives(a: MetricLieAlgebra, gamma: np.ndarray, riem: np.ndarray,
                          rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    nabla_riem = (
        -np.einsum("mip,pjkl->mijkl", gamma, riem)
        - np.einsum("mjp,ipkl->mijkl", gamma, riem)
        - np.einsum("mkp,ijpl->mijkl", gamma, riem)
        + np.einsum("mpl,ijkp->mijkl", gamma, riem)
    )
    return nabla_riem, _nabla2(gamma, rho)


def laplacian_and_contraction(a: MetricLieAlgebra, gamma: np.ndarray, riem: np.ndarray,
                              rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    f = a.field
    ginv = f.inv(a.g)
    nrho = _nabla2(gamma, rho)
    nn = (
        -np.einsum("mnp,pij->mnij", gamma, nrho)
        - np.einsum("mip,npj->mnij", gamma, nrho)
        - np.einsum("mjp,nip->mnij", gamma, nrho)
    )
    lap = np.einsum("mn,mnij->ij", ginv, nn)
    rho_up = ginv @ rho @ ginv
    r_rho = np.einsum("kijm,ml,kl->ij", riem, a.g, rho_up)
    return lap, r_rho


@dataclass(frozen=True, eq=False)
class CurvaturePackage:
    algebra: MetricLieAlgebra
    gamma: np.ndarray
    riem: np.ndarray
    rho: np.ndarray
    ric: np.ndarray
    tau: Any
    rho_norm2: Any
    nabla_riem: np.ndarray
    nabla_rho: np.ndarray
    lap_rho: np.ndarray
    r_rho: np.ndarray

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def n(self) -> int:
        return self.algebra.n

    def riem_lowered(self) -> np.ndarray:
        """``<R(e_i, e_j) e_k, e_l>``."""
        return np.einsum("ijkm,ml->ijkl", self.riem, self.algebra.g)

    def is_flat(self) -> bool:
        return self.field.all_zero(self.riem)

    def to_dict(self) -> dict[str, Any]:
        def enc(arr: np.ndarray) -> Any:
            if isinstance(arr, np.ndarray):
                return [enc(x) for x in arr]
            return scalar_to_json(arr)

        return {
            "conventions": dict(CONVENTIONS, backend=self.field.name),
            "gamma": enc(self.gamma),
            "riem": enc(self.riem),
            "rho": enc(self.rho),
            "ric": enc(self.ric),
            "tau": scalar_to_json(self.tau),
            "rho_norm2": scalar_to_json(self.rho_norm2),
            "nabla_rho": enc(self.nabla_rho),
            "nabla_riem": enc(self.nabla_riem),
            "lap_rho": enc(self.lap_rho),
            "r_rho": enc(self.r_rho),
        }


def curvature(a: MetricLieAlgebra) -> CurvaturePackage:
    """Compute every curvature quantity of ``a`` eagerly."""
    gamma = levi_civita(a)
    R = riemann(a, gamma)
    rho, ric, tau, rho_norm2 = ricci_data(a, R)
    nabla_R, nabla_rho = covariant_derivatives(a, gamma, R, rho)
    lap, r_rho = laplacian_and_contraction(a, gamma, R, rho)
    return CurvaturePackage(a, gamma, R, rho, ric, tau, rho_norm2, nabla_R, nabla_rho, lap, r_rho)


def euler_lagrange(pkg: CurvaturePackage, t: Any) -> np.ndarray:
    """Euler-Lagrange tensor of ``int |rho|^2 + t tau^2`` at constant ``tau``."""
    f = pkg.field
    t = f.coerce(t)
    n = f.coerce(pkg.n)
    two = f.coerce(2)
    energy = pkg.rho_norm2 + t * pkg.tau * pkg.tau
    return (-pkg.lap_rho + (two / n) * energy * pkg.algebra.g
            - two * pkg.r_rho - two * t * pkg.tau * pkg.rho)

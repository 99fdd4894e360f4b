"""Plain-loop float recomputation of the Levi-Civita connection and curvature.

Deliberately written with explicit sums over lowered quantities so that it
shares no code path with the package implementation.
"""

from __future__ import annotations

import numpy as np


def lowered_connection(c: np.ndarray, g: np.ndarray) -> np.ndarray:
    """``G[i, j, k] = <nabla_{e_i} e_j, e_k>`` from the Koszul formula."""
    n = g.shape[0]
    cl = np.zeros((n, n, n))  # <[e_i, e_j], e_k>
    for i in range(n):
        for j in range(n):
            for k in range(n):
                cl[i, j, k] = sum(c[i, j, m] * g[m, k] for m in range(n))
    G = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                G[i, j, k] = 0.5 * (cl[i, j, k] - cl[j, k, i] + cl[k, i, j])
    return G


def ricci(c: np.ndarray, g: np.ndarray) -> tuple[np.ndarray, float]:
    """Ricci form and scalar curvature."""
    n = g.shape[0]
    ginv = np.linalg.inv(g)
    G = lowered_connection(c, g)
    gam = np.einsum("ijm,mk->ijk", G, ginv)  # nabla_{e_i} e_j = gam[i, j, k] e_k

    def nabla(i: int, v: np.ndarray) -> np.ndarray:
        return sum(v[j] * gam[i, j] for j in range(n))

    R = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ek = np.eye(n)[k]
                v = nabla(i, nabla(j, ek)) - nabla(j, nabla(i, ek))
                br = c[i, j]
                v = v - sum(br[m] * nabla(m, ek) for m in range(n))
                R[i, j, k] = v
    rho = np.zeros((n, n))
    for a in range(n):
        for b in range(n):
            rho[a, b] = sum(R[z, a, b, z] for z in range(n))
    tau = float(np.trace(ginv @ rho))
    return rho, tau

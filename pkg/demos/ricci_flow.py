"""Ricci flow of a left-invariant soliton and of an Einstein metric.

A soliton with constant c has scalar curvature tau(t) = tau_0 / (1 - 2ct);
an Einstein metric rho = lam g evolves by g(t) = (1 - 2 lam t) g(0).
"""

from __future__ import annotations

import numpy as np

from soliton_lab.catalog import instantiate
from soliton_lab.classify import soliton_solve
from soliton_lab.core import algebra, orthonormal
from soliton_lab.curvature import curvature
from soliton_lab.flow import integrate, self_similarity_check


def main() -> None:
    a = instantiate("R3.g_R.i").algebra
    sol = soliton_solve(a, curvature(a))
    traj = integrate(a, T=0.25, h=0.005)  # blow-up at t = 1 / (2c) = 1/3
    print(f"R3.g_R.i: c = {sol.c}, tau law deviation {self_similarity_check(traj, sol.c):.1e}")
    for t, tau in list(zip(traj.times, traj.taus))[::10]:
        print(f"    t={t:.2f}  tau={tau:+.6f}")

    su2 = algebra(3, orthonormal(3), {(1, 2): [0, 0, 1], (2, 3): [1, 0, 0], (3, 1): [0, 1, 0]})
    lam = float(curvature(su2).rho[0, 0])
    traj = integrate(su2, T=0.5, h=0.05)
    err = max(np.max(np.abs(g - (1 - 2 * lam * t) * np.eye(3))) for t, g in zip(traj.times, traj.metrics))
    print(f"su(2): lam = {lam}, max deviation from (1 - 2 lam t) g0 = {err:.1e}")


if __name__ == "__main__":
    main()

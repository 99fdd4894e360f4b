from __future__ import annotations

import io

import numpy as np
import pytest

from soliton_lab.catalog import instantiate
from soliton_lab.core import algebra, orthonormal
from soliton_lab.flow import integrate, ricci_rhs, self_similarity_check, trajectory_csv


def einstein():
    return instantiate("R3.g_R", {"eta1": 1, "eta2": 1, "eta3": 1}, backend="float").algebra


def test_abelian_is_stationary():
    a = algebra(4, orthonormal(4, (4,)), {}).as_float()
    traj = integrate(a, 0.1, 0.01)
    assert all(np.array_equal(g, traj.metrics[0]) for g in traj.metrics)
    assert self_similarity_check(traj, 0) == 0


def test_einstein_homothety():
    a = einstein()
    _, tau = ricci_rhs(np.asarray(a.c), np.asarray(a.g))
    lam = tau / 4
    traj = integrate(a, 0.1, 1e-3)
    g0 = traj.metrics[0]
    err = max(np.max(np.abs(g - (1 - 2 * lam * t) * g0)) / np.max(np.abs(g0))
              for t, g in zip(traj.times, traj.metrics))
    assert err < 1e-6
    assert self_similarity_check(traj, lam) < 1e-6


def test_rk4_order_on_soliton():
    a = instantiate("R3.g_R.i", {}, backend="float").algebra
    T = 0.2
    ref = integrate(a, T, T / 1024).metrics[-1]
    errs = [np.max(np.abs(integrate(a, T, T / k).metrics[-1] - ref)) for k in (8, 16, 32, 64, 128)]
    ratios = [e0 / e1 for e0, e1 in zip(errs, errs[1:])]
    assert all(12 < r < 20 for r in ratios), ratios


def test_soliton_tau_law_and_wrong_c():
    a = instantiate("R3.g_R.i", {}, backend="float").algebra
    traj = integrate(a, 0.2, 1e-3)
    assert self_similarity_check(traj, 1.5) < 1e-5
    assert self_similarity_check(traj, 1.0) > 1e-2
    assert all(t1 > t0 for t0, t1 in zip(traj.times, traj.times[1:]))


def test_degeneration_is_flagged():
    # shrinking sphere collapses at t = 1/(2 lambda)
    su2 = algebra(3, orthonormal(3), {(1, 2): [0, 0, 1], (2, 3): [1, 0, 0], (3, 1): [0, 1, 0]}).as_float()
    traj = integrate(su2, 1.2, 0.01)
    assert traj.degenerated and "degeneration" in traj.message
    assert traj.times[-1] < 1.0


def test_bad_horizon():
    with pytest.raises(ValueError):
        integrate(einstein(), 0.1, 0.03)


def test_csv_export():
    traj = integrate(einstein(), 0.002, 0.001)
    lines = trajectory_csv(traj).strip().splitlines()
    assert lines[0].split(",")[:3] == ["t", "tau", "g_11"]
    assert len(lines[0].split(",")) == 18 and len(lines) == 4

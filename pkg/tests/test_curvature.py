from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from _oracle import ricci as oracle_ricci
from conftest import random_instance
from soliton_lab.core import algebra, orthonormal
from soliton_lab.curvature import CONVENTIONS, curvature, euler_lagrange
from soliton_lab.catalog import instantiate


def test_riemannian_heisenberg():
    h = algebra(3, orthonormal(3), {(1, 2): [0, 0, 1]})
    pkg = curvature(h)
    assert pkg.rho.tolist() == [[Fraction(-1, 2), 0, 0], [0, Fraction(-1, 2), 0], [0, 0, Fraction(1, 2)]]
    assert pkg.tau == Fraction(-1, 2)
    assert pkg.rho_norm2 == Fraction(3, 4)


def test_abelian_is_flat():
    a = algebra(4, orthonormal(4, (4,)), {})
    pkg = curvature(a)
    assert pkg.is_flat() and pkg.tau == 0


def test_filiform_normal_form_has_unit_scalar_curvature():
    pkg = curvature(instantiate("R3.g_R.i", {}).algebra)
    assert pkg.tau == 1


@pytest.mark.parametrize("fid", ["R3.g_R", "R3.L.Ia", "R3.L.Ib", "R3.L.II", "R3.L.III", "R3.g_D",
                                 "H3.R", "H3.L.Ia-", "H3.L.II", "H3.D0", "NS.R", "3D.IV1", "3D.Ib"])
def test_ricci_matches_independent_oracle(fid):
    rng = random.Random(hash(fid) & 0xFFFF)
    for _ in range(3):
        a = random_instance(fid, rng).algebra
        pkg = curvature(a)
        rho, tau = oracle_ricci(np.asarray(a.c, dtype=float), np.asarray(a.g, dtype=float))
        scale = max(1.0, float(np.max(np.abs(rho))))
        assert np.allclose(np.asarray(pkg.rho, dtype=float), rho, atol=1e-10 * scale)
        assert abs(float(pkg.tau) - tau) <= 1e-10 * scale


def test_float_and_rational_agree():
    a = instantiate("H3.L.II", {}).algebra
    exact = curvature(a)
    approx = curvature(a.as_float())
    assert np.allclose(np.asarray(exact.riem, dtype=float), approx.riem, atol=1e-12)
    assert np.allclose(np.asarray(exact.lap_rho, dtype=float), approx.lap_rho, atol=1e-12)


def test_r_rho_normalization():
    # contracting R with g^{-1} instead of rho^{kl} returns rho itself
    a = instantiate("R3.L.Ib", {}).algebra
    pkg = curvature(a)
    R = pkg.riem_lowered()
    ginv = a.field.inv(a.g)
    back = np.einsum("kijl,kl->ij", R, ginv)
    assert a.field.all_zero(back - pkg.rho)


def test_euler_lagrange_vanishes_on_einstein_at_any_t():
    a = instantiate("R3.g_R", {"eta1": 1, "eta2": 1, "eta3": 1}).algebra
    pkg = curvature(a)
    for t in (Fraction(-1), Fraction(0), Fraction(5, 3)):
        E = euler_lagrange(pkg, t)
        assert a.field.all_zero(E)


def test_conventions_documented():
    assert CONVENTIONS["index_base"] == 1
    assert "rho_norm2" in curvature(algebra(3, orthonormal(3), {})).to_dict()

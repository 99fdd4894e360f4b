from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from soliton_lab.catalog import instantiate
from soliton_lab.classify import (classification_report, derivation_residual, einstein_check, flat_line_factor,
                                  functional_criticality, is_unimodular, left_invariant_soliton, locally_symmetric,
                                  soliton_solve, structure_operator_3d, wave_classify)
from soliton_lab.core import AlgebraFormatError, algebra, direct_product, orthonormal
from soliton_lab.curvature import curvature

H3 = algebra(3, orthonormal(3), {(1, 2): [0, 0, 1]})
SU2 = algebra(3, orthonormal(3), {(1, 2): [0, 0, 1], (2, 3): [1, 0, 0], (3, 1): [0, 1, 0]})


def verdicts(fid, params=None):
    a = instantiate(fid, params or {}).algebra
    return a, curvature(a)


def test_heisenberg_nilsoliton():
    pkg = curvature(H3)
    sol = soliton_solve(H3, pkg)
    assert sol.exists and sol.c == Fraction(-3, 2) and sol.kind == "expanding"
    assert (derivation_residual(H3, pkg, sol.c) == 0).all()
    assert sol.c * pkg.tau == pkg.rho_norm2


def test_round_sphere_is_einstein_and_symmetric():
    pkg = curvature(SU2)
    ev = einstein_check(SU2, pkg)
    assert ev.einstein and ev.lam == Fraction(1, 2)
    assert locally_symmetric(SU2, pkg)
    assert not locally_symmetric(H3, curvature(H3))


def test_abelian_any_c():
    a = algebra(3, orthonormal(3), {})
    sol = soliton_solve(a, curvature(a))
    assert sol.exists and sol.any_c and sol.c == 0


def test_no_soliton_on_symmetric_plane_wave():
    a, pkg = verdicts("PW.d")
    assert not soliton_solve(a, pkg).exists
    w = wave_classify(a, pkg)
    assert w.kind == "plane_wave"
    assert list(w.null_direction) == [0, 0, 1, 0]


def test_wave_ladder():
    assert wave_classify(*verdicts("LIRS.pp")).kind == "pp_wave_only"
    assert wave_classify(*verdicts("R3.g_R.i")).kind == "none"
    w = wave_classify(*verdicts("H3.D0"))
    assert w.kind == "plane_wave" and w.planewave_type == "ii" and not w.ricci_parallel
    assert wave_classify(*verdicts("3D.III")).kind == "plane_wave"


def test_float_wave_search_on_jordan_block():
    a = instantiate("H3xR.KT", {"alpha": 2, "beta": 3 ** 0.5}).algebra
    assert wave_classify(a, curvature(a)).kind == "plane_wave"


def test_criticality_filiform():
    a, pkg = verdicts("R3.g_R.i")
    cv = functional_criticality(a, pkg)
    assert cv.critical_t == Fraction(-3, 2)
    assert cv.t_zero_energy == Fraction(-3, 2)
    at = functional_criticality(a, pkg, Fraction(-3, 2))
    assert at.el_residual_at_t == 0


def test_left_invariant_soliton():
    a, pkg = verdicts("LIRS.iv")
    li = left_invariant_soliton(a, pkg)
    assert li.exists
    assert not soliton_solve(a, pkg).exists
    assert not left_invariant_soliton(*verdicts("R3.g_R.i")).exists


def test_structure_operator_types():
    assert structure_operator_3d(instantiate("3D.Ia", {}).algebra).jordan_type == "Ia"
    assert structure_operator_3d(instantiate("3D.Ib", {}).algebra).jordan_type == "Ib"
    assert structure_operator_3d(instantiate("3D.II", {}).algebra).jordan_type == "II"
    so = structure_operator_3d(instantiate("3D.III", {}).algebra)
    assert so.jordan_type == "III" and so.self_adjoint


def test_unimodular_and_flat_factor():
    assert is_unimodular(H3)
    assert not is_unimodular(instantiate("3D.IV1", {}).algebra)
    v = flat_line_factor(direct_product(H3, 1))
    assert v is not None and v[3] != 0 and v[2] == 0
    assert flat_line_factor(instantiate("R3.g_R.i", {}).algebra) is None


def test_report_is_complete_and_serializable():
    import json

    rep = classification_report(instantiate("R3.L.Ib.ii", {}).algebra)
    d = rep.to_dict()
    json.dumps(d)
    assert d["soliton"]["c"] == "3"
    assert set(d) >= {"einstein", "soliton", "wave", "criticality", "fingerprint", "left_invariant_soliton"}


def test_report_rejects_invalid():
    bad = algebra(3, orthonormal(3), {(1, 2): [0, 0, 1], (1, 3): [0, 0, 1], (2, 3): [1, 0, 0]})
    with pytest.raises(AlgebraFormatError, match="Jacobi"):
        classification_report(bad)


def test_float_backend_agrees_with_rational():
    a = instantiate("R3.L.Ia.iii", {"eta2": 2, "eta3": 3}).algebra
    exact = soliton_solve(a, curvature(a))
    b = a.as_float()
    approx = soliton_solve(b, curvature(b))
    assert approx.exists and abs(approx.c - float(exact.c)) < 1e-10


SELF_ADJOINT_GAMMA = {"3D.IV1": lambda p: -p["beta"], "3D.IV2": lambda p: p["beta"], "3D.IV3": lambda p: 0}


@pytest.mark.parametrize("fid", sorted(SELF_ADJOINT_GAMMA))
def test_non_unimodular_soliton_iff_einstein_or_self_adjoint(fid):
    import random

    from soliton_lab.catalog import CatalogError

    rng = random.Random(fid)
    seen = {True: 0, False: 0}
    for k in range(60):
        p = {name: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for name in ("alpha", "beta", "gamma", "delta")}
        if k % 3 == 0:
            p["gamma"] = Fraction(SELF_ADJOINT_GAMMA[fid](p))
        try:
            a = instantiate(fid, p).algebra
        except CatalogError:
            continue
        pkg = curvature(a)
        self_adjoint = p["gamma"] == SELF_ADJOINT_GAMMA[fid](p)
        expected = self_adjoint or einstein_check(a, pkg).einstein
        assert soliton_solve(a, pkg).exists == expected, p
        seen[expected] += 1
    assert seen[True] and seen[False]

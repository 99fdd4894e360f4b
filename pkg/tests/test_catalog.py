from __future__ import annotations

from fractions import Fraction

import pytest

from soliton_lab.catalog import (HOMOTHETY_WITNESSES, CatalogError, check_witness, enumerate_families, family_ids,
                                 get_family, grid_instances, instantiate, resolve, verify_instance)
from soliton_lab.classify import soliton_solve
from soliton_lab.curvature import curvature
from soliton_lab.scalars import FloatField


def test_registry_is_sorted_and_unique():
    ids = family_ids()
    assert ids == sorted(ids) and len(ids) == len(set(ids))
    assert [f.id for f in enumerate_families()] == ids


def test_resolve_groups():
    assert resolve("NS.all") == [f for f in family_ids() if f.startswith("NS.")]
    assert resolve("R3.L.Ia") == ["R3.L.Ia", "R3.L.Ia.i", "R3.L.Ia.ii", "R3.L.Ia.iii"]
    with pytest.raises(CatalogError):
        resolve("nope")


def test_instantiate_errors():
    with pytest.raises(CatalogError, match="unknown"):
        get_family("X.Y")
    with pytest.raises(CatalogError, match="constraint"):
        instantiate("R3.g_R.ii", {"eta3": 1})
    with pytest.raises(CatalogError):
        instantiate("R3.g_R", {"bogus": 1})


def test_backend_selection():
    inst = instantiate("H3xR.KT", {"alpha": 2, "beta": 2})
    assert inst.algebra.field.exact
    irr = instantiate("H3xR.KT", {"alpha": 2, "beta": 3 ** 0.5})
    assert isinstance(irr.algebra.field, FloatField)
    assert not instantiate("R3.g_R.i", {}, backend="float").algebra.field.exact


def test_instance_key_is_stable():
    inst = instantiate("R3.g_R.ii", {"eta3": Fraction(3), "g1": 1})
    assert inst.key == "R3.g_R.ii(eta3=3,g1=1)"


def test_expected_formula_evaluated():
    inst = instantiate("R3.g_R.ii", {"eta3": 2, "g1": 0})
    assert inst.expected.soliton_c == 6
    assert inst.expected.rho_norm2 == inst.expected.soliton_c * inst.expected.tau


@pytest.mark.parametrize("fid", ["R3.g_R.i", "R3.L.Ib.ii", "H3.D0", "PW.d", "NS.R", "LIRS.iv", "3D.IV2"])
def test_default_grid_verifies(fid):
    for inst in grid_instances(fid):
        failed = [c for c in verify_instance(inst) if not c.ok]
        assert failed == [], inst.key


def test_checks_carry_anchor():
    checks = verify_instance(instantiate("R3.L.Ib.ii", {}))
    named = {c.name: c for c in checks}
    assert named["soliton_c"].ok and named["soliton_c"].anchor


@pytest.mark.parametrize("w", HOMOTHETY_WITNESSES, ids=lambda w: w.source[0])
def test_homothety_witnesses_are_exact(w):
    assert check_witness(w)


@pytest.mark.parametrize("w", HOMOTHETY_WITNESSES, ids=lambda w: w.source[0])
def test_homothety_preserves_scale_invariant_ratio(w):
    # c / tau does not change under basis changes and metric scaling
    ratios = []
    for fid, params in (w.source, w.target):
        a = instantiate(fid, params).algebra
        pkg = curvature(a)
        sol = soliton_solve(a, pkg)
        ratios.append((sol.exists, sol.c / pkg.tau if sol.exists and pkg.tau != 0 else None))
    assert ratios[0] == ratios[1]

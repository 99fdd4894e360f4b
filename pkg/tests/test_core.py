from __future__ import annotations

import json
from fractions import Fraction

import numpy as np
import pytest

from soliton_lab.core import (AlgebraFormatError, algebra, algebra_hash, change_basis, direct_product,
                              dump_algebra, from_spec, load_algebra, orthonormal, restricted_signature,
                              scale_metric, semidirect_extension, to_spec, validate)
from soliton_lab.scalars import FLOAT, RATIONAL


def heisenberg(timelike=()):
    return algebra(3, orthonormal(3, timelike), {(1, 2): [0, 0, 1]})


def test_brackets_are_antisymmetric():
    h = heisenberg()
    assert h.c[0, 1, 2] == 1 and h.c[1, 0, 2] == -1
    assert list(h.bracket([1, 0, 0], [0, 1, 0])) == [0, 0, 1]


def test_validate_good_algebra():
    rep = validate(heisenberg((3,)))
    assert rep.ok
    assert rep.signature.as_tuple() == (2, 1, 0)


def test_jacobi_failure_is_located():
    bad = algebra(3, orthonormal(3), {(1, 2): [0, 0, 1], (1, 3): [0, 0, 1], (2, 3): [1, 0, 0]})
    rep = validate(bad)
    assert not rep.jacobi
    assert rep.jacobi_failure is not None
    assert "Jacobi" in rep.messages[0]


def test_degenerate_metric_rejected():
    a = algebra(3, [[1, 0, 0], [0, 1, 0], [0, 0, 0]], {(1, 2): [0, 0, 1]})
    assert not validate(a).nondegenerate


def test_change_basis_roundtrip():
    h = heisenberg()
    M = [[1, 1, 0], [0, 1, 0], [0, 0, 2]]
    h2 = change_basis(h, M)
    assert validate(h2).ok
    back = change_basis(h2, RATIONAL.inv(RATIONAL.array(M)))
    assert np.array_equal(back.c, h.c) and np.array_equal(back.g, h.g)


def test_change_basis_rejects_singular():
    with pytest.raises(AlgebraFormatError):
        change_basis(heisenberg(), [[1, 0, 0], [0, 1, 0], [0, 0, 0]])


def test_products_and_extensions():
    h4 = direct_product(heisenberg(), 1, [-1])
    assert h4.n == 4 and validate(h4).ok
    assert validate(h4).signature.as_tuple() == (3, 1, 0)
    ext = semidirect_extension(heisenberg(), [[1, 0, 0], [0, 1, 0], [0, 0, 2]], orthonormal(4))
    assert validate(ext).ok
    bad = semidirect_extension(heisenberg(), [[1, 0, 0], [0, 1, 0], [0, 0, 0]], orthonormal(4))
    assert not validate(bad).jacobi


def test_restricted_signature():
    a = direct_product(heisenberg(), 1, [-1])
    assert restricted_signature(a, [1, 4]).as_tuple() == (1, 1, 0)
    assert restricted_signature(a, [[1], [0], [0], [1]]).as_tuple() == (0, 0, 1)


def test_scale_metric():
    a = scale_metric(heisenberg(), Fraction(3))
    assert a.g[0, 0] == 3 and np.array_equal(a.c, heisenberg().c)


def test_spec_roundtrip(tmp_path):
    a = direct_product(heisenberg(), 1, [-1])
    spec = to_spec(a)
    b = from_spec(json.loads(json.dumps(spec)))
    assert np.array_equal(a.c, b.c) and np.array_equal(a.g, b.g)
    p = tmp_path / "a.json"
    dump_algebra(a, str(p))
    assert algebra_hash(load_algebra(str(p))) == algebra_hash(a)


def test_spec_errors(tmp_path):
    with pytest.raises(AlgebraFormatError):
        from_spec({"dim": 5, "metric": []})
    with pytest.raises(AlgebraFormatError, match="indices"):
        from_spec({"dim": 3, "metric": orthonormal(3), "brackets": [{"i": 2, "j": 1, "k": 3, "v": 1}]})
    p = tmp_path / "broken.json"
    p.write_text('{"dim": 3,\n "metric": [}')
    with pytest.raises(AlgebraFormatError, match=":2:"):
        load_algebra(str(p))


def test_float_backend():
    a = heisenberg().as_float()
    assert a.field == FLOAT or a.field.name == "float"
    assert validate(a).ok

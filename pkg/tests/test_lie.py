from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from soliton_lab.catalog import instantiate
from soliton_lab.core import algebra, direct_product, orthonormal, semidirect_extension
from soliton_lab.lie import center, charpoly, derived_series, fingerprint, is_solvable, label_matches, nilradical
from soliton_lab.scalars import RATIONAL

H3 = algebra(3, orthonormal(3), {(1, 2): [0, 0, 1]})
SU2 = algebra(3, orthonormal(3), {(1, 2): [0, 0, 1], (2, 3): [1, 0, 0], (3, 1): [0, 1, 0]})
SL2 = algebra(3, orthonormal(3, (3,)), {(1, 2): [0, 0, -1], (2, 3): [1, 0, 0], (3, 1): [0, 1, 0]})


def test_charpoly():
    M = RATIONAL.array([[2, 1], [0, 3]])
    assert charpoly(RATIONAL, M) == [1, -5, 6]


def test_heisenberg_invariants():
    assert derived_series(H3) == [3, 1, 0]
    assert nilradical(H3).shape[1] == 3
    assert center(H3).shape[1] == 1
    fp = fingerprint(H3)
    assert fp.solvable and fp.unimodular and fp.label_guess == "h3"


def test_simple_algebras():
    assert not is_solvable(SU2)
    assert fingerprint(SU2).label_guess == "su(2)"
    assert fingerprint(SL2).label_guess == "sl(2,R)"


def test_products_are_labelled():
    assert fingerprint(direct_product(H3, 1)).label_guess == "h3xR"
    fp = fingerprint(direct_product(SU2, 1))
    assert not fp.solvable


def test_filiform():
    fp = fingerprint(instantiate("R3.g_R.i", {}).algebra)
    assert fp.label_guess == "n4"
    assert fp.derived_series_dims == [4, 2, 0]


@pytest.mark.parametrize("lam", [Fraction(2), Fraction(-1, 3)])
def test_r4_lambda_label(lam):
    # R^3 extended by diag(1, lam, 1 + ...) style Jordan data is recognized up to scale
    A = [[1, 0, 0], [0, lam, 0], [0, 0, 1]]
    r3 = algebra(3, orthonormal(3), {})
    a = semidirect_extension(r3, A, orthonormal(4, (4,)))
    fp = fingerprint(a)
    assert fp.nilradical_dim == 3
    assert fp.unimodular is False


def test_label_matches_accepts_parameters():
    inst = instantiate("H3.D0.d4l", {"lam": 2})
    fp = fingerprint(inst.algebra)
    assert label_matches(fp, "d4,lambda", {"lambda": 2.0})
    assert not label_matches(fp, "h4")


def test_unimodularity_of_extension():
    r3 = algebra(3, orthonormal(3), {})
    traceless = semidirect_extension(r3, [[1, 0, 0], [0, 1, 0], [0, 0, -2]], orthonormal(4))
    assert fingerprint(traceless).unimodular

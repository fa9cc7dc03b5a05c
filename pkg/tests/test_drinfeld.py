"""The Drinfeld element and Section 3 (Def 3.1, Props 3.2-3.6, Cor 3.5)."""

from fractions import Fraction

import pytest

from sqtkit.catalog import catalog_names, structure
from sqtkit.drinfeld import (check_cor35, check_prop32, check_prop33, check_prop34,
                             check_s2_conjugation, compute_drinfeld, drinfeld_report,
                             evaluate_prop36)
from sqtkit.field import QQ
from sqtkit.tensor import Tensor


def test_u_equals_g_on_rminus_by_hand(rminus):
    # u = S(R2) R1 with R = ½ Σ c_ij g^i⊗g^j, c = [[1, 1], [1, -1]] and S(g^j) = g^j:
    # u = ½ Σ c_ij g^(i+j) = ½ (1 + g + g - 1) = g
    c = {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): -1}
    u = [Fraction(0), Fraction(0)]
    for (i, j), v in c.items():
        u[(i + j) % 2] += Fraction(v, 2)
    assert u == [0, 1]
    D = compute_drinfeld(rminus)
    assert D.u.entries() == u
    assert D.u_inv.entries() == u          # g⁻¹ = g


def test_trivial_R_gives_u_one(s3_triv):
    D = compute_drinfeld(s3_triv)
    assert D.u == s3_triv.H.unit


@pytest.mark.parametrize("name", catalog_names())
def test_drinfeld_suite_on_catalog(name):
    rep = drinfeld_report(structure(name))
    assert rep.passed, [c.name for c in rep.failures()]
    assert len(rep) == 22


def test_individual_parts(rminus):
    D = compute_drinfeld(rminus)
    for part in (check_prop32, check_prop33, check_prop34, check_cor35):
        assert part(D).passed
    assert check_s2_conjugation(D)
    p = evaluate_prop36(D)
    assert p.consistent and p.center and p.commute and p.coactions


def test_R21R_inverse_on_rminus(rminus):
    # R21 R = R² = 1⊗1 for the symmetric R⁻, so (R21R)⁻¹ = 1⊗1
    D = compute_drinfeld(rminus)
    assert D.R21R == rminus.H.unit2
    assert D.R21R_inv == rminus.H.unit2


def test_drinfeld_on_transformed_and_double(rminus, s3_dual):
    from sqtkit.double import build_double
    from sqtkit.sqt import transform_tau_rinv
    assert drinfeld_report(transform_tau_rinv(rminus)).passed
    D = build_double(s3_dual)
    assert drinfeld_report(D.structure).passed

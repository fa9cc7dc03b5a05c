"""Semiquasitriangular structures: Def 1.1, Props 1.2-1.4, 1.9-1.11, Examples 1.5-1.7."""

from fractions import Fraction

import pytest

from sqtkit.catalog import catalog_names, negative_control, structure
from sqtkit.field import GF, QQ
from sqtkit.groups import group_algebra, group_by_name
from sqtkit.report import FAIL
from sqtkit.sqt import (InvalidStructure, SqtStructure, check_nu_properties, check_prop12,
                        check_prop13, check_prop19, check_quasitriangular, check_sqt,
                        qybe_check, tensor_structure, transform_cop, transform_op,
                        transform_tau_rinv)
from sqtkit.sweedler import sweedler
from sqtkit.tensor import Tensor

CATALOG = catalog_names()


def test_rminus_R_by_hand(rminus):
    # R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) in the basis (1, g)
    half = Fraction(1, 2)
    assert rminus.R.entries() == [half, half, half, -half]
    # R⁻ squares to 1⊗1 in k[C2]⊗k[C2], so R⁻¹ = R
    assert rminus.R_inv == rminus.R


def test_rminus_nu_is_h_tensor_1(rminus):
    # Example 1.6: for quasitriangular R, ν(h) = h⊗1. By hand: basis (1, g),
    # so ν(1) = 1⊗1 and ν(g) = g⊗1.
    expected = Tensor.from_sparse(QQ, (2, 2, 2), [((0, 0, 0), 1), ((1, 1, 0), 1)])
    assert rminus.nu == expected


def test_rminus_is_quasitriangular(rminus):
    assert check_quasitriangular(rminus.H, rminus.R).passed


def test_trivial_R_nu_is_adjoint(s3_triv):
    assert s3_triv.nu == sweedler(s3_triv.H, "h2 | S(h1) h3")


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_prop13_and_qybe(name):
    S = structure(name)
    assert check_prop13(S).passed
    assert qybe_check(S).ok


@pytest.mark.parametrize("name", ["kC2-Rminus", "kS3-triv"])
@pytest.mark.parametrize("n", [2, 3])
def test_prop12(name, n):
    rep = check_prop12(structure(name), n)
    assert rep.passed and len(rep) == 2 + 2 * n


def test_prop12_rejects_out_of_range(rminus):
    with pytest.raises(ValueError):
        check_prop12(rminus, 9)


@pytest.mark.parametrize("name", ["kC2-Rminus", "kS3-triv", "kS3-dual", "kQ8-triv"])
def test_prop19_and_nu_properties(name):
    S = structure(name)
    assert check_prop19(S).passed
    assert check_nu_properties(S).passed


@pytest.mark.parametrize("name", CATALOG)
def test_transforms_pass_check_sqt(name):
    S = structure(name)
    for make in (transform_tau_rinv, transform_op, transform_cop):
        T = make(S, check=False)
        rep = check_sqt(T.H, T.R)
        assert rep.passed, (make.__name__, [c.name for c in rep.failures()])


def test_tensor_structure_passes_check_sqt():
    S = tensor_structure(structure("kC2-Rminus"), structure("kC3-dual"), check=False)
    assert S.dim == 6
    assert check_sqt(S.H, S.R).passed


def test_prime_field_structure():
    H = group_algebra(group_by_name("S3"), GF(7))
    S = SqtStructure(H, H.unit2)
    assert check_prop13(S).passed


def test_rminus_over_gf3():
    S = structure("kC2-Rminus", GF(3))
    assert check_sqt(S.H, S.R).passed


# -- negative controls ---------------------------------------------------------

def test_R_g_tensor_1_fails_condition_2_not_1():
    spec = negative_control("bad-R-g1")
    H = spec.hopf(strict=True)
    rep = check_sqt(H, spec.R)
    assert rep["R invertible"].ok
    assert rep["condition (1)"].ok
    bad = rep["condition (2)"]
    assert bad.status == FAIL
    # (2): R1 ⊗ Δ(R2) = R1R'1 ⊗ R'2 ⊗ R2. For R = g⊗1 the left side is g⊗1⊗1 and
    # the right side g²⊗1⊗1 = 1⊗1⊗1; the first differing entry is at 1⊗1⊗1.
    assert bad.witness == {"index": [0, 0, 0], "lhs": "0", "rhs": "1"}


def test_singular_R_fails_invertibility_with_kernel_witness():
    spec = negative_control("bad-R-singular")
    H = spec.hopf(strict=True)
    rep = check_sqt(H, spec.R)
    chk = rep["R invertible"]
    assert chk.status == FAIL
    # verify the witness independently: R·x = 0 with x ≠ 0
    labels = {lab: i for i, lab in enumerate(H.labels)}
    items = []
    for key, val in chk.witness["x"].items():
        a, b = key.split("⊗")
        items.append(((labels[a], labels[b]), QQ.parse(val)))
    x = Tensor.from_sparse(QQ, (2, 2), items)
    from sqtkit.sqt import mul2
    assert not x.is_zero()
    assert mul2(H, spec.R, x).is_zero()


def test_invalid_structure_raises():
    spec = negative_control("bad-R-g1")
    with pytest.raises(InvalidStructure):
        SqtStructure(spec.hopf(strict=True), spec.R)

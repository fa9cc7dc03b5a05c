"""Hopf algebra structure constants, center, duals and derived algebras."""

from fractions import Fraction

import pytest

from conftest import group_product_oracle
from sqtkit.field import GF, QQ
from sqtkit.groups import GROUPS, dual_group_algebra, group_algebra, group_by_name
from sqtkit.hopf import (HopfAlgebra, check_hopf_axioms, coopposite, dualize, in_center,
                         is_semicocommutative, opposite, tensor_hopf)
from sqtkit.sweedler import FormulaError, sweedler
from sqtkit.tensor import Tensor


def conjugacy_classes(G):
    seen, classes = set(), 0
    for x in range(G.order):
        if x not in seen:
            classes += 1
            seen |= {G.conj(y, x) for y in range(G.order)}
    return classes


@pytest.mark.parametrize("name", list(GROUPS))
def test_group_algebra_mul_matches_table(name):
    G = group_by_name(name)
    H = group_algebra(G, QQ)
    oracle = group_product_oracle(G)
    n = G.order
    assert all(H.mul[(i, j, k)] == oracle[i][j][k]
               for i in range(n) for j in range(n) for k in range(n))


@pytest.mark.parametrize("name", list(GROUPS))
def test_group_algebra_and_dual_pass_axioms(name):
    G = group_by_name(name)
    for H in (group_algebra(G, QQ), dual_group_algebra(G, QQ)):
        rep = check_hopf_axioms(H)
        assert rep.passed, [c.name for c in rep.failures()]
        assert len(rep) == 13


@pytest.mark.parametrize("name", list(GROUPS))
def test_center_dimension_is_class_number(name):
    G = group_by_name(name)
    assert len(group_algebra(G, QQ).center) == conjugacy_classes(G)
    # k[G]* is commutative
    assert len(dual_group_algebra(G, QQ).center) == G.order


def test_center_membership_of_class_sums():
    G = group_by_name("S3")
    H = group_algebra(G, QQ)
    transpositions = [x for x in range(6) if G.mul(x, x) == G.identity and x != G.identity]
    class_sum = Tensor.from_sparse(QQ, (6,), (((x,), 1) for x in transpositions))
    assert in_center(H, class_sum)
    assert not in_center(H, H.basis_vector(transpositions[0]))


def test_semicocommutative_examples():
    # cocommutative: k[G]; commutative: k[G]*
    for name in ("S3", "Q8"):
        G = group_by_name(name)
        assert is_semicocommutative(group_algebra(G, QQ))[0]
        assert is_semicocommutative(dual_group_algebra(G, QQ))[0]


def test_non_semicocommutative_witness():
    # the Sweedler 4-dim algebra is neither; Ad(x) has a non-central second leg
    f = QQ
    labels = ["1", "g", "x", "gx"]
    table = {  # basis products
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }
    mul = Tensor.from_sparse(f, (4, 4, 4), (((i, j, k), v) for (i, j), d in table.items()
                                           for k, v in d.items()))
    comul = Tensor.from_sparse(f, (4, 4, 4), [
        ((0, 0, 0), 1), ((1, 1, 1), 1),
        ((2, 2, 0), 1), ((2, 1, 2), 1),           # Δx = x⊗1 + g⊗x
        ((3, 3, 1), 1), ((3, 0, 3), 1),           # Δ(gx) = gx⊗g + 1⊗gx
    ])
    unit = Tensor.basis(f, (4,), (0,))
    counit = Tensor.from_entries(f, [1, 1, 0, 0])
    S = Tensor.from_sparse(f, (4, 4), [((0, 0), 1), ((1, 1), 1), ((2, 3), -1), ((3, 2), 1)])
    H = HopfAlgebra(f, labels, mul, unit, comul, counit, S, name="H4")
    assert check_hopf_axioms(H).passed
    ok, witness = is_semicocommutative(H)
    assert not ok and witness


def test_dual_of_dual_is_original():
    H = group_algebra(group_by_name("S3"), QQ)
    DD = dualize(dualize(H))
    assert DD.same_structure(H)


def test_opposite_and_coopposite_are_hopf():
    H = dual_group_algebra(group_by_name("S3"), QQ)
    for K in (opposite(H), coopposite(H)):
        assert check_hopf_axioms(K).passed


def test_tensor_hopf_dimension_and_axioms():
    A = group_algebra(group_by_name("C2"), QQ)
    B = dual_group_algebra(group_by_name("C3"), QQ)
    T = tensor_hopf(A, B)
    assert T.dim == 6
    assert check_hopf_axioms(T).passed


def test_prime_field_group_algebra():
    H = group_algebra(group_by_name("S3"), GF(5))
    assert check_hopf_axioms(H).passed


def test_bad_antipode_fails_with_witness():
    H = group_algebra(group_by_name("C3"), QQ)
    bad = HopfAlgebra(QQ, H.labels, H.mul, H.unit, H.comul, H.counit, H.identity, strict=False)
    rep = check_hopf_axioms(bad)
    assert [c.name for c in rep.failures()] == ["antipode left", "antipode right"]
    w = rep["antipode left"].witness
    assert w["index"] and w["lhs"] != w["rhs"]


# -- Sweedler notation ---------------------------------------------------------

def test_sweedler_adjoint_on_group_algebra_by_hand():
    # group-like g: h1 = h2 = h3 = g, so Ad(g) = g ⊗ g⁻¹g = g ⊗ 1
    G = group_by_name("S3")
    H = group_algebra(G, QQ)
    ad = sweedler(H, "h2 | S(h1) h3")
    for g in range(6):
        assert list(ad.take(0, g).nonzero()) == [((g, G.identity), 1)]


def test_sweedler_antipode_axiom_by_formula():
    H = dual_group_algebra(group_by_name("S3"), QQ)
    lhs = sweedler(H, "S(h1) h2")
    rhs = Tensor.from_sparse(QQ, (6, 6), (((i, j), H.counit[(i,)] * H.unit[(j,)])
                                          for i in range(6) for j in range(6)))
    assert lhs == rhs


def test_sweedler_R_legs_for_trivial_R_give_unit():
    H = group_algebra(group_by_name("C2"), QQ)
    u = sweedler(H, "S(R2) R1", R=H.unit2)
    assert u == H.unit


def test_sweedler_rejects_unused_component():
    H = group_algebra(group_by_name("C2"), QQ)
    with pytest.raises(FormulaError):
        sweedler(H, "h1 h3")       # h2 never used
    with pytest.raises(FormulaError):
        sweedler(H, "S(h1) h1")    # h1 used twice


def test_fraction_coefficients_survive():
    H = group_algebra(group_by_name("C2"), QQ)
    R = Tensor.from_entries(QQ, [["1/2", "1/2"], ["1/2", "-1/2"]])
    u = sweedler(H, "S(R2) R1", R=R)
    assert u.entries() == [Fraction(0), Fraction(1)]     # u = g

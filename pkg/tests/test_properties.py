"""Randomized exact identities (hypothesis)."""

from hypothesis import given, settings, strategies as st

from sqtkit.catalog import structure
from sqtkit.field import QQ
from sqtkit.modules import braid, hom_space, regular_module, tensor_module
from sqtkit.sparse import linear_combination
from sqtkit.specfile import AlgebraSpec
from sqtkit.tensor import Tensor, einsum

NAMES = ["kC2-Rminus", "kS3-triv", "kS3-dual", "kC2xC2-dual"]
_S = {n: structure(n) for n in NAMES}

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def element(S, coeffs):
    return Tensor.from_scalars(QQ, coeffs[:S.dim], (S.dim,))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(NAMES), st.lists(fractions, min_size=12, max_size=12))
def test_nu_is_multiplicative(name, coeffs):
    # ν(xy) = ν(x)ν(y) in H⊗H (used in the proof of Prop 2.3)
    S = _S[name]
    x, y = element(S, coeffs), element(S, coeffs[6:] + coeffs[:6])
    H = S.H
    xy = einsum("a,b,abc->c", x, y, H.mul)
    lhs = einsum("h,hab->ab", xy, S.nu)
    nx, ny = einsum("h,hab->ab", x, S.nu), einsum("h,hab->ab", y, S.nu)
    rhs = einsum("ab,cd,acx,bdy->xy", nx, ny, H.mul, H.mul)
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(NAMES), st.lists(fractions, min_size=6, max_size=6))
def test_nu_counital(name, coeffs):
    # (id⊗ε)ν(x) = x
    S = _S[name]
    x = element(S, coeffs)
    assert einsum("h,hab,b->a", x, S.nu, S.H.counit) == x


_HOM = {}


def _end_basis(name):
    if name not in _HOM:
        S = _S[name]
        reg = regular_module(S)
        _HOM[name] = (reg, braid(reg, reg).matrix, hom_space(reg, reg))
    return _HOM[name]


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["kC2-Rminus", "kS3-dual"]),
       st.lists(st.integers(-4, 4), min_size=72, max_size=72))
def test_braid_natural_on_random_endomorphisms(name, ks):
    # c ∘ (f⊗g) = (g⊗f) ∘ c for module endomorphisms f, g of the regular module
    reg, c, basis = _end_basis(name)
    n = len(basis)
    f = linear_combination(QQ, ks[:n], basis, (reg.dim, reg.dim))
    g = linear_combination(QQ, ks[36:36 + n], basis, (reg.dim, reg.dim))
    assert c @ f.kron(g) == g.kron(f) @ c


@settings(max_examples=25, deadline=None)
@given(st.lists(fractions, min_size=4, max_size=4))
def test_spec_round_trip_with_arbitrary_R(vals):
    spec = AlgebraSpec.from_structure(_S["kC2-Rminus"])
    spec.R = Tensor.from_scalars(QQ, vals, (2, 2))
    text = spec.to_json()
    back = AlgebraSpec.from_json(text)
    assert back.R == spec.R and back.to_json() == text


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(["kC2-Rminus", "kS3-dual"]))
def test_tensor_module_associative_up_to_equality(name):
    S = _S[name]
    reg = regular_module(S)
    k = tensor_module(reg, reg)
    left = tensor_module(k, reg)
    right = tensor_module(reg, k)
    assert all(x == y for x, y in zip(left.action, right.action))
    assert all(x == y for x, y in zip(left.coaction, right.coaction))

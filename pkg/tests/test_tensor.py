"""Exact scalars and the contraction kernel, against Fraction-loop oracles."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import naive_einsum
from sqtkit.field import GF, QQ, Field, FieldMismatch
from sqtkit.tensor import (Tensor, einsum, matrix_inverse, solve_sparse, tensor_product)


def as_nested(t: Tensor):
    return t.to_object_array().tolist()


def test_rational_is_reduced_and_denominator_positive():
    t = Tensor.from_entries(QQ, ["2/4", "-6/8", "0"])
    assert t.den == 4
    assert t.entries() == [Fraction(1, 2), Fraction(-3, 4), 0]


def test_prime_field_residues_in_range():
    f = GF(7)
    t = Tensor.from_entries(f, [-1, 15, "1/2"])
    assert t.entries() == [6, 1, 4]          # 1/2 = 4 mod 7
    assert all(0 <= x < 7 for x in t.entries())


def test_field_parse_and_format_round_trip():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.format(QQ.parse("-5/10")) == "-1/2"
    f = GF(5)
    assert f.parse("7 mod 5") == 2
    assert f.format(2) == "2 mod 5"
    with pytest.raises(FieldMismatch):
        f.parse("1 mod 7")
    with pytest.raises(ValueError):
        Field(4)
    assert Field.from_string("GF(11)") == GF(11)


def test_field_mismatch_on_mixed_tensors():
    a = Tensor.from_entries(QQ, [1, 2])
    b = Tensor.from_entries(GF(3), [1, 2])
    with pytest.raises(FieldMismatch):
        a + b


def test_einsum_matches_naive_oracle_on_rationals():
    a = Tensor.from_entries(QQ, [["1/2", "1/3"], ["-2", "5/7"]])
    b = Tensor.from_entries(QQ, [[["1", "1/5"], ["0", "3"]], [["-1/2", "1"], ["2", "-3/4"]]])
    got = einsum("ij,jkl->ikl", a, b)
    want = naive_einsum("ij,jkl->ikl", as_nested(a), as_nested(b))
    for idx, v in want.items():
        assert got[idx] == v


def test_einsum_large_entries_switch_to_python_integers():
    big = 2**40 + 1
    a = Tensor.from_entries(QQ, [[big, big], [big, -big]])
    got = einsum("ij,jk,kl->il", a, a, a)
    want = naive_einsum("ij,jk,kl->il", as_nested(a), as_nested(a), as_nested(a))
    for idx, v in want.items():
        assert got[idx] == v           # entries around 2**121: exact, no float rounding


def test_einsum_prime_field_reduces():
    f = GF(5)
    a = Tensor.from_entries(f, [[3, 4], [2, 1]])
    got = einsum("ij,jk->ik", a, a)
    want = naive_einsum("ij,jk->ik", as_nested(a), as_nested(a))
    for idx, v in want.items():
        assert got[idx] == v % 5


def test_tensor_product_and_identity():
    a = Tensor.from_entries(QQ, [1, "1/2"])
    b = Tensor.from_entries(QQ, [3, 0, -1])
    t = tensor_product(a, b)
    assert t.dims == (2, 3)
    assert t[(1, 2)] == Fraction(-1, 2)
    eye = Tensor.identity(QQ, 3)
    assert einsum("ij,j->i", eye, b) == b


def test_matrix_inverse_and_singular():
    m = Tensor.from_entries(QQ, [[2, 1], [1, 1]])
    inv = matrix_inverse(m)
    assert einsum("ij,jk->ik", m, inv) == Tensor.identity(QQ, 2)
    assert matrix_inverse(Tensor.from_entries(QQ, [[1, 2], [2, 4]])) is None


def test_solve_sparse_kernel():
    # x0 + x1 = 0, x2 = 0 over QQ: kernel spanned by (1, -1, 0)
    rows = [{0: 1, 1: 1}, {2: 1}]
    _, kernel = solve_sparse(QQ, rows, 3)
    assert len(kernel) == 1
    v = kernel[0]
    assert v[0] == -v[1] and v[0] != 0 and v[2] == 0


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@settings(max_examples=40, deadline=None)
@given(st.lists(fractions, min_size=6, max_size=6), st.lists(fractions, min_size=6, max_size=6))
def test_einsum_bilinear_against_oracle(xs, ys):
    a = Tensor.from_scalars(QQ, xs, (2, 3))
    b = Tensor.from_scalars(QQ, ys, (3, 2))
    got = einsum("ij,jk->ik", a, b)
    want = naive_einsum("ij,jk->ik", as_nested(a), as_nested(b))
    assert all(got[idx] == v for idx, v in want.items())


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-10**6, 10**6), min_size=8, max_size=8))
def test_einsum_associative_exactly(xs):
    a = Tensor.from_scalars(QQ, xs[:4], (2, 2))
    b = Tensor.from_scalars(QQ, xs[4:], (2, 2))
    left = einsum("ij,jk->ik", einsum("ij,jk->ik", a, b), a)
    right = einsum("ij,jk->ik", a, einsum("ij,jk->ik", b, a))
    assert left == right


def test_slicing_path_agrees_with_direct(monkeypatch):
    import sqtkit.tensor as tensor_mod

    rng = np.random.default_rng(0)
    ts = [Tensor(QQ, rng.integers(-5, 5, (3, 4))) for _ in range(3)]
    direct = einsum("ai,bi,ci->abc", *ts)
    calls = []
    orig = tensor_mod._raw_einsum

    def spy(*args, **kwargs):
        calls.append(args[1])
        return orig(*args, **kwargs)

    monkeypatch.setattr(tensor_mod, "_raw_einsum", spy)
    monkeypatch.setattr(tensor_mod, "SLICE_LIMIT", 1)
    assert einsum("ai,bi,ci->abc", *ts) == direct
    assert len(calls) > 1            # the sliced branch actually ran

"""Shared fixtures and independent oracles.

The oracles here never go through :func:`sqtkit.tensor.einsum`: they
evaluate sums with Python ``Fraction`` loops straight from the definitions,
so a passing comparison checks the kernel rather than restating it.
"""

import itertools
from fractions import Fraction

import pytest

from sqtkit import catalog
from sqtkit.catalog import structure
from sqtkit.field import QQ


def naive_einsum(subscripts, *arrays):
    """Reference einsum over nested lists of Fractions / ints (any ring)."""
    lhs, out = subscripts.split("->")
    ins = lhs.split(",")
    dims = {}
    for sub, a in zip(ins, arrays):
        shape, x = [], a
        for _ in sub:
            shape.append(len(x))
            x = x[0] if len(x) else None
        dims.update(zip(sub, shape))
    letters = sorted(dims)
    result = {}
    for vals in itertools.product(*(range(dims[c]) for c in letters)):
        env = dict(zip(letters, vals))
        term = Fraction(1)
        for sub, a in zip(ins, arrays):
            x = a
            for c in sub:
                x = x[env[c]]
            term *= x
        key = tuple(env[c] for c in out)
        result[key] = result.get(key, 0) + term
    return result


def group_product_oracle(G):
    """``mul[i][j][k]`` of k[G] directly from the multiplication table."""
    n = G.order
    return [[[1 if G.mul(i, j) == k else 0 for k in range(n)] for j in range(n)] for i in range(n)]


@pytest.fixture(scope="session")
def rminus():
    return structure("kC2-Rminus")


@pytest.fixture(scope="session")
def s3_triv():
    return structure("kS3-triv")


@pytest.fixture(scope="session")
def s3_dual():
    return structure("kS3-dual")


@pytest.fixture(scope="session")
def rminus_spec():
    return catalog("kC2-Rminus")





# -- acceptance summary ------------------------------------------------------

ACCEPTANCE_LINES = {}


def record_criterion(number: int, ok: bool, text: str):
    """One line per acceptance criterion, printed in the terminal summary."""
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])

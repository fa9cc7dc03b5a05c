"""Small finite groups by multiplication table, and their group algebras."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .field import Field
from .hopf import HopfAlgebra, dualize
from .tensor import Tensor


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    labels: tuple
    table: tuple  # table[i][j] = index of g_i g_j

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        for i in range(self.order):
            if all(self.table[i][j] == j for j in range(self.order)):
                return i
        raise ValueError("no identity")

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        e = self.identity
        return next(j for j in range(self.order) if self.table[i][j] == e)

    def conj(self, y: int, x: int) -> int:
        """``y x y^{-1}``."""
        return self.mul(self.mul(y, x), self.inv(y))

    def is_central(self, i: int) -> bool:
        return all(self.mul(i, j) == self.mul(j, i) for j in range(self.order))

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def is_abelian(self) -> bool:
        return all(self.is_central(i) for i in range(self.order))


def _from_elements(name, elems, labels, op):
    idx = {e: i for i, e in enumerate(elems)}
    table = tuple(tuple(idx[op(a, b)] for b in elems) for a in elems)
    return FiniteGroup(name, tuple(labels), table)


def cyclic(n: int) -> FiniteGroup:
    labels = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return _from_elements(f"C{n}", list(range(n)), labels[:n], lambda a, b: (a + b) % n)


def klein() -> FiniteGroup:
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return _from_elements("C2xC2", elems, ["1", "a", "b", "ab"],
                          lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2))


def _compose(p, q):
    # (p q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(q)))


def symmetric3() -> FiniteGroup:
    elems = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    labels = ["1", "(12)", "(13)", "(23)", "(123)", "(132)"]
    return _from_elements("S3", elems, labels, _compose)


def dihedral4() -> FiniteGroup:
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    e = (0, 1, 2, 3)
    rots = [e]
    for _ in range(3):
        rots.append(_compose(r, rots[-1]))
    elems = rots + [_compose(x, s) for x in rots]
    labels = ["1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"]
    return _from_elements("D4", elems, labels, _compose)


_QUAT = {  # unit products i*j etc. as (sign, unit)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion8() -> FiniteGroup:
    elems = [(s, u) for u in ("1", "i", "j", "k") for s in (1, -1)]

    def op(a, b):
        sg, u = _QUAT[(a[1], b[1])]
        return (a[0] * b[0] * sg, u)

    labels = [("" if s > 0 else "-") + u for s, u in elems]
    return _from_elements("Q8", elems, labels, op)


GROUPS = {
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "C4": lambda: cyclic(4),
    "C2xC2": klein,
    "S3": symmetric3,
    "D4": dihedral4,
    "Q8": quaternion8,
}


def group_by_name(name: str) -> FiniteGroup:
    try:
        return GROUPS[name]()
    except KeyError:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(GROUPS)}") from None


def group_algebra(G: FiniteGroup, field: Field) -> HopfAlgebra:
    """``k[G]``: group-like basis, ``S(g) = g^{-1}``."""
    n = G.order
    mul = Tensor.from_sparse(field, (n, n, n),
                             (((i, j, G.mul(i, j)), 1) for i, j in product(range(n), repeat=2)))
    unit = Tensor.basis(field, (n,), (G.identity,))
    comul = Tensor.from_sparse(field, (n, n, n), (((i, i, i), 1) for i in range(n)))
    counit = Tensor.from_sparse(field, (n,), (((i,), 1) for i in range(n)))
    S = Tensor.from_sparse(field, (n, n), (((i, G.inv(i)), 1) for i in range(n)))
    return HopfAlgebra(field, G.labels, mul, unit, comul, counit, S, name=f"k[{G.name}]")


def dual_group_algebra(G: FiniteGroup, field: Field) -> HopfAlgebra:
    """``k[G]^*`` on the delta functions ``δ_x``."""
    H = dualize(group_algebra(G, field))
    H.labels = [f"δ_{x}" for x in G.labels]
    H.name = f"k[{G.name}]*"
    return H

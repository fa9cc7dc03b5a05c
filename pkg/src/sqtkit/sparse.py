"""Exact sparse matrices for module-level linear maps.

Module carriers such as ``(H⊗H)^{⊗3}`` reach tens of thousands of
dimensions while the maps on them (actions, coactions, braids) stay very
sparse. :class:`SparseMatrix` stores an int64 CSR numerator and one common
denominator, like :class:`sqtkit.tensor.Tensor`. Every operation checks
an a-priori bound on the result's integers; when it could leave int64 the
operation is redone with Python integers instead.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import scipy.sparse as sp

from .field import Field, FieldMismatch
from .tensor import Tensor

_SAFE = 1 << 62


def _maxabs(m: sp.csr_matrix) -> int:
    if m.nnz == 0:
        return 0
    return int(np.abs(m.data).max())


class SparseMatrix:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: Field, num, den: int = 1, *, fresh: bool = False):
        # ``fresh``: num is a newly computed int64 CSR matrix owned by this object
        if not isinstance(num, _PyMatrix) and not (
                fresh and isinstance(num, sp.csr_matrix) and num.dtype == np.int64):
            num = sp.csr_matrix(num, dtype=np.int64, copy=True)
        if den <= 0:
            raise ValueError("denominator must be positive")
        self.field = field
        self.num, self.den = self._normalize(field, num, int(den))

    @staticmethod
    def _normalize(field, num, den):
        if isinstance(num, _PyMatrix):
            return num.normalize(field, den)
        num.sum_duplicates()
        if field.is_rational:
            num.eliminate_zeros()
            if num.nnz == 0:
                return num, 1
            g = math.gcd(int(np.gcd.reduce(np.abs(num.data))), den)
            if g > 1:
                num.data //= g
                den //= g
            return num, den
        p = field.characteristic
        if den != 1:
            num.data = (num.data % p) * pow(den, -1, p) % p
        else:
            num.data %= p
        num.eliminate_zeros()
        return num, 1

    # -- construction ----------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, shape) -> "SparseMatrix":
        return cls(field, sp.csr_matrix(shape, dtype=np.int64))

    @classmethod
    def identity(cls, field: Field, n: int) -> "SparseMatrix":
        return cls(field, sp.identity(n, dtype=np.int64, format="csr"))

    @classmethod
    def permutation(cls, field: Field, targets) -> "SparseMatrix":
        """Matrix sending basis vector ``j`` to basis vector ``targets[j]``."""
        n = len(targets)
        return cls(field, sp.csr_matrix((np.ones(n, dtype=np.int64),
                                         (np.asarray(targets), np.arange(n))), shape=(n, n)))

    @classmethod
    def swap(cls, field: Field, m: int, n: int) -> "SparseMatrix":
        """``M⊗N -> N⊗M``, ``e_i⊗e_j -> e_j⊗e_i``, on row-major tensor bases."""
        i, j = np.divmod(np.arange(m * n), n)
        return cls.permutation(field, j * m + i)

    @classmethod
    def from_items(cls, field: Field, shape, items) -> "SparseMatrix":
        """From ``((row, col), scalar)`` pairs; duplicates are summed."""
        rows, cols, vals = [], [], []
        for (r, c), v in items:
            rows.append(r)
            cols.append(c)
            vals.append(field.scalar(v))
        return cls._from_scalars(field, shape, rows, cols, vals)

    @classmethod
    def _from_scalars(cls, field, shape, rows, cols, vals):
        if field.is_rational:
            den = math.lcm(1, *(Fraction(v).denominator for v in vals)) if vals else 1
            ints = [int(Fraction(v) * den) for v in vals]
        else:
            den, ints = 1, [int(v) for v in vals]
        if any(abs(x) >= _SAFE for x in ints):
            return cls(field, _PyMatrix.from_triples(shape, rows, cols, ints), den)
        return cls(field, sp.csr_matrix((np.asarray(ints, dtype=np.int64),
                                         (np.asarray(rows, dtype=np.int64),
                                          np.asarray(cols, dtype=np.int64))), shape=shape), den)

    @classmethod
    def from_tensor(cls, t: Tensor) -> "SparseMatrix":
        if t.legs != 2:
            raise ValueError("2-leg tensor required")
        return cls.from_items(t.field, t.dims, t.nonzero())

    def to_tensor(self) -> Tensor:
        return Tensor.from_sparse(self.field, self.shape, self.items())

    # -- inspection ------------------------------------------------------
    @property
    def shape(self) -> tuple:
        return tuple(self.num.shape)

    @property
    def nnz(self) -> int:
        return self.num.nnz

    def _scalar(self, x: int):
        if self.field.is_rational:
            return Fraction(int(x), self.den)
        return int(x) % self.field.characteristic

    def items(self):
        """``((row, col), scalar)`` for the nonzero entries, row-major."""
        if isinstance(self.num, _PyMatrix):
            for key in sorted(self.num.d):
                yield key, self._scalar(self.num.d[key])
            return
        coo = self.num.tocoo()
        order = np.lexsort((coo.col, coo.row))
        for k in order:
            yield (int(coo.row[k]), int(coo.col[k])), self._scalar(coo.data[k])

    def __getitem__(self, index):
        r, c = index
        if isinstance(self.num, _PyMatrix):
            return self._scalar(self.num.d.get((r, c), 0))
        return self._scalar(self.num[r, c])

    def is_zero(self) -> bool:
        return self.nnz == 0

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"SparseMatrix({self.field}, shape={self.shape}, nnz={self.nnz})"

    def first_difference(self, other: "SparseMatrix"):
        diff = self - other
        for key, _ in diff.items():
            return key
        return None

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def _py(self):
        return self.num if isinstance(self.num, _PyMatrix) else _PyMatrix.from_csr(self.num)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        den = math.lcm(self.den, other.den)
        a, b = den // self.den, den // other.den
        py = isinstance(self.num, _PyMatrix) or isinstance(other.num, _PyMatrix)
        if not py and _maxabs(self.num) * a + _maxabs(other.num) * b < _SAFE:
            return SparseMatrix(self.field, self.num * a + other.num * b, den, fresh=True)
        return SparseMatrix(self.field, self._py().scaled(a).plus(other._py().scaled(b)), den)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.field, self.num * -1 if not isinstance(self.num, _PyMatrix)
                            else self.num.scaled(-1), self.den, fresh=True)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c) -> "SparseMatrix":
        c = self.field.scalar(c)
        if self.field.is_rational:
            c = Fraction(c)
            p, q = c.numerator, c.denominator
        else:
            p, q = int(c), 1
        if p == 0:
            return SparseMatrix.zeros(self.field, self.shape)
        if not isinstance(self.num, _PyMatrix) and _maxabs(self.num) * abs(p) < _SAFE:
            return SparseMatrix(self.field, self.num * p, self.den * q, fresh=True)
        return SparseMatrix(self.field, self._py().scaled(p), self.den * q)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        py = isinstance(self.num, _PyMatrix) or isinstance(other.num, _PyMatrix)
        if not py:
            inner = max(int(np.diff(self.num.indptr).max(initial=0)), 1)
            if _maxabs(self.num) * _maxabs(other.num) * inner < _SAFE:
                return SparseMatrix(self.field, self.num @ other.num, self.den * other.den,
                                    fresh=True)
        return SparseMatrix(self.field, self._py().matmul(other._py()), self.den * other.den)

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        py = isinstance(self.num, _PyMatrix) or isinstance(other.num, _PyMatrix)
        if not py and _maxabs(self.num) * _maxabs(other.num) < _SAFE:
            return SparseMatrix(self.field, sp.kron(self.num, other.num, format="csr"),
                                self.den * other.den, fresh=True)
        return SparseMatrix(self.field, self._py().kron(other._py()), self.den * other.den)

    @property
    def T(self) -> "SparseMatrix":
        if isinstance(self.num, _PyMatrix):
            return SparseMatrix(self.field, self.num.transposed(), self.den)
        return SparseMatrix(self.field, self.num.T.tocsr(), self.den, fresh=True)

    def flatten(self) -> "SparseMatrix":
        """Row vector (1 × rows·cols) of the entries in row-major order."""
        r, c = self.shape
        if isinstance(self.num, _PyMatrix):
            d = {(0, i * c + j): v for (i, j), v in self.num.d.items()}
            return SparseMatrix(self.field, _PyMatrix((1, r * c), d), self.den)
        return SparseMatrix(self.field, self.num.reshape((1, r * c)).tocsr(), self.den)

    def unflatten(self, shape) -> "SparseMatrix":
        if isinstance(self.num, _PyMatrix):
            c = shape[1]
            d = {divmod(j, c): v for (_, j), v in self.num.d.items()}
            return SparseMatrix(self.field, _PyMatrix(shape, d), self.den)
        return SparseMatrix(self.field, self.num.reshape(shape).tocsr(), self.den)


def kron(*mats: SparseMatrix) -> SparseMatrix:
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


def linear_combination(field: Field, coeffs, mats, shape) -> SparseMatrix:
    """``Σ coeffs[i] · mats[i]`` skipping zero coefficients."""
    out = SparseMatrix.zeros(field, shape)
    for c, m in zip(coeffs, mats):
        if c:
            out = out + m.scale(c)
    return out


def stack_rows(field: Field, mats) -> SparseMatrix:
    """Stack flattened matrices as the rows of one matrix."""
    if not mats:
        raise ValueError("nothing to stack")
    den = math.lcm(*(m.den for m in mats))
    scaled = [m.num * (den // m.den) if not isinstance(m.num, _PyMatrix) else None for m in mats]
    if any(s is None for s in scaled) or any(_maxabs(m.num) * (den // m.den) >= _SAFE for m in mats):
        out = SparseMatrix.zeros(field, (0, mats[0].shape[0] * mats[0].shape[1]))
        rows = {}
        for i, m in enumerate(mats):
            for (r, c), v in m.flatten().items():
                rows[(i, c)] = v
        return SparseMatrix.from_items(field, (len(mats), out.shape[1]), rows.items())
    flat = [s.reshape((1, s.shape[0] * s.shape[1])) for s in scaled]
    return SparseMatrix(field, sp.vstack(flat, format="csr"), den)


class _PyMatrix:
    """Dictionary-of-keys matrix with Python integers (overflow fallback)."""

    __slots__ = ("shape", "d")

    def __init__(self, shape, d):
        self.shape = tuple(shape)
        self.d = {k: v for k, v in d.items() if v}

    @property
    def nnz(self):
        return len(self.d)

    @classmethod
    def from_csr(cls, m):
        coo = m.tocoo()
        return cls(m.shape, {(int(r), int(c)): int(v) for r, c, v in zip(coo.row, coo.col, coo.data)})

    @classmethod
    def from_triples(cls, shape, rows, cols, vals):
        d = {}
        for r, c, v in zip(rows, cols, vals):
            d[(r, c)] = d.get((r, c), 0) + v
        return cls(shape, d)

    def scaled(self, a):
        return _PyMatrix(self.shape, {k: v * a for k, v in self.d.items()})

    def plus(self, other):
        d = dict(self.d)
        for k, v in other.d.items():
            d[k] = d.get(k, 0) + v
        return _PyMatrix(self.shape, d)

    def matmul(self, other):
        by_row = {}
        for (r, c), v in other.d.items():
            by_row.setdefault(r, []).append((c, v))
        d = {}
        for (i, k), v in self.d.items():
            for j, w in by_row.get(k, ()):
                d[(i, j)] = d.get((i, j), 0) + v * w
        return _PyMatrix((self.shape[0], other.shape[1]), d)

    def kron(self, other):
        r2, c2 = other.shape
        d = {(i * r2 + k, j * c2 + l): v * w
             for (i, j), v in self.d.items() for (k, l), w in other.d.items()}
        return _PyMatrix((self.shape[0] * r2, self.shape[1] * c2), d)

    def transposed(self):
        return _PyMatrix(self.shape[::-1], {(c, r): v for (r, c), v in self.d.items()})

    def normalize(self, field, den):
        if field.is_rational:
            g = den
            for v in self.d.values():
                g = math.gcd(g, v)
                if g == 1:
                    break
            d = {k: v // g for k, v in self.d.items()} if self.d else {}
            out, den = _PyMatrix(self.shape, d), (den // g if self.d else 1)
        else:
            p = field.characteristic
            inv = pow(den, -1, p)
            out, den = _PyMatrix(self.shape, {k: v * inv % p for k, v in self.d.items()}), 1
        if all(abs(v) < _SAFE for v in out.d.values()):
            rows = [k[0] for k in out.d]
            cols = [k[1] for k in out.d]
            return sp.csr_matrix((np.asarray(list(out.d.values()), dtype=np.int64),
                                  (np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64))),
                                 shape=out.shape), den
        return out, den

"""Exact dense multi-index tensors.

A :class:`Tensor` stores an integer array ``num`` and a positive integer
``den``; the entries are ``num / den``. Over GF(p) ``den`` is always 1 and
``num`` holds residues in ``[0, p)``. Rational tensors are kept reduced
(``gcd(num, den) == 1``), so equality is a plain array comparison.

Leg order is the left-to-right order of tensor factors everywhere: a tensor
with legs ``(i, j, k)`` for an element of ``H ⊗ H ⊗ H`` stores the
coefficient of ``e_i ⊗ e_j ⊗ e_k``.

Arithmetic runs in ``int64`` whenever a bound on every partial sum fits,
and in Python integers (``object`` arrays) otherwise.
"""

from __future__ import annotations

import math
import string
from fractions import Fraction
from functools import reduce

import numpy as np
import opt_einsum

from .field import QQ, Field, FieldMismatch

_INT64_SAFE = 2**62
# integers below this are exact in float64, so BLAS contractions are exact
_FLOAT_EXACT = 2**53
# largest intermediate (in entries) an einsum may allocate before slicing
SLICE_LIMIT = 1 << 22


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.abs(a).max())


def _as_int_array(a: np.ndarray) -> np.ndarray:
    """Demote object arrays to int64 when every entry fits."""
    if a.dtype == object and _maxabs(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a


class Tensor:
    """Immutable exact tensor. See module docstring for the representation."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: Field, num, den: int = 1):
        num = np.asarray(num)
        if num.dtype != object:
            num = num.astype(np.int64, copy=True)
        else:
            num = num.copy()
        den = int(den)
        if den <= 0:
            raise ValueError("denominator must be positive")
        p = field.characteristic
        if p:
            if den != 1:
                num = num * pow(den, -1, p)
                den = 1
            num = num % p
        elif den != 1 and num.size:
            g = math.gcd(int(np.gcd.reduce(num.ravel())), den) if num.size else den
            if g > 1:
                num = num // g
                den //= g
            if not num.any():
                den = 1
        elif not num.size:
            den = 1
        num = np.array(_as_int_array(np.asarray(num)))
        num.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Tensor is immutable")

    # -- construction -------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, dims) -> "Tensor":
        return cls(field, np.zeros(tuple(dims), dtype=np.int64))

    @classmethod
    def scalar_one(cls, field: Field) -> "Tensor":
        return cls(field, np.ones((), dtype=np.int64))

    @classmethod
    def basis(cls, field: Field, dims, index) -> "Tensor":
        a = np.zeros(tuple(dims), dtype=np.int64)
        a[tuple(index)] = 1
        return cls(field, a)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Tensor":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_entries(cls, field: Field, entries, dims=None) -> "Tensor":
        """Build from (nested) scalars; anything ``field.scalar`` accepts."""
        arr = np.array(entries, dtype=object)
        if dims is not None:
            arr = arr.reshape(tuple(dims))
        vals = [field.scalar(x) for x in arr.ravel()]
        return cls.from_scalars(field, vals, arr.shape)

    @classmethod
    def from_scalars(cls, field: Field, vals, dims) -> "Tensor":
        if field.characteristic:
            num = np.array([int(v) for v in vals], dtype=object).reshape(dims)
            return cls(field, num)
        fr = [Fraction(v) for v in vals]
        den = reduce(math.lcm, (f.denominator for f in fr), 1)
        num = np.array([f.numerator * (den // f.denominator) for f in fr], dtype=object)
        return cls(field, num.reshape(dims), den)

    @classmethod
    def from_sparse(cls, field: Field, dims, items) -> "Tensor":
        """``items``: iterable of ``(index_tuple, scalar)``; repeated indices add."""
        acc = {}
        for idx, val in items:
            idx = tuple(int(i) for i in idx)
            for i, d in zip(idx, dims):
                if not 0 <= i < d:
                    raise IndexError(f"index {idx} out of range for dims {tuple(dims)}")
            if len(idx) != len(dims):
                raise IndexError(f"index {idx} has wrong arity for dims {tuple(dims)}")
            acc[idx] = acc.get(idx, field.zero) + field.scalar(val)
        flat = [field.zero] * math.prod(dims)
        strides = np.cumprod((1,) + tuple(dims[::-1]))[:-1][::-1]
        for idx, val in acc.items():
            flat[int(sum(i * s for i, s in zip(idx, strides)))] = val
        return cls.from_scalars(field, flat, tuple(dims))

    # -- basic properties ---------------------------------------------
    @property
    def dims(self) -> tuple:
        return self.num.shape

    @property
    def legs(self) -> int:
        return self.num.ndim

    @property
    def size(self) -> int:
        return self.num.size

    def _scalar_at(self, raw) -> object:
        if self.field.characteristic:
            return int(raw)
        return Fraction(int(raw), self.den)

    def __getitem__(self, index):
        if not isinstance(index, tuple):
            index = (index,)
        if len(index) != self.legs or not all(isinstance(i, (int, np.integer)) for i in index):
            raise IndexError("Tensor indexing takes one integer per leg")
        return self._scalar_at(self.num[index])

    def entries(self) -> list:
        return [self._scalar_at(x) for x in self.num.ravel()]

    def nonzero(self):
        """Iterate ``(index, scalar)`` over nonzero entries, row-major."""
        for idx in zip(*np.nonzero(self.num)):
            idx = tuple(int(i) for i in idx)
            yield idx, self._scalar_at(self.num[idx])

    def is_zero(self) -> bool:
        return not self.num.any()

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.field == other.field and self.dims == other.dims
                and self.den == other.den and np.array_equal(self.num, other.num))

    __hash__ = None

    def __repr__(self):
        if self.size <= 16:
            body = np.array([str(x) for x in self.entries()], dtype=object).reshape(self.dims)
            return f"Tensor({self.field}, {body.tolist()})"
        return f"Tensor({self.field}, dims={self.dims}, nnz={int(np.count_nonzero(self.num))})"

    # -- arithmetic ---------------------------------------------------
    def _check_field(self, other: "Tensor"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_field(other)
        if self.dims != other.dims:
            raise ValueError(f"shape mismatch {self.dims} vs {other.dims}")
        den = math.lcm(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        bound = _maxabs(self.num) * fa + _maxabs(other.num) * fb
        a, b = self.num, other.num
        if bound >= _INT64_SAFE:
            a, b = a.astype(object), b.astype(object)
        return Tensor(self.field, a * fa + b * fb, den)

    def __neg__(self) -> "Tensor":
        return Tensor(self.field, -self.num, self.den)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def scale(self, c) -> "Tensor":
        c = self.field.scalar(c)
        if self.field.characteristic:
            return Tensor(self.field, self.num.astype(object) * int(c))
        c = Fraction(c)
        return Tensor(self.field, self.num.astype(object) * c.numerator, self.den * c.denominator)

    def __mul__(self, c):
        if isinstance(c, Tensor):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def reshape(self, dims) -> "Tensor":
        return Tensor(self.field, self.num.reshape(tuple(dims)), self.den)

    def transpose(self, perm=None) -> "Tensor":
        if perm is None:
            perm = tuple(reversed(range(self.legs)))
        return Tensor(self.field, self.num.transpose(perm), self.den)

    def take(self, leg: int, index: int) -> "Tensor":
        """Fix one leg at ``index`` (drops that leg)."""
        return Tensor(self.field, np.take(self.num, index, axis=leg), self.den)

    def to_object_array(self) -> np.ndarray:
        """Entries as a numpy object array of field scalars."""
        return np.array(self.entries(), dtype=object).reshape(self.dims)


# -- einsum --------------------------------------------------------------

def _parse_subscripts(subscripts: str, n: int):
    if "->" not in subscripts:
        raise ValueError("explicit output ('->') required")
    lhs, out = subscripts.replace(" ", "").split("->")
    ins = lhs.split(",")
    if len(ins) != n:
        raise ValueError(f"{len(ins)} subscripts for {n} operands")
    return ins, out


def _contraction(expr: str, shapes):
    """Pairwise contraction plan and its largest intermediate (entries)."""
    path, info = opt_einsum.contract_path(expr, *shapes, shapes=True, optimize="auto-hq")
    return path, int(info.largest_intermediate)


def _step_bound(sub_ins, sub_out, arrays) -> int:
    dims = {}
    for sub, a in zip(sub_ins, arrays):
        dims.update(zip(sub, a.shape))
    summed = set(dims) - set(sub_out)
    return math.prod(_maxabs(a) for a in arrays) * math.prod(dims[c] for c in summed)


def _exact_einsum(expr: str, arrays, modulus: int):
    """One contraction step, in the fastest exact arithmetic its entry bound allows.

    Below 2**53 every partial sum is an exactly representable integer, so a
    float64 (BLAS) contraction is exact; below 2**62 int64 is; otherwise
    Python integers are used.
    """
    lhs, out = expr.split("->")
    bound = _step_bound(lhs.split(","), out, arrays)
    if bound < _FLOAT_EXACT and len(arrays) > 1 and all(a.dtype != object for a in arrays):
        raw = np.rint(opt_einsum.contract(expr, *(a.astype(np.float64) for a in arrays)))
        raw = raw.astype(np.int64)
    else:
        if bound >= _INT64_SAFE:
            arrays = [a.astype(object) for a in arrays]
        raw = np.asarray(np.einsum(expr, *arrays))
    if modulus:
        raw = raw % modulus
    return _as_int_array(raw)


def _stepwise(expr: str, arrays, path, modulus: int):
    """Run a pairwise plan, choosing the exact dtype per step."""
    _, info = opt_einsum.contract_path(expr, *arrays, optimize=path)
    ops = list(arrays)
    for step in info.contraction_list:
        inds, step_expr = step[0], step[2]
        tmp = [ops.pop(x) for x in inds]
        ops.append(_exact_einsum(step_expr, tmp, modulus))
    return ops[0]


def _raw_einsum(ins, out, arrays, modulus: int = 0):
    expr = ",".join(ins) + "->" + out
    if len(arrays) == 1:
        return _exact_einsum(expr, arrays, modulus)
    path, peak = _contraction(expr, [a.shape for a in arrays])
    # slicing only pays when an intermediate outgrows the limit, the inputs
    # and the output
    dims = {}
    for sub, a in zip(ins, arrays):
        dims.update(zip(sub, a.shape))
    out_size = math.prod(dims[c] for c in out)
    if peak > max(SLICE_LIMIT, out_size, max(a.size for a in arrays)):
        # slice on the largest index, preferring output indices
        cands = sorted(set("".join(ins)), key=lambda c: (c in out, dims[c]), reverse=True)
        c = cands[0]
        parts = []
        sub_ins = [s.replace(c, "") for s in ins]
        sub_out = out.replace(c, "")
        for v in range(dims[c]):
            sub_arrays = [np.take(a, v, axis=s.index(c)) if c in s else a for s, a in zip(ins, arrays)]
            parts.append(_raw_einsum(sub_ins, sub_out, sub_arrays, modulus))
        if c in out:
            return np.stack(parts, axis=out.index(c))
        if sum(_maxabs(p) for p in parts) >= _INT64_SAFE:
            parts = [p.astype(object) for p in parts]
        total = reduce(np.add, parts)
        return _as_int_array(total % modulus if modulus else total)
    return _stepwise(expr, arrays, path, modulus)


def einsum(subscripts: str, *tensors: Tensor) -> Tensor:
    """Exact ``numpy.einsum`` over :class:`Tensor` operands.

    Explicit output subscripts are required. Large contractions are sliced
    so no intermediate exceeds ``SLICE_LIMIT`` entries.
    """
    if not tensors:
        raise ValueError("einsum needs operands")
    field = tensors[0].field
    for t in tensors[1:]:
        if t.field != field:
            raise FieldMismatch(f"{field} vs {t.field}")
    ins, out = _parse_subscripts(subscripts, len(tensors))
    dims = {}
    for sub, t in zip(ins, tensors):
        if len(sub) != t.legs:
            raise ValueError(f"subscript {sub!r} for tensor with {t.legs} legs")
        for c, d in zip(sub, t.dims):
            if dims.setdefault(c, d) != d:
                raise ValueError(f"index {c!r} has conflicting dims {dims[c]} and {d}")
    raw = _raw_einsum(ins, out, [t.num for t in tensors], field.characteristic)
    den = math.prod(t.den for t in tensors)
    return Tensor(field, np.asarray(raw), den)


# -- spec-level kernel operations ----------------------------------------

_LETTERS = string.ascii_letters


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    """Outer product; legs of the result are ``legs(a) + legs(b)``."""
    la, lb = _LETTERS[:a.legs], _LETTERS[a.legs:a.legs + b.legs]
    return einsum(f"{la},{lb}->{la}{lb}", a, b)


def contract(a: Tensor, b: Tensor, pairs) -> Tensor:
    """Sum over paired legs ``(leg_of_a, leg_of_b)``; free legs ordered a then b."""
    pairs = [(int(i), int(j)) for i, j in pairs]
    seen_a = [i for i, _ in pairs]
    seen_b = [j for _, j in pairs]
    if len(set(seen_a)) != len(seen_a) or len(set(seen_b)) != len(seen_b):
        raise ValueError("leg paired twice")
    sa = list(_LETTERS[:a.legs])
    sb = list(_LETTERS[a.legs:a.legs + b.legs])
    for i, j in pairs:
        if not (0 <= i < a.legs and 0 <= j < b.legs):
            raise ValueError(f"leg pair {(i, j)} out of range")
        if a.dims[i] != b.dims[j]:
            raise ValueError(f"dim mismatch on pair {(i, j)}: {a.dims[i]} vs {b.dims[j]}")
        sb[j] = sa[i]
    out = [c for k, c in enumerate(sa) if k not in seen_a] + [c for k, c in enumerate(sb) if k not in seen_b]
    return einsum(f"{''.join(sa)},{''.join(sb)}->{''.join(out)}", a, b)


def permute_legs(t: Tensor, perm) -> Tensor:
    """Result leg ``k`` is input leg ``perm[k]``."""
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(t.legs)):
        raise ValueError(f"invalid permutation {perm} for {t.legs} legs")
    return t.transpose(perm)


def flip(t: Tensor) -> Tensor:
    """The flip τ on a 2-leg tensor."""
    return permute_legs(t, (1, 0))


def embed_legs(r: Tensor, n: int, k1: int, k2: int, unit: Tensor) -> Tensor:
    """``R_{k1,k2}`` in ``H^{⊗n}``: legs of ``r`` at positions k1, k2 (1-based), ``unit`` elsewhere."""
    if r.legs != 2:
        raise ValueError("embed_legs needs a 2-leg tensor")
    if not (1 <= k1 <= n and 1 <= k2 <= n):
        raise ValueError(f"leg positions {(k1, k2)} out of range 1..{n}")
    if k1 == k2:
        raise ValueError("k1 == k2")
    ops = [r]
    subs = ["ab"]
    out = []
    spare = iter(_LETTERS[2:])
    for pos in range(1, n + 1):
        if pos == k1:
            out.append("a")
        elif pos == k2:
            out.append("b")
        else:
            c = next(spare)
            ops.append(unit)
            subs.append(c)
            out.append(c)
    return einsum(",".join(subs) + "->" + "".join(out), *ops)


# -- exact linear algebra ------------------------------------------------

class SolutionSet:
    """Result of :func:`solve_linear`: ``particular + span(kernel)``, or inconsistent."""

    def __init__(self, particular, kernel, consistent=True):
        self.particular = particular
        self.kernel = kernel
        self.consistent = consistent

    def __repr__(self):
        if not self.consistent:
            return "SolutionSet(inconsistent)"
        return f"SolutionSet(particular={self.particular!r}, kernel_dim={len(self.kernel)})"


def _sparse_rows(field: Field, matrix: Tensor):
    rows = []
    arr = matrix.num
    for i in range(arr.shape[0]):
        nz = np.nonzero(arr[i])[0]
        rows.append({int(j): matrix._scalar_at(arr[i, j]) for j in nz})
    return rows


def rref(field: Field, rows, ncols: int, augmented: bool = False):
    """Row-reduce sparse rows (dicts col -> scalar) to reduced echelon form.

    With ``augmented``, column ``ncols`` is the right-hand side and is never a
    pivot candidate. Returns ``(pivot_rows, pivot_cols, inconsistent)``
    where ``pivot_rows[k]`` has leading 1 in column ``pivot_cols[k]``.
    """
    inv = field.inv
    p = field.characteristic
    piv = {}  # pivot column -> row dict
    inconsistent = False
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        # reduce against existing pivots
        while True:
            cols = [c for c in r if c in piv]
            if not cols:
                break
            for c in cols:
                if c not in r:
                    continue
                f = r[c]
                for cc, vv in piv[c].items():
                    nv = r.get(cc, 0) - f * vv
                    if p:
                        nv %= p
                    if nv:
                        r[cc] = nv
                    else:
                        r.pop(cc, None)
        lead = [c for c in r if c < ncols]
        if not lead:
            if r:
                inconsistent = True
            continue
        c0 = min(lead)
        f = inv(r[c0])
        r = {c: (v * f) % p if p else v * f for c, v in r.items()}
        # back-substitute into existing pivot rows
        for pc, prow in piv.items():
            g = prow.get(c0)
            if g:
                for cc, vv in r.items():
                    nv = prow.get(cc, 0) - g * vv
                    if p:
                        nv %= p
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
        piv[c0] = r
    cols = sorted(piv)
    return [piv[c] for c in cols], cols, inconsistent


def _nullspace_from_rref(field, prows, pcols, ncols):
    free = [c for c in range(ncols) if c not in set(pcols)]
    kernel = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for prow, pc in zip(prows, pcols):
            x = prow.get(f)
            if x:
                v[pc] = -x % field.characteristic if field.characteristic else -x
        kernel.append(v)
    return kernel


def solve_sparse(field: Field, rows, ncols: int, rhs=None):
    """Solve ``A x = rhs`` for sparse rows; ``rhs`` is a list of scalars or None (homogeneous).

    Returns ``(particular, kernel)`` as lists of scalar lists, or ``None``
    when inconsistent.
    """
    if rhs is not None:
        rows = [{**r, ncols: b} if b else dict(r) for r, b in zip(rows, rhs)]
    prows, pcols, bad = rref(field, rows, ncols, augmented=rhs is not None)
    if bad:
        return None
    part = [field.zero] * ncols
    for prow, pc in zip(prows, pcols):
        part[pc] = prow.get(ncols, field.zero)
    return part, _nullspace_from_rref(field, prows, pcols, ncols)


def solve_linear(system: Tensor, rhs: Tensor) -> SolutionSet:
    """Exact Gaussian elimination for ``system @ x = rhs``."""
    if system.legs != 2 or rhs.legs != 1 or system.dims[0] != rhs.dims[0]:
        raise ValueError(f"incompatible shapes {system.dims} and {rhs.dims}")
    field = system.field
    if rhs.field != field:
        raise FieldMismatch(f"{field} vs {rhs.field}")
    n = system.dims[1]
    res = solve_sparse(field, _sparse_rows(field, system), n, rhs.entries())
    if res is None:
        return SolutionSet(None, [], consistent=False)
    part, kernel = res
    kernel = [Tensor.from_scalars(field, v, (n,)) for v in kernel]
    return SolutionSet(Tensor.from_scalars(field, part, (n,)), echelon_basis(kernel, field, n))


def echelon_basis(vectors, field: Field, dim: int) -> list:
    """Reduced row echelon basis of the span of 1-leg tensors."""
    rows = [dict(nz) for nz in ({i[0]: x for i, x in v.nonzero()} for v in vectors)]
    prows, _, _ = rref(field, rows, dim)
    out = []
    for r in prows:
        vals = [field.zero] * dim
        for c, x in r.items():
            vals[c] = x
        out.append(Tensor.from_scalars(field, vals, (dim,)))
    return out


def annihilator(basis, field: Field, dim: int) -> Tensor:
    """Matrix whose rows span the functionals vanishing on ``span(basis)``.

    ``v`` lies in the span iff ``annihilator @ v == 0``. Shape is
    ``(dim - rank, dim)``.
    """
    if basis:
        mat = Tensor.from_scalars(field, [x for v in basis for x in v.entries()], (len(basis), dim))
        rows = _sparse_rows(field, mat)
    else:
        rows = []
    prows, pcols, _ = rref(field, rows, dim)
    kernel = _nullspace_from_rref(field, prows, pcols, dim)
    if not kernel:
        return Tensor.zeros(field, (0, dim))
    return Tensor.from_scalars(field, [x for v in kernel for x in v], (len(kernel), dim))


def subspace_membership(v: Tensor, basis) -> bool:
    """True iff ``v`` lies in ``span(basis)``, exactly."""
    dim = v.dims[0]
    for b in basis:
        if b.dims != v.dims:
            raise ValueError("dimension mismatch")
    ann = annihilator(list(basis), v.field, dim)
    if ann.dims[0] == 0:
        return True
    return einsum("ij,j->i", ann, v).is_zero()


def matrix_inverse(m: Tensor) -> Tensor | None:
    """Exact inverse of a square 2-leg tensor, or None when singular."""
    n = m.dims[0]
    if m.dims != (n, n):
        raise ValueError("square matrix required")
    field = m.field
    rows = _sparse_rows(field, m)
    for i, r in enumerate(rows):
        r[n + i] = field.one
    prows, pcols, _ = rref(field, rows, n)
    if len(pcols) != n:
        return None
    vals = [field.zero] * (n * n)
    for prow, pc in zip(prows, pcols):
        for c, x in prow.items():
            if c >= n:
                vals[pc * n + (c - n)] = x
    return Tensor.from_scalars(field, vals, (n, n))


__all__ = [
    "QQ", "Tensor", "SolutionSet", "einsum", "tensor_product", "contract",
    "permute_legs", "flip", "embed_legs", "solve_linear", "solve_sparse", "rref",
    "echelon_basis", "annihilator", "subspace_membership", "matrix_inverse",
]

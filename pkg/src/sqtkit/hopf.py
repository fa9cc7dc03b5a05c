"""Finite-dimensional Hopf algebras given by structure constants.

Conventions (all tensors exact, basis ``e_0 .. e_{d-1}``):

* ``mul[i, j, k]``    coefficient of ``e_k`` in ``e_i e_j``
* ``unit[k]``         coefficient of ``e_k`` in ``1``
* ``comul[i, j, k]``  coefficient of ``e_j ⊗ e_k`` in ``Δ(e_i)``
* ``counit[i]``       ``ε(e_i)``
* ``antipode[i, j]``  coefficient of ``e_j`` in ``S(e_i)``

Matrices of linear maps ``H -> H`` are stored input-leg first, like
``antipode``.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .field import Field, FieldMismatch
from .report import FAIL, PASS, Check, Report, compare
from .sweedler import sweedler
from .tensor import (Tensor, annihilator, echelon_basis, einsum, matrix_inverse,
                     solve_sparse)


class SingularAntipode(ValueError):
    pass


class HopfAlgebra:
    """Structure constants of a finite-dimensional Hopf algebra.

    With ``strict=True`` (the default) the inverse antipode and the centre
    are computed at construction and a singular antipode raises
    :class:`SingularAntipode`. ``strict=False`` builds a candidate for
    :func:`check_hopf_axioms` without those guarantees.
    """

    def __init__(self, field: Field, labels, mul, unit, comul, counit, antipode,
                 *, name: str = "", strict: bool = True):
        self.field = field
        self.labels = list(labels)
        self.name = name
        d = len(self.labels)
        shapes = {"mul": (mul, (d, d, d)), "unit": (unit, (d,)), "comul": (comul, (d, d, d)),
                  "counit": (counit, (d,)), "antipode": (antipode, (d, d))}
        for key, (t, shape) in shapes.items():
            if t.dims != shape:
                raise ValueError(f"{key} has shape {t.dims}, expected {shape}")
            if t.field != field:
                raise ValueError(f"{key} is over {t.field}, expected {field}")
        self.mul, self.unit, self.comul = mul, unit, comul
        self.counit, self.antipode = counit, antipode
        self._delta = {}
        if strict:
            if self.antipode_inv is None:
                raise SingularAntipode(f"{name or 'algebra'}: antipode is not bijective")
            self.center  # noqa: B018 - eager cache

    def __repr__(self):
        return f"HopfAlgebra({self.name or '?'}, dim={self.dim}, {self.field})"

    @property
    def dim(self) -> int:
        return len(self.labels)

    @cached_property
    def identity(self) -> Tensor:
        return Tensor.identity(self.field, self.dim)

    @cached_property
    def antipode_inv(self) -> Tensor | None:
        return matrix_inverse(self.antipode)

    @cached_property
    def antipode_sq(self) -> Tensor:
        return einsum("ij,jk->ik", self.antipode, self.antipode)

    @cached_property
    def center(self) -> list:
        return compute_center(self)

    @cached_property
    def center_annihilator(self) -> Tensor:
        """Rows vanish exactly on Z(H); ``z ∈ Z(H)`` iff ``ann @ z == 0``."""
        return annihilator(self.center, self.field, self.dim)

    def delta(self, n: int) -> Tensor:
        """``Δ^n`` as an (n+2)-leg tensor, left-nested: ``Δ^n = (Δ ⊗ id^{n-1}) Δ^{n-1}``."""
        if n < 0:
            raise ValueError("n must be >= 0")
        if n not in self._delta:
            if n == 0:
                t = self.identity
            elif n == 1:
                t = self.comul
            else:
                prev = self.delta(n - 1)
                k = prev.legs
                letters = "abcdefghijklmnopqrstuvwxyz"
                src = letters[:k]
                # split the first output leg (src[1]) with Δ
                out = src[0] + "YZ" + src[2:]
                t = einsum(f"{src},{src[1]}YZ->{out}", prev, self.comul)
            self._delta[n] = t
        return self._delta[n]

    # -- element helpers ------------------------------------------------
    def basis_vector(self, i: int) -> Tensor:
        return Tensor.basis(self.field, (self.dim,), (i,))

    def element(self, coeffs: dict) -> Tensor:
        """Element from ``{label_or_index: scalar}``."""
        items = []
        for k, v in coeffs.items():
            i = self.labels.index(k) if isinstance(k, str) else k
            items.append(((i,), v))
        return Tensor.from_sparse(self.field, (self.dim,), items)

    def product(self, x: Tensor, y: Tensor) -> Tensor:
        return einsum("i,j,ijk->k", x, y, self.mul)

    def apply(self, matrix: Tensor, x: Tensor) -> Tensor:
        return einsum("i,ij->j", x, matrix)

    def left_mult(self, x: Tensor) -> Tensor:
        """Matrix (input-leg first) of ``y -> x y``."""
        return einsum("i,ijk->jk", x, self.mul)

    def right_mult(self, x: Tensor) -> Tensor:
        """Matrix (input-leg first) of ``y -> y x``."""
        return einsum("j,ijk->ik", x, self.mul)

    @property
    def one(self) -> Tensor:
        return self.unit

    @cached_property
    def unit2(self) -> Tensor:
        return einsum("a,b->ab", self.unit, self.unit)

    def is_commutative(self) -> bool:
        return self.mul == self.mul.transpose((1, 0, 2))

    def is_cocommutative(self) -> bool:
        return self.comul == self.comul.transpose((0, 2, 1))

    def same_structure(self, other: "HopfAlgebra") -> bool:
        """Entrywise equality of all structure constants."""
        return (self.field == other.field and self.dim == other.dim
                and self.mul == other.mul and self.unit == other.unit
                and self.comul == other.comul and self.counit == other.counit
                and self.antipode == other.antipode)


def _anchor_std(what: str) -> str:
    return f"Hopf axioms: {what}"


def check_hopf_axioms(H: HopfAlgebra) -> Report:
    """Bialgebra and antipode identities, each entrywise with a witness."""
    f = H.field
    idm = H.identity
    rep = Report()
    m, u, c, e, S = H.mul, H.unit, H.comul, H.counit, H.antipode

    rep.add(compare("mul associative", _anchor_std("μ(μ⊗id) = μ(id⊗μ)"),
                    einsum("abx,xcd->abcd", m, m), einsum("bcy,ayd->abcd", m, m)))
    rep.add(compare("unit left", _anchor_std("μ(η⊗id) = id"), einsum("u,uab->ab", u, m), idm))
    rep.add(compare("unit right", _anchor_std("μ(id⊗η) = id"), einsum("u,aub->ab", u, m), idm))
    rep.add(compare("comul coassociative", _anchor_std("(Δ⊗id)Δ = (id⊗Δ)Δ"),
                    einsum("axd,xbc->abcd", c, c), einsum("aby,ycd->abcd", c, c)))
    rep.add(compare("counit left", _anchor_std("(ε⊗id)Δ = id"), einsum("x,axb->ab", e, c), idm))
    rep.add(compare("counit right", _anchor_std("(id⊗ε)Δ = id"), einsum("x,abx->ab", e, c), idm))
    rep.add(compare("comul multiplicative", _anchor_std("Δ(ab) = Δ(a)Δ(b)"),
                    einsum("abx,xpq->abpq", m, c),
                    einsum("ars,bty,rtp,syq->abpq", c, c, m, m)))
    rep.add(compare("comul unital", _anchor_std("Δ(1) = 1⊗1"), einsum("u,upq->pq", u, c), H.unit2))
    rep.add(compare("counit multiplicative", _anchor_std("ε(ab) = ε(a)ε(b)"),
                    einsum("abx,x->ab", m, e), einsum("a,b->ab", e, e)))
    rep.add(compare("counit unital", _anchor_std("ε(1) = 1"),
                    einsum("u,u->", u, e), Tensor.scalar_one(f)))
    eta_eps = einsum("a,b->ab", e, u)
    rep.add(compare("antipode left", _anchor_std("μ(S⊗id)Δ = ηε"),
                    einsum("axy,xz,zyb->ab", c, S, m), eta_eps))
    rep.add(compare("antipode right", _anchor_std("μ(id⊗S)Δ = ηε"),
                    einsum("axy,yz,xzb->ab", c, S, m), eta_eps))
    inv = matrix_inverse(S)
    rep.add(Check("antipode bijective", "Def 1.1 (bijective antipode)",
                  PASS if inv is not None else FAIL,
                  None if inv is not None else {"rank_deficient": True}))
    return rep


def compute_center(H: HopfAlgebra) -> list:
    """Echelon basis of Z(H), from ``z e_i - e_i z = 0`` for every basis ``e_i``."""
    d = H.dim
    comm = einsum("zik->ikz", H.mul) - einsum("izk->ikz", H.mul)
    # one equation per (i, k)
    eqs = {}
    for (i, k, z), val in comm.nonzero():
        eqs.setdefault((i, k), {})[z] = val
    _, kernel = solve_sparse(H.field, list(eqs.values()), d)
    rows = [Tensor.from_scalars(H.field, v, (d,)) for v in kernel]
    return echelon_basis(rows, H.field, d)


def in_center(H: HopfAlgebra, z: Tensor) -> bool:
    ann = H.center_annihilator
    return ann.dims[0] == 0 or einsum("ij,j->i", ann, z).is_zero()


def dualize(H: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the coordinate functionals ``e_i*``."""
    return HopfAlgebra(
        H.field, [f"{x}*" for x in H.labels],
        mul=H.comul.transpose((1, 2, 0)), unit=H.counit,
        comul=H.mul.transpose((2, 0, 1)), counit=H.unit,
        antipode=H.antipode.transpose(),
        name=f"{H.name}*" if H.name else "",
    )


def opposite(H: HopfAlgebra) -> HopfAlgebra:
    """``H^op``: flipped multiplication, antipode ``S^{-1}``."""
    if H.antipode_inv is None:
        raise SingularAntipode("opposite algebra needs a bijective antipode")
    return HopfAlgebra(H.field, H.labels, H.mul.transpose((1, 0, 2)), H.unit, H.comul,
                       H.counit, H.antipode_inv, name=f"{H.name}^op" if H.name else "")


def coopposite(H: HopfAlgebra) -> HopfAlgebra:
    """``H^cop``: flipped comultiplication, antipode ``S^{-1}``."""
    if H.antipode_inv is None:
        raise SingularAntipode("co-opposite algebra needs a bijective antipode")
    return HopfAlgebra(H.field, H.labels, H.mul, H.unit, H.comul.transpose((0, 2, 1)),
                       H.counit, H.antipode_inv, name=f"{H.name}^cop" if H.name else "")


def tensor_hopf(H: HopfAlgebra, L: HopfAlgebra) -> HopfAlgebra:
    """``H ⊗ L`` on basis ``(i, j) -> i * dim(L) + j``."""
    if H.field != L.field:
        raise FieldMismatch(f"{H.field} vs {L.field}")
    a, b = H.dim, L.dim
    n = a * b
    mul = einsum("ikm,jln->ijklmn", H.mul, L.mul).reshape((n, n, n))
    comul = einsum("ikm,jln->ijklmn", H.comul, L.comul).reshape((n, n, n))
    unit = einsum("i,j->ij", H.unit, L.unit).reshape((n,))
    counit = einsum("i,j->ij", H.counit, L.counit).reshape((n,))
    S = einsum("ik,jl->ijkl", H.antipode, L.antipode).reshape((n, n))
    labels = [f"{x}⊗{y}" for x in H.labels for y in L.labels]
    name = f"{H.name}⊗{L.name}" if H.name and L.name else ""
    return HopfAlgebra(H.field, labels, mul, unit, comul, counit, S, name=name)


def adjoint_coaction_tensor(H: HopfAlgebra) -> Tensor:
    """``Ad(h) = h2 ⊗ S(h1) h3`` as a 3-leg tensor ``[h, first, second]``."""
    return sweedler(H, "h2 | S(h1) h3")


def adjoint_coaction(H: HopfAlgebra, h: Tensor) -> Tensor:
    return einsum("h,hab->ab", h, adjoint_coaction_tensor(H))


def second_leg_central(H: HopfAlgebra, t: Tensor):
    """For a 3-leg ``[h, a, b]`` tensor, the first ``(h, a)`` whose b-vector is not central."""
    ann = H.center_annihilator
    if ann.dims[0] == 0:
        return None
    bad = einsum("hab,fb->haf", t, ann)
    if bad.is_zero():
        return None
    h, a, _ = (int(x) for x in np.argwhere(bad.num != 0)[0])
    return h, a


def is_semicocommutative(H: HopfAlgebra):
    """``(True, None)`` or ``(False, witness)``: Ad lands in ``H ⊗ Z(H)``."""
    ad = adjoint_coaction_tensor(H)
    hit = second_leg_central(H, ad)
    if hit is None:
        return True, None
    h, a = hit
    vec = [H.field.format(ad[h, a, b]) for b in range(H.dim)]
    return False, {"h": H.labels[h], "component": H.labels[a], "second_leg": vec}


def check_semicocommutative_s2(H: HopfAlgebra) -> Check:
    """``S^2(h) = h2 S(h1) h3`` on the basis (holds for semicocommutative H)."""
    rhs = sweedler(H, "h2 S(h1) h3")
    return compare("S^2 = h2 S(h1) h3", "intro Proposition", H.antipode_sq, rhs)

"""The Hopf algebra ``H⋈H*`` of Theorem 2.11 and its R-matrix ``T``.

Basis of the double: ``e_i ⋈ e_j*`` at index ``i·d + j`` (h-leg major).

The hit action ``↼`` is a construction option:

* ``hit="left"``  (default): ``(ψ↼a)(x) = ψ(a x)``
* ``hit="right"``:           ``(ψ↼a)(x) = ψ(x a)``

Build-time Hopf-axiom and quasitriangularity checks arbitrate between them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from .field import QQ
from .groups import FiniteGroup, dual_group_algebra

from .hopf import HopfAlgebra, check_hopf_axioms
from .modules import NormalModule
from .report import FAIL, INFO, PASS, Check, Report, boolean, compare
from .sqt import SqtStructure, check_quasitriangular, check_sqt
from .tensor import Tensor, einsum

HIT_CONVENTIONS = ("left", "right")
DEFAULT_HIT = "left"


class DoubleError(ValueError):
    """The candidate double failed an axiom; ``report`` names the identity."""

    def __init__(self, report: Report, hit: str):
        self.report = report
        self.hit = hit
        names = ", ".join(c.name for c in report.failures())
        super().__init__(f"double with hit={hit!r} fails: {names}")


def _hit_tensor(H: HopfAlgebra, hit: str) -> Tensor:
    """``[a, x, j]``: coefficient of ``e_x*`` in ``e_j* ↼ e_a``."""
    if hit == "left":
        return H.mul  # e_j*(e_a e_x) = mul[a, x, j]
    if hit == "right":
        return H.mul.transpose((1, 0, 2))  # e_j*(e_x e_a) = mul[x, a, j]
    raise ValueError(f"hit must be one of {HIT_CONVENTIONS}, got {hit!r}")


def double_mul(S: SqtStructure, hit: str = DEFAULT_HIT) -> Tensor:
    """Multiplication of ``H⋈H*`` as a ``(d², d², d²)`` tensor.

    ``(h⋈ψ)(l⋈φ) = h ν(l)' ⋈ (ψ ↼ ν(l)'') φ`` where ``ν(l) = ν(l)' ⊗ ν(l)''``
    is the coaction ``R2 l2 R'2 ⊗ S(l1) S(R1) l3 R'1``.
    """
    H, d = S.H, S.dim
    # product in H*: e_x* e_k* = sum_z comul[z, x, k] e_z*
    t = einsum("lPQ,iPp,Qxj,zxk->ijlkpz", S.nu, H.mul, _hit_tensor(H, hit), H.comul)
    return t.reshape((d * d, d * d, d * d))


def double_unit(H: HopfAlgebra) -> Tensor:
    """``1 ⋈ ε``; the unit of ``H*`` is the counit of ``H``."""
    return einsum("i,j->ij", H.unit, H.counit).reshape((H.dim ** 2,))


def double_counit(H: HopfAlgebra) -> Tensor:
    """``ε_H ⊗ ε_{H*}``, with ``ε_{H*}(ψ) = ψ(1)``."""
    return einsum("i,j->ij", H.counit, H.unit).reshape((H.dim ** 2,))


def double_comul(H: HopfAlgebra) -> Tensor:
    """Codiagonal ``Δ(h⋈ψ) = (h1⋈ψ1) ⊗ (h2⋈ψ2)``; ``Δ_{H*}`` is dual to ``mul``."""
    d = H.dim
    t = einsum("iac,bej->ijabce", H.comul, H.mul)
    return t.reshape((d * d, d * d, d * d))


def double_antipode(H: HopfAlgebra, mul: Tensor) -> Tensor:
    """``S(h⋈ψ) = (1 ⋈ ψ∘S)(S(h) ⋈ ε)`` computed in the double."""
    d = H.dim
    # 1 ⋈ e_j*∘S = sum_x S[x, j] (1 ⋈ e_x*)
    left = einsum("u,xj->jux", H.unit, H.antipode).reshape((d, d * d))
    # S(e_i) ⋈ ε = sum_y S[i, y] counit[w] (e_y ⋈ e_w*)
    right = einsum("iy,w->iyw", H.antipode, H.counit).reshape((d, d * d))
    t = einsum("jA,iB,ABC->ijC", left, right, mul)
    return t.reshape((d * d, d * d))


def double_T(S: SqtStructure) -> Tensor:
    """``T = Σ_i (R1 h_i ⋈ ε) ⊗ (R2 ⋈ h_i*)``."""
    H, d = S.H, S.dim
    t = einsum("rc,rea,b->abce", S.R, H.mul, H.counit)
    return t.reshape((d * d, d * d))


def double_labels(H: HopfAlgebra) -> list:
    return [f"{a}⋈{b}*" for a in H.labels for b in H.labels]


def _carrier(S: SqtStructure, hit: str, *, strict: bool) -> HopfAlgebra:
    H = S.H
    mul = double_mul(S, hit)
    return HopfAlgebra(S.field, double_labels(H), mul, double_unit(H), double_comul(H),
                       double_counit(H), double_antipode(H, mul),
                       name=f"{S.name}⋈{S.name}*", strict=strict)


def check_double(carrier: HopfAlgebra, T: Tensor) -> Report:
    """Hopf axioms, Def 1.1 conditions for ``T`` and the QT intertwining identity."""
    rep = Report()
    rep.extend(check_hopf_axioms(carrier))
    rep.extend(check_sqt(carrier, T))
    rep.extend(check_quasitriangular(carrier, T))
    return rep


@dataclass
class DoubleAlgebra:
    """``H⋈H*`` on the basis ``e_i ⋈ e_j*`` with its R-matrix ``Tmatrix``."""

    base: SqtStructure
    carrier: HopfAlgebra
    Tmatrix: Tensor
    hit: str = DEFAULT_HIT
    report: Report | None = None

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def index(self, i: int, j: int) -> int:
        return i * self.base.dim + j

    @cached_property
    def structure(self) -> SqtStructure:
        """``(H⋈H*, T)`` as a (quasitriangular) structure, already verified."""
        return SqtStructure(self.carrier, self.Tmatrix, name=self.carrier.name,
                            claims_quasitriangular=True, check=False)


def build_double(S: SqtStructure, *, hit: str = DEFAULT_HIT, check: bool = True) -> DoubleAlgebra:
    """The Hopf algebra of Theorem 2.11, verified at build time.

    Raises :class:`DoubleError` naming the failing identity when the
    candidate is not a quasitriangular Hopf algebra.
    """
    T = double_T(S)
    if not check:
        return DoubleAlgebra(S, _carrier(S, hit, strict=True), T, hit)
    candidate = _carrier(S, hit, strict=False)
    rep = check_double(candidate, T)
    if not rep.passed:
        raise DoubleError(rep, hit)
    return DoubleAlgebra(S, _carrier(S, hit, strict=True), T, hit, rep)


# -- twisting map -----------------------------------------------------------

def _one_psi(H: HopfAlgebra) -> Tensor:
    """``[j, X]``: ``1 ⋈ e_j*`` in the double basis."""
    return einsum("u,jx->jux", H.unit, Tensor.identity(H.field, H.dim)).reshape((H.dim, H.dim ** 2))


def _h_eps(H: HopfAlgebra) -> Tensor:
    """``[l, X]``: ``e_l ⋈ ε`` in the double basis."""
    return einsum("lu,w->luw", Tensor.identity(H.field, H.dim), H.counit).reshape((H.dim, H.dim ** 2))


def twisting_map(D: DoubleAlgebra) -> Tensor:
    """``χ(ψ⊗h) = (1⋈ψ)(h⋈ε)`` as ``[j, l, i, k]``: ``e_j*⊗e_l ↦ Σ e_i⊗e_k*``."""
    H, d = D.base.H, D.base.dim
    chi = einsum("jA,lB,ABC->jlC", _one_psi(H), _h_eps(H), D.carrier.mul)
    return chi.reshape((d, d, d, d))


def check_twisting_map(D) -> Report:
    """The four twisted-map conditions and the product they induce.

    Accepts a :class:`DoubleAlgebra` or the base structure (built here).
    """
    if isinstance(D, SqtStructure):
        D = build_double(D)
    H, d = D.base.H, D.base.dim
    chi = twisting_map(D)
    mulstar = H.comul.transpose((1, 2, 0))  # e_x* e_k* = Σ_z mulstar[x,k,z] e_z*
    anchor = "Thm 2.11 proof"
    rep = Report()
    rep.add(compare("χ(H*⊗μ) = (μ⊗H*)(H⊗χ)(χ⊗H)", anchor,
                    einsum("lmn,jnik->jlmik", H.mul, chi),
                    einsum("jlab,bmck,aci->jlmik", chi, chi, H.mul)))
    rep.add(compare("χ(μ*⊗H) = (H⊗μ*)(χ⊗H*)(H*⊗χ)", anchor,
                    einsum("jJz,zlik->jJlik", mulstar, chi),
                    einsum("Jlab,jaic,cbk->jJlik", chi, chi, mulstar)))
    ident = Tensor.identity(H.field, d)
    rep.add(compare("χ(ε⊗h) = h⊗ε", anchor, einsum("j,jlik->lik", H.counit, chi),
                    einsum("li,k->lik", ident, H.counit)))
    rep.add(compare("χ(ψ⊗1) = 1⊗ψ", anchor, einsum("l,jlik->jik", H.unit, chi),
                    einsum("i,jk->jik", H.unit, ident)))
    induced = einsum("jlab,iac,bkz->ijlkcz", chi, H.mul, mulstar).reshape((d * d,) * 3)
    rep.add(compare("(h⋈ψ)(l⋈φ) = h χ(ψ⊗l) φ", anchor, D.carrier.mul, induced))
    return rep


def check_example_212(D: DoubleAlgebra) -> Check:
    """For quasitriangular ``(H,R)`` the double is the tensor product algebra ``H⊗H*``."""
    H, d = D.base.H, D.base.dim
    plain = einsum("ilp,zjk->ijlkpz", H.mul, H.comul).reshape((d * d,) * 3)
    return compare("H⋈H* = H⊗H* as algebras", "Example 2.12", D.carrier.mul, plain)


def check_antipode_formula(D: DoubleAlgebra) -> Check:
    """The stored antipode against an independent expansion of ``(1⋈ψ∘S)(S(h)⋈ε)``."""
    H, d = D.base.H, D.base.dim
    mul = D.carrier.mul.reshape((d, d, d, d, d, d))
    # (1 ⋈ e_x*)(e_y ⋈ ε) summed against S[x, j] S[i, y]
    ref = einsum("u,w,xj,iy,uxywpz->ijpz", H.unit, H.counit, H.antipode, H.antipode, mul)
    return compare("S(h⋈ψ) = (1⋈ψ∘S)(S(h)⋈ε)", "Thm 2.11", D.carrier.antipode,
                   ref.reshape((d * d, d * d)))


def check_counit(D: DoubleAlgebra) -> Check:
    H = D.base.H
    # ε_{H*}(e_j*) = e_j*(1) = unit[j]
    ref = einsum("i,j->ij", H.counit, H.unit).reshape((H.dim ** 2,))
    return compare("counit = ε_H⊗ε_{H*}", "Thm 2.11", D.carrier.counit, ref)


# -- normal modules as D-modules ---------------------------------------------

def double_module_action(D: DoubleAlgebra, M: NormalModule) -> list:
    """``(h⋈ψ)·m = h·m0 ψ(m1)``: one matrix ``ρ_i C_j`` per basis element ``e_i⋈e_j*``."""
    if M.variant != "left-right":
        raise ValueError("the double acts on left-right normal modules")
    d = D.base.dim
    return [M.action[i] @ M.coaction[j] for i in range(d) for j in range(d)]


def check_double_action(D: DoubleAlgebra, action) -> Report:
    """Unitality and associativity of a D-action given by one matrix per basis element."""
    from .modules import _compare, _weights
    from .sparse import SparseMatrix, stack_rows

    H, f, n = D.carrier, D.base.field, D.dim
    m = action[0].shape[0]
    acts = stack_rows(f, action)
    rep = Report()
    unit = _weights(H.unit.reshape((1, n)), 1, n) @ acts
    rep.add(_compare("D-action unital", "Thm 2.11", unit, SparseMatrix.identity(f, m).flatten()))
    prods = stack_rows(f, [action[x] @ action[y] for x in range(n) for y in range(n)])
    rhs = _weights(H.mul, n * n, n) @ acts
    rep.add(_compare("D-action associative", "Thm 2.11", prods, rhs,
                     lambda r, c: {"pair": [H.labels[r // n], H.labels[r % n]]}))
    return rep


def module_from_double_action(D: DoubleAlgebra, action, name: str = "") -> NormalModule:
    """Converse: ``ρ_i = (e_i⋈ε)·`` and ``C_j = (1⋈e_j*)·``."""
    from .sparse import linear_combination

    H, d = D.base.H, D.base.dim
    f = H.field
    shape = action[0].shape
    eps = [H.counit[(j,)] for j in range(d)]
    one = [H.unit[(i,)] for i in range(d)]
    rho = [linear_combination(f, eps, action[i * d:(i + 1) * d], shape) for i in range(d)]
    coact = [linear_combination(f, one, action[j::d], shape) for j in range(d)]
    return NormalModule(D.base, rho, coact, "left-right", name)


def double_module_equivalence(D: DoubleAlgebra, M: NormalModule) -> tuple:
    """Forward action on ``M`` with its checks and the exact round trip.

    Returns ``(action matrices, report)``.
    """
    from .modules import check_normal

    action = double_module_action(D, M)
    rep = check_double_action(D, action)
    back = module_from_double_action(D, action, M.name)
    same = (all(a == b for a, b in zip(back.action, M.action))
            and all(a == b for a, b in zip(back.coaction, M.coaction)))
    rep.add(Check("round trip", "Thm 2.11", PASS if same else FAIL,
                  None if same else {"module": M.name}))
    rep.extend(check_normal(back))
    return action, rep


# -- Example 2.13 -------------------------------------------------------------

ORIENTATIONS = ("x' = yxy⁻¹", "x' = y⁻¹xy")


@dataclass
class Example213:
    """The double of ``(k[G]*, 1⊗1)`` against the rule of Example 2.13."""

    group: FiniteGroup
    double: DoubleAlgebra
    mismatches: dict  # orientation -> number of basis products that differ
    T_matches: bool
    T_summands: int
    report: Report

    @property
    def matching(self) -> list:
        return [o for o, k in self.mismatches.items() if k == 0]

    def label(self, X: int) -> str:
        n = self.group.order
        x, y = divmod(X, n)
        return f"δ_{self.group.labels[x]}⋈{self.group.labels[y]}"

    def table_text(self) -> str:
        """Every nonzero product of basis elements, one per line."""
        n2 = self.double.dim
        mul, f = self.double.carrier.mul, self.double.base.field
        lines = []
        for X in range(n2):
            for Y in range(n2):
                terms = [(Z, mul[(X, Y, Z)]) for Z in range(n2) if mul[(X, Y, Z)] != 0]
                if terms:
                    rhs = " + ".join(self.label(Z) if c == 1 else f"{f.format(c)}·{self.label(Z)}"
                                     for Z, c in terms)
                    lines.append(f"({self.label(X)})({self.label(Y)}) = {rhs}")
        return "\n".join(lines)


def _example_213_rule(G: FiniteGroup, field, orientation: str) -> Tensor:
    n = G.order
    items = []
    for x, y, x2, y2 in product(range(n), repeat=4):
        target = G.conj(y, x) if orientation == ORIENTATIONS[0] else G.conj(G.inv(y), x)
        if x2 == target:
            items.append(((x * n + y, x2 * n + y2, x * n + G.mul(y, y2)), 1))
    return Tensor.from_sparse(field, (n * n,) * 3, items)


def example_213_table(G: FiniteGroup, field=QQ, *, hit: str = DEFAULT_HIT) -> Example213:
    """Build ``k[G]* ⋈ k[G]`` and compare it cell by cell with Example 2.13.

    ``δ_x ⋈ y`` is the basis element ``x·|G| + y``: the dual basis of the
    ``δ_x`` is the group itself.
    """
    H = dual_group_algebra(G, field)
    D = build_double(SqtStructure(H, H.unit2, name=H.name), hit=hit)
    n, n2 = G.order, G.order ** 2
    mul = D.carrier.mul
    rep = Report()
    mismatches = {}
    for o in ORIENTATIONS:
        diff = (mul - _example_213_rule(G, field, o)).num.reshape((n2 * n2, n2))
        bad = int(np.count_nonzero(np.any(diff != 0, axis=1)))
        mismatches[o] = bad
        rep.add(Check(f"products match, {o}", "Example 2.13", INFO,
                      detail=f"{bad} of {n2 * n2} basis products differ"))
    e = G.identity
    T_rule = Tensor.from_sparse(field, (n2, n2), (
        ((x * n + e, y * n + x), 1) for x in range(n) for y in range(n)))
    rep.add(compare("T = Σ (δ_x⋈1)⊗(δ_y⋈x)", "Example 2.13", D.Tmatrix, T_rule))
    matching = [o for o, k in mismatches.items() if k == 0]
    rep.add(Check("some orientation matches every product", "Example 2.13",
                  PASS if matching else FAIL, None if matching else dict(mismatches)))
    return Example213(G, D, mismatches, D.Tmatrix == T_rule,
                      sum(1 for _ in D.Tmatrix.nonzero()), rep)

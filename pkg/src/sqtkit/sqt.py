"""Semiquasitriangular structures ``(H, R)`` and the identities they satisfy.

Elements of ``H^{⊗n}`` are n-leg tensors. ``R_{k1,k2}`` is placed with
:func:`sqtkit.tensor.embed_legs` (1-based legs). Products in ``H^{⊗n}``
that only involve a two-leg factor are done by :func:`mul_local`, which
multiplies two legs at a time instead of forming the full product tensor.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .field import FieldMismatch
from .hopf import (HopfAlgebra, coopposite, opposite, second_leg_central, tensor_hopf)
from .report import FAIL, PASS, SKIPPED, Check, Report, boolean, compare
from .sweedler import sweedler
from .tensor import Tensor, echelon_basis, einsum, embed_legs, solve_sparse, subspace_membership

_LEGS = "abcdefghijklmnop"

NU_FORMULA = "R2 h2 R'2 | S(h1) S(R1) h3 R'1"
NU_FORMULA_6 = "R1 h2 R'1 | S(R'2) S(h1) R2 h3"
NU_FORMULAS_19 = (
    "R2 h2 R'2 | S2(R'1) S(h1) S(R1) h3",
    "R1 h2 S(R'1) | S(h1) R2 h3 R'2",
)
NU_TILDE_FORMULAS = (
    "R2 h2 R'2 | R1 h1 S(R'1) S(h3)",
    "R1 h2 R'1 | h1 R'2 S(h3) S(R2)",
    "R2 h2 R'2 | h1 S(R'1) S(h3) S2(R1)",
    "S(R1) h2 R'1 | R2 h1 R'2 S(h3)",
)

# Def 1.1 (1)-(4), each as (lhs, rhs) in H^{⊗3}
CONDITIONS = (
    ("R1_1 | R1_2 | R2", "R1 | R'1 | R2 R'2"),
    ("R1 | R2_1 | R2_2", "R1 R'1 | R'2 | R2"),
    ("R1 | R2_2 R'1 | R2_1 R'2", "R1 | R'1 R2_1 | R'2 R2_2"),
    ("R1_2 R'1 | R1_1 R'2 | R2", "R'1 R1_1 | R'2 R1_2 | R2"),
)


class InvalidStructure(ValueError):
    """Raised when a structure fails validation at construction."""

    def __init__(self, report: Report, name: str = ""):
        self.report = report
        names = ", ".join(c.name for c in report.failures())
        super().__init__(f"{name or 'structure'} fails: {names}")


# -- products in H⊗H and H^{⊗n} ------------------------------------------

def mul2(H: HopfAlgebra, x: Tensor, y: Tensor) -> Tensor:
    """Product ``x y`` in the algebra ``H ⊗ H``."""
    return einsum("ab,cd,acx,bdy->xy", x, y, H.mul, H.mul)


def mul_local(H: HopfAlgebra, x: Tensor, r: Tensor, legs, *, left: bool = False) -> Tensor:
    """``x · r_{legs}`` (or ``r_{legs} · x`` with ``left=True``) in ``H^{⊗N}``.

    ``legs`` are two distinct 0-based leg positions of ``x``.
    """
    n = x.legs
    p, q = legs
    src = _LEGS[:n]
    out = list(src)
    out[p], out[q] = "Y", "Z"
    if left:
        fp, fq = f"w{src[p]}Y", f"x{src[q]}Z"
    else:
        fp, fq = f"{src[p]}wY", f"{src[q]}xZ"
    return einsum(f"{src},wx,{fp},{fq}->{''.join(out)}", x, r, H.mul, H.mul)


def tensor_unit(H: HopfAlgebra, n: int) -> Tensor:
    t = H.unit
    for _ in range(n - 1):
        t = einsum(f"{_LEGS[:t.legs]},z->{_LEGS[:t.legs]}z", t, H.unit)
    return t


def r_at(H: HopfAlgebra, R: Tensor, n: int, k1: int, k2: int) -> Tensor:
    """``R_{k1,k2}`` in ``H^{⊗n}`` (1-based legs)."""
    return embed_legs(R, n, k1, k2, H.unit)


def _left_mult_rows(H: HopfAlgebra, R: Tensor) -> list:
    """Left multiplication by ``R`` on ``H⊗H`` as one sparse equation per output (a, b)."""
    d = H.dim
    lm = einsum("pq,pxa,qyb->abxy", R, H.mul, H.mul)
    eqs = {}
    for (a, b, x, y), v in lm.nonzero():
        eqs.setdefault(a * d + b, {})[x * d + y] = v
    return [eqs.get(i, {}) for i in range(d * d)]


def zero_divisor_witness(H: HopfAlgebra, R: Tensor) -> dict | None:
    """A nonzero ``x ∈ H⊗H`` with ``R·x = 0``, in basis coordinates, if one exists."""
    d = H.dim
    _, kernel = solve_sparse(H.field, _left_mult_rows(H, R), d * d)
    if not kernel:
        return None
    f = H.field
    x = {f"{H.labels[i // d]}⊗{H.labels[i % d]}": f.format(v)
         for i, v in enumerate(kernel[0]) if v != 0}
    return {"x": x, "R·x": "0"}


def invert_in_tensor_square(H: HopfAlgebra, R: Tensor) -> Tensor | None:
    """Two-sided inverse of ``R`` in ``H ⊗ H``, or None when ``R`` is not invertible."""
    if R.field != H.field:
        raise FieldMismatch(f"{R.field} vs {H.field}")
    d = H.dim
    n = d * d
    rows = _left_mult_rows(H, R)
    rhs = H.unit2.reshape((n,)).entries()
    sol = solve_sparse(H.field, rows, n, rhs)
    if sol is None or sol[1]:
        return None
    X = Tensor.from_scalars(H.field, sol[0], (d, d))
    one = H.unit2
    if mul2(H, R, X) != one or mul2(H, X, R) != one:
        return None
    return X


# -- the structure ---------------------------------------------------------

class SqtStructure:
    """A Hopf algebra with a semiquasitriangular structure ``R``.

    With ``check=True`` (the default) :func:`check_sqt` runs at
    construction and :class:`InvalidStructure` is raised on failure.
    ``check=False`` builds an unchecked candidate.
    """

    def __init__(self, H: HopfAlgebra, R: Tensor, *, name: str = "",
                 claims_quasitriangular: bool = False, check: bool = True):
        if R.dims != (H.dim, H.dim):
            raise ValueError(f"R has shape {R.dims}, expected {(H.dim, H.dim)}")
        if R.field != H.field:
            raise FieldMismatch(f"{R.field} vs {H.field}")
        self.H, self.R, self.name = H, R, name or H.name
        self.claims_quasitriangular = claims_quasitriangular
        if check:
            rep = check_sqt(H, R)
            if not rep.passed:
                raise InvalidStructure(rep, self.name)

    def __repr__(self):
        return f"SqtStructure({self.name or '?'}, dim={self.dim})"

    @property
    def dim(self) -> int:
        return self.H.dim

    @property
    def field(self):
        return self.H.field

    @cached_property
    def R_inv(self) -> Tensor | None:
        return invert_in_tensor_square(self.H, self.R)

    @cached_property
    def nu(self) -> Tensor:
        """ν as a 3-leg tensor ``[h, first, second]``."""
        return sweedler(self.H, NU_FORMULA, R=self.R)

    @cached_property
    def nu_tilde(self) -> Tensor:
        """``ν̃ = (S⊗S) ν S^{-1}`` as a 3-leg tensor."""
        H = self.H
        return einsum("hx,xpq,pa,qb->hab", H.antipode_inv, self.nu, H.antipode, H.antipode)

    def is_trivial(self) -> bool:
        return self.R == self.H.unit2


def compute_nu(S: SqtStructure, h: Tensor) -> Tensor:
    return einsum("h,hab->ab", h, S.nu)


def compute_nu_tilde(S: SqtStructure, h: Tensor) -> Tensor:
    return einsum("h,hab->ab", h, S.nu_tilde)


def _central_check(H, name, anchor, t):
    """Every vector along the last leg of ``t = [h, ..., z]`` lies in Z(H)."""
    d = H.dim
    rest = t.dims[1:-1]
    flat = t.reshape((d, int(np.prod(rest, dtype=int)), d))
    hit = second_leg_central(H, flat)
    if hit is None:
        return Check(name, anchor, PASS)
    h, a = hit
    legs = np.unravel_index(a, rest)
    return Check(name, anchor, FAIL, {
        "h": H.labels[h], "other_legs": [H.labels[int(i)] for i in legs],
        "central_leg": [H.field.format(flat[h, a, b]) for b in range(d)],
    })


def check_sqt(H: HopfAlgebra, R: Tensor) -> Report:
    """Invertibility of ``R`` and all six conditions, without short-circuiting."""
    rep = Report()
    inv = invert_in_tensor_square(H, R)
    rep.add(boolean("R invertible", "Def 1.1 (R invertible)", inv is not None,
                    None if inv is not None else
                    (zero_divisor_witness(H, R)
                     or {"reason": "R has no two-sided inverse in H⊗H"})))
    for k, (lhs, rhs) in enumerate(CONDITIONS, 1):
        rep.add(compare(f"condition ({k})", f"Def 1.1 ({k})",
                        sweedler(H, lhs, R=R), sweedler(H, rhs, R=R)))
    nu = sweedler(H, NU_FORMULA, R=R)
    rep.add(_central_check(H, "condition (5)", "Def 1.1 (5)", nu))
    rep.add(compare("condition (6)", "Def 1.1 (6)", nu, sweedler(H, NU_FORMULA_6, R=R)))
    return rep


def check_quasitriangular(H: HopfAlgebra, R: Tensor) -> Report:
    """The intertwining identity ``Δ^cop(h) R = R Δ(h)`` on every basis element."""
    rep = Report()
    rep.add(compare("Δ^cop(h)R = RΔ(h)", "quasitriangular axiom",
                    sweedler(H, "h2 R1 | h1 R2", R=R), sweedler(H, "R1 h1 | R2 h2", R=R)))
    return rep


# -- Propositions 1.2 - 1.4 ------------------------------------------------

def _delta_on_leg(H, R, n, leg):
    """``(Δ^n ⊗ H)(R)`` (leg=0) or ``(H ⊗ Δ^n)(R)`` (leg=1) as an (n+2)-leg tensor."""
    outs = _LEGS[2:n + 3]
    if leg == 0:
        return einsum(f"ab,a{outs}->{outs}b", R, H.delta(n))
    return einsum(f"ab,b{outs}->a{outs}", R, H.delta(n))


def _swap(t: Tensor, i: int, j: int) -> Tensor:
    perm = list(range(t.legs))
    perm[i], perm[j] = perm[j], perm[i]
    return t.transpose(tuple(perm))


def check_prop12(S: SqtStructure, n: int, max_n: int = 3) -> Report:
    """Items (1)-(4) of the iterated coproduct identities in ``H^{⊗(n+2)}``."""
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be in 1..{max_n}, got {n}")
    H, R = S.H, S.R
    N = n + 2
    rep = Report()
    left = _delta_on_leg(H, R, n, 0)
    right = _delta_on_leg(H, R, n, 1)

    prod = r_at(H, R, N, 1, N)
    for k in range(2, n + 2):
        prod = mul_local(H, prod, R, (k - 1, N - 1))
    rep.add(compare(f"Prop 1.2 (1), n={n}", "Prop 1.2 (1)", left, prod))

    prod = r_at(H, R, N, 1, N)
    for k in range(N - 1, 1, -1):
        prod = mul_local(H, prod, R, (0, k - 1))
    rep.add(compare(f"Prop 1.2 (2), n={n}", "Prop 1.2 (2)", right, prod))

    for i in range(1, n + 1):
        # legs i+1, i+2 (1-based) are the swapped Δ^n outputs
        lhs = mul_local(H, _swap(right, i, i + 1), R, (i, i + 1))
        rhs = mul_local(H, right, R, (i, i + 1), left=True)
        rep.add(compare(f"Prop 1.2 (3), n={n}, i={i}", "Prop 1.2 (3)", lhs, rhs))
    for i in range(1, n + 1):
        lhs = mul_local(H, _swap(left, i - 1, i), R, (i - 1, i))
        rhs = mul_local(H, left, R, (i - 1, i), left=True)
        rep.add(compare(f"Prop 1.2 (4), n={n}, i={i}", "Prop 1.2 (4)", lhs, rhs))
    return rep


def check_prop13(S: SqtStructure) -> Report:
    H, R, Ri = S.H, S.R, S.R_inv
    rep = Report()
    rep.add(compare("(ε⊗H)(R) = 1", "Prop 1.3", einsum("ab,a->b", R, H.counit), H.unit))
    rep.add(compare("(H⊗ε)(R) = 1", "Prop 1.3", einsum("ab,b->a", R, H.counit), H.unit))
    if Ri is None:
        for name in ("(S⊗H)(R) = R⁻¹", "(H⊗S)(R⁻¹) = R"):
            rep.add(Check(name, "Prop 1.3", SKIPPED, detail="R not invertible"))
    else:
        rep.add(compare("(S⊗H)(R) = R⁻¹", "Prop 1.3", einsum("ab,ac->cb", R, H.antipode), Ri))
        rep.add(compare("(H⊗S)(R⁻¹) = R", "Prop 1.3", einsum("ab,bc->ac", Ri, H.antipode), R))
    rep.add(compare("(S⊗S)(R) = R", "Prop 1.3",
                    einsum("ab,ac,bd->cd", R, H.antipode, H.antipode), R))
    return rep


def qybe_sides(S: SqtStructure):
    """``(R12 R13 R23, R23 R13 R12)`` in ``H^{⊗3}``."""
    H, R = S.H, S.R
    lhs = mul_local(H, mul_local(H, r_at(H, R, 3, 1, 2), R, (0, 2)), R, (1, 2))
    rhs = mul_local(H, mul_local(H, r_at(H, R, 3, 2, 3), R, (0, 2)), R, (0, 1))
    return lhs, rhs


def qybe_check(S: SqtStructure) -> Check:
    return compare("QYBE R12R13R23 = R23R13R12", "Prop 1.4", *qybe_sides(S))


def check_qybe(S: SqtStructure) -> bool:
    return qybe_check(S).ok


# -- Proposition 1.9 and ν̃ -------------------------------------------------

def check_prop19(S: SqtStructure) -> Report:
    H, R = S.H, S.R
    rep = Report()
    for k, f in enumerate(NU_FORMULAS_19, 1):
        rep.add(compare(f"Prop 1.9 expression {k}", "Prop 1.9", sweedler(H, f, R=R), S.nu))
    for k, f in enumerate(NU_TILDE_FORMULAS, 1):
        rep.add(compare(f"ν̃ expression {k}", "after Prop 1.9", sweedler(H, f, R=R), S.nu_tilde))
    rep.add(_central_check(H, "ν̃(h) ∈ H⊗Z(H)", "after Prop 1.9", S.nu_tilde))
    return rep


def check_nu_properties(S: SqtStructure) -> Report:
    """Counitality, multiplicativity (Prop 2.3 proof), Lemma 2.2 and, if claimed, ν(h) = h⊗1."""
    H, nu = S.H, S.nu
    rep = Report()
    rep.add(compare("(id⊗ε)ν = id", "Def 1.1 (5) with Prop 1.3",
                    einsum("hab,b->ha", nu, H.counit), H.identity))
    rep.add(compare("ν(hl) = ν(h)ν(l)", "Prop 2.3 proof",
                    einsum("hlx,xab->hlab", H.mul, nu),
                    einsum("hpq,lrs,pra,qsb->hlab", nu, nu, H.mul, H.mul)))
    # [h, first, last, middle]: the middle leg of (H⊗Δ)ν(h) is tested for centrality
    split = einsum("hab,bcd->hadc", nu, H.comul)
    rep.add(_central_check(H, "(H⊗Δ)ν(h) ∈ H⊗Z(H)⊗H", "Lemma 2.2", split))
    if S.claims_quasitriangular:
        rep.add(compare("ν(h) = h⊗1", "Example 1.6", nu,
                        einsum("ha,b->hab", H.identity, H.unit)))
    return rep


def check_semicocommutative_case(S: SqtStructure) -> Report:
    """With ``R = 1⊗1``, ν is the adjoint coaction and ``S² = h2 S(h1) h3``."""
    rep = Report()
    if not S.is_trivial():
        rep.add(Check("ν = Ad", "Example 1.5", SKIPPED, detail="R ≠ 1⊗1"))
        return rep
    H = S.H
    rep.add(compare("ν = Ad", "Example 1.5", S.nu, sweedler(H, "h2 | S(h1) h3")))
    rep.add(compare("S² = h2 S(h1) h3", "intro Proposition", H.antipode_sq,
                    sweedler(H, "h2 S(h1) h3")))
    return rep


# -- transforms -------------------------------------------------------------

def transform_tau_rinv(S: SqtStructure, *, check: bool = True) -> SqtStructure:
    if S.R_inv is None:
        raise ValueError("R is not invertible")
    return SqtStructure(S.H, S.R_inv.transpose(), name=f"{S.name} τ(R⁻¹)",
                        claims_quasitriangular=S.claims_quasitriangular, check=check)


def transform_op(S: SqtStructure, *, check: bool = True) -> SqtStructure:
    return SqtStructure(opposite(S.H), S.R.transpose(), name=f"{S.name}^op",
                        claims_quasitriangular=S.claims_quasitriangular, check=check)


def transform_cop(S: SqtStructure, *, check: bool = True) -> SqtStructure:
    if S.R_inv is None:
        raise ValueError("R is not invertible")
    return SqtStructure(coopposite(S.H), S.R_inv, name=f"{S.name}^cop",
                        claims_quasitriangular=S.claims_quasitriangular, check=check)


def tensor_structure(S1: SqtStructure, S2: SqtStructure, *, check: bool = True) -> SqtStructure:
    """``(H⊗L, (H⊗τ⊗L)(R_H ⊗ R_L))``."""
    if S1.field != S2.field:
        raise FieldMismatch(f"{S1.field} vs {S2.field}")
    HL = tensor_hopf(S1.H, S2.H)
    n = HL.dim
    R = einsum("ab,cd->acbd", S1.R, S2.R).reshape((n, n))
    return SqtStructure(HL, R, name=f"{S1.name}⊗{S2.name}",
                        claims_quasitriangular=S1.claims_quasitriangular and S2.claims_quasitriangular,
                        check=check)


# -- sub-Hopf algebras -----------------------------------------------------

def check_substructure(S: SqtStructure, sub_basis) -> bool:
    """True iff ``span(sub_basis)`` is a sub-Hopf algebra with ``R`` in ``L⊗L``."""
    H = S.H
    d = H.dim
    basis = echelon_basis(list(sub_basis), H.field, d)
    if not basis:
        return False
    inside = lambda v: subspace_membership(v, basis)  # noqa: E731
    if not inside(H.unit):
        return False
    for x in basis:
        if not inside(einsum("i,ij->j", x, H.antipode)):
            return False
        for y in basis:
            if not inside(H.product(x, y)):
                return False
        # Δ(x) ∈ L⊗L: each leg's components in L
        dx = einsum("i,ijk->jk", x, H.comul)
        if not _two_leg_inside(dx, inside, d, H.field):
            return False
    return _two_leg_inside(S.R, inside, d, H.field)


def _two_leg_inside(t: Tensor, inside, d, field) -> bool:
    for row in range(d):
        if not inside(t.take(0, row)):
            return False
    for col in range(d):
        if not inside(t.take(1, col)):
            return False
    return True


# -- combined report for one structure --------------------------------------

def structure_report(S: SqtStructure, *, prop12_max_n: int = 3) -> Report:
    rep = Report()
    rep.extend(check_sqt(S.H, S.R))
    if S.claims_quasitriangular:
        rep.extend(check_quasitriangular(S.H, S.R))
    rep.extend(check_prop13(S))
    rep.add(qybe_check(S))
    for n in range(1, prop12_max_n + 1):
        rep.extend(check_prop12(S, n, max_n=max(prop12_max_n, 3)))
    rep.extend(check_prop19(S))
    rep.extend(check_nu_properties(S))
    rep.extend(check_semicocommutative_case(S))
    return rep


__all__ = [
    "SqtStructure", "InvalidStructure", "invert_in_tensor_square", "zero_divisor_witness", "compute_nu",
    "compute_nu_tilde", "check_sqt", "check_quasitriangular", "check_prop12",
    "check_prop13", "check_qybe", "qybe_check", "qybe_sides", "check_prop19",
    "check_nu_properties", "check_semicocommutative_case", "transform_tau_rinv",
    "transform_op", "transform_cop", "tensor_structure", "check_substructure",
    "structure_report", "mul2", "mul_local", "r_at", "tensor_unit",
]
